#include <doctest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(COULOMBDR) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    for (size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool round_trips(const std::string& out) {
    return nlohmann::json::parse(out).dump(2) + "\n" == out;
}

}  // namespace

TEST_CASE("eval") {
    Run r = run("eval --op r^-1 --n 3 --l 1");
    CHECK(r.status == 0);
    CHECK(r.out == "1/9 (m_r Zα)\n");
    Run j = run("eval --op r^-1 --n 3 --l 1 --format json");
    REQUIRE(j.status == 0);
    auto v = nlohmann::json::parse(j.out);
    CHECK(v["command"] == "eval");
    CHECK(v["dimension"] == 1);
    CHECK(v["symbolic"]["terms"]["1"] == "1/9");
    CHECK(round_trips(j.out));
}

TEST_CASE("eval with parameters and Laurent data") {
    Run r = run("eval --op r^-1 --n 1 --l 0 --mr 0.5 --zalpha 0.1 --format json");
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["numeric"].get<double>() == doctest::Approx(0.05));
    CHECK(round_trips(r.out));
    Run l = run("eval --op \"V'^2\" --n 1 --l 0 --format json");
    REQUIRE(l.status == 0);
    auto v = nlohmann::json::parse(l.out);
    CHECK(v["kind"] == "laurent");
    CHECK(v["symbolic"]["lowest_order"] == -1);
    CHECK(round_trips(l.out));
    Run b = run("eval --bracket 'ln q' --n 2 --l 0 --kappa 1 --format json");
    CHECK(b.status == 0);
    CHECK(round_trips(b.out));
}

TEST_CASE("table") {
    Run r = run("table --op r^-1 --op r^-3 --n 1-3 --format csv");
    REQUIRE(r.status == 0);
    CHECK(r.out.starts_with("n,l,r^-1,r^-3\n1,0,1 (m_r Zα),\n"));
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
    Run j = run("table --bracket 1/q^2 --n 1-4 --format json");
    CHECK(j.status == 0);
    CHECK(nlohmann::json::parse(j.out)["rows"].size() == 10);
    CHECK(round_trips(j.out));
}

TEST_CASE("verify, dimreg and demo-cx1") {
    CHECK(run("verify --suite laguerre").status == 0);
    Run d = run("dimreg --n 1 --l 0 --eps 0.001 --format json");
    REQUIRE(d.status == 0);
    auto v = nlohmann::json::parse(d.out);
    CHECK(v["details"]["nbar_shoot"].get<double>() == doctest::Approx(1).epsilon(1e-2));
    CHECK(v["details"]["relative_difference"].get<double>() < 1e-4);
    CHECK(round_trips(d.out));
    Run c = run("demo-cx1 --n 1-2 --format json");
    REQUIRE(c.status == 0);
    CHECK(nlohmann::json::parse(c.out)["results"].size() == 3);
    CHECK(round_trips(c.out));
}

TEST_CASE("errors and exit codes") {
    CHECK(run("eval --op nope --n 1").status == 1);
    CHECK(run("eval --op r^-3 --n 2 --l 0").status == 1);
    CHECK(run("eval --op r^-1 --n 2 --l 2").status == 1);
    CHECK(run("dimreg --n 1 --eps 0.3").status == 1);
    CHECK(run("verify --suite nothing").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("").status == 1);
    CHECK(run("--help").status == 0);
}
