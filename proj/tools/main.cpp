#include <CLI11.hpp>
#include <cmath>
#include <future>
#include <iostream>
#include <optional>

#include "boundstate/brackets.hpp"
#include "boundstate/cx1.hpp"
#include "boundstate/dimreg.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/suites.hpp"
#include "render.hpp"

using namespace boundstate;
using namespace coulombdr;

namespace {

constexpr int kUsage = 1, kVerifyFailed = 2, kConvergence = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string n = "1", l;
    std::vector<std::string> ops, brackets;
    double eps = 0;
    bool eps_given = false;
    int order = 1;
    std::optional<double> mr, zalpha, mu, kappa;
    std::string format = "pretty";
    std::string suite = "all";
    std::string c1 = "1", c2 = "1", m1 = "2", m2 = "2";
};

// "3" or "1-10"
std::pair<long, long> parse_range(const std::string& s, const char* what) {
    try {
        size_t dash = s.find('-', 1);
        long a = std::stol(s.substr(0, dash));
        long b = dash == std::string::npos ? a : std::stol(s.substr(dash + 1));
        if (a > b) throw UsageError(std::string(what) + " range '" + s + "' is empty");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError(std::string("bad ") + what + " '" + s + "'; use N or A-B");
    }
}

std::vector<QuantumState> states(const Options& o) {
    auto [n0, n1] = parse_range(o.n, "--n");
    std::vector<QuantumState> out;
    for (long n = n0; n <= n1; ++n) {
        long lo = 0, hi = n - 1;
        if (!o.l.empty()) std::tie(lo, hi) = parse_range(o.l, "--l");
        // a single n keeps out-of-range ℓ so the state itself reports the violation
        if (n0 != n1) hi = std::min(hi, n - 1);
        for (long l = lo; l <= hi; ++l) out.emplace_back(n, l);
    }
    if (out.empty()) throw UsageError("no valid (n, ℓ) in the requested ranges");
    return out;
}

QuantumState single_state(const Options& o) {
    auto [n0, n1] = parse_range(o.n, "--n");
    long l = 0;
    if (!o.l.empty()) {
        auto [l0, l1] = parse_range(o.l, "--l");
        if (l0 != l1) throw UsageError("this command takes a single ℓ");
        l = l0;
    }
    if (n0 != n1) throw UsageError("this command takes a single n");
    return QuantumState(n0, l);
}

bool physical(const Options& o) { return o.mr || o.zalpha || o.mu || o.kappa; }

PhysScale scale(const Options& o) {
    PhysScale s;
    if (o.mr) s.mr = *o.mr;
    if (o.zalpha) s.zalpha = *o.zalpha;
    if (o.mu) s.mu = Real(*o.mu);
    if (o.kappa) s.kappa = Real(*o.kappa);
    return s;
}

// One evaluated entry: an exact value or Laurent data in units π^p π φ̄² μ̄^{kε}.
struct Evaluated {
    std::string tag;
    bool laurent = false;
    Value exact;
    EpsSeries series;
    int pi_power = 0;
    int mubar = 0;
    int dimension = 0;

    std::string units() const {
        if (!laurent) return exact.units.str();
        std::string s = pi_power ? "π^" + std::to_string(pi_power) + " " : "";
        return s + "π φ̄² μ̄^(" + std::to_string(mubar) + "ε), m_r = Zα = 1";
    }
    std::string rendered() const {
        std::string u = units();
        return (laurent ? "(" + series.str() + ")" : exact.coeff.str()) + (u.empty() ? "" : " " + u);
    }
    json symbolic() const { return laurent ? series_json(series) : symbolic_json(exact.coeff); }
};

bool is_divergent(const std::string& tag) {
    for (const auto& d : divergent_catalog())
        if (d.tag == tag) return true;
    return false;
}

Evaluated eval_op(const std::string& tag, const QuantumState& st) {
    Evaluated e;
    e.tag = tag;
    if (is_divergent(tag)) {
        DivergentValue v = divergent_expectation(tag, st);
        e.laurent = v.laurent;
        e.dimension = divergent_op(tag).units.mr;
        if (v.laurent) {
            e.series = v.split.series;
            e.mubar = v.split.mubar;
        } else {
            e.exact = v.exact;
        }
        return e;
    }
    e.exact = expectation_closed(tag, st);
    e.dimension = e.exact.units.mr;
    return e;
}

Evaluated eval_bracket(const std::string& tag, const QuantumState& st) {
    Evaluated e;
    e.tag = tag;
    e.dimension = bracket_spec(tag).units.mr;
    if (tag == "ln q") {
        e.exact = bracket_lnq(st);
        return e;
    }
    BracketValue b = bracket(tag, st);
    e.laurent = b.laurent;
    if (b.laurent) {
        e.series = b.split.series;
        e.mubar = b.split.mubar;
        e.pi_power = b.pi_power;
    } else {
        e.exact = b.exact;
    }
    return e;
}

json inputs_json(const Options& o, const std::vector<std::string>& extra = {}) {
    json in = {{"n", o.n}, {"format", o.format}};
    if (!o.l.empty()) in["l"] = o.l;
    if (!o.ops.empty()) in["op"] = o.ops;
    if (!o.brackets.empty()) in["bracket"] = o.brackets;
    if (o.eps_given) in["eps"] = o.eps;
    if (o.mr) in["mr"] = *o.mr;
    if (o.zalpha) in["zalpha"] = *o.zalpha;
    if (o.mu) in["mu"] = *o.mu;
    if (o.kappa) in["kappa"] = *o.kappa;
    for (size_t i = 0; i + 1 < extra.size(); i += 2) in[extra[i]] = extra[i + 1];
    return in;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- commands

int cmd_eval(const Options& o) {
    if (o.ops.size() + o.brackets.size() != 1) throw UsageError("eval takes exactly one --op or --bracket");
    QuantumState st = single_state(o);
    Evaluated e = o.ops.empty() ? eval_bracket(o.brackets[0], st) : eval_op(o.ops[0], st);

    std::optional<double> numeric;
    std::string nunits;
    if (e.laurent && o.eps_given) {
        if (o.eps == 0) throw UsageError("a Laurent value needs a nonzero --eps for a numeric rendering");
        PhysScale s = scale(o);
        numeric = evaluate(e.series, Real(o.eps), s.logs(st.n)).convert_to<double>();
        nunits = e.units();
    } else if (!e.laurent && physical(o)) {
        numeric = scale(o).restore(e.exact, st.n).convert_to<double>();
        nunits = "mass^" + std::to_string(e.exact.units.mr) + " in the units of --mr";
    }

    if (o.format == "json") {
        json j = {{"command", "eval"}, {"inputs", inputs_json(o)}, {"dimension", e.dimension}};
        j["symbolic"] = e.symbolic();
        j["symbolic"]["units"] = e.units();
        j["kind"] = e.laurent ? "laurent" : "exact";
        if (numeric) {
            j["numeric"] = *numeric;
            j["units"] = nunits;
        } else {
            j["units"] = e.units();
        }
        emit(j);
    } else {
        std::cout << e.rendered() << "\n";
        if (numeric) std::cout << "≈ " << *numeric << " " << nunits << "\n";
    }
    return 0;
}

int cmd_table(const Options& o) {
    if (o.ops.empty() && o.brackets.empty()) throw UsageError("table needs at least one --op or --bracket");
    std::vector<std::pair<bool, std::string>> cols;
    for (const auto& t : o.ops) cols.emplace_back(false, t);
    for (const auto& t : o.brackets) cols.emplace_back(true, t);
    // validate tags up front so an unknown tag is a usage error, not a blank column
    for (const auto& [br, t] : cols) {
        if (br)
            bracket_spec(t);
        else if (!is_divergent(t))
            catalog_entry(t);
    }
    auto sts = states(o);

    // one task per grid row; results are collected in grid order
    using Row = std::vector<std::optional<Evaluated>>;
    std::vector<std::future<Row>> tasks;
    for (const auto& st : sts)
        tasks.push_back(std::async(std::launch::async, [&cols, st] {
            Row row;
            for (const auto& [br, t] : cols) {
                try {
                    row.push_back(br ? eval_bracket(t, st) : eval_op(t, st));
                } catch (const RequiresDimregError&) {
                    row.push_back(std::nullopt);  // outside the entry's ℓ range
                }
            }
            return row;
        }));
    std::vector<Row> rows;
    for (auto& f : tasks) rows.push_back(f.get());

    if (o.format == "json") {
        json out = json::array();
        for (size_t i = 0; i < sts.size(); ++i) {
            json vals = json::object();
            for (size_t k = 0; k < cols.size(); ++k) {
                const auto& e = rows[i][k];
                vals[cols[k].second] = e ? json{{"symbolic", e->symbolic()}, {"units", e->units()}} : json(nullptr);
            }
            out.push_back({{"n", sts[i].n}, {"l", sts[i].l}, {"values", vals}});
        }
        emit({{"command", "table"}, {"inputs", inputs_json(o)}, {"rows", out}});
    } else if (o.format == "csv") {
        std::string line = "n,l";
        for (const auto& c : cols) line += "," + csv_cell(c.second);
        std::cout << line << "\n";
        for (size_t i = 0; i < sts.size(); ++i) {
            line = std::to_string(sts[i].n) + "," + std::to_string(sts[i].l);
            for (const auto& e : rows[i]) line += "," + (e ? csv_cell(e->rendered()) : std::string());
            std::cout << line << "\n";
        }
    } else {
        std::vector<std::vector<std::string>> t{{"n", "ℓ"}};
        for (const auto& c : cols) t[0].push_back(c.second);
        for (size_t i = 0; i < sts.size(); ++i) {
            std::vector<std::string> r{std::to_string(sts[i].n), std::to_string(sts[i].l)};
            for (const auto& e : rows[i]) r.push_back(e ? e->rendered() : "-");
            t.push_back(r);
        }
        std::cout << pretty_table(t);
    }
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<Checker> res = run_suites(o.suite);
    bool ok = true;
    json arr = json::array();
    for (const auto& c : res) {
        ok = ok && c.ok();
        if (o.format == "json") {
            arr.push_back({{"suite", c.name()}, {"passed", c.passed()}, {"failed", c.failed()}, {"failures", c.failures()}});
        } else {
            std::cout << (c.ok() ? "PASS " : "FAIL ") << c.name() << "  " << c.passed() << "/" << c.passed() + c.failed()
                      << "\n";
            for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
        }
    }
    if (o.format == "json") emit({{"command", "verify"}, {"inputs", {{"suite", o.suite}}}, {"suites", arr}, {"ok", ok}});
    return ok ? 0 : kVerifyFailed;
}

int cmd_dimreg(const Options& o) {
    QuantumState st = single_state(o);
    if (!o.eps_given) throw UsageError("dimreg needs --eps");
    double mu = o.mu.value_or(1.0);
    DimRegEigen e = eigenvalue_shoot(st, o.eps, mu);
    PhysScale ps;
    ps.mu = Real(mu);
    ScaleValues logs = ps.logs(st.n);
    double En = -0.5 / static_cast<double>(st.n * st.n);
    EpsSeries es = energy_expansion(st).truncated(o.order), ns = nbar_expansion(st).truncated(o.order);
    double E_series = evaluate(es, Real(o.eps), logs).convert_to<double>();
    double n_series = evaluate(ns, Real(o.eps), logs).convert_to<double>();
    double diff = std::abs(e.Ebar - E_series) / std::abs(En);

    if (o.format == "json") {
        json j = {{"command", "dimreg"},
                  {"inputs", inputs_json(o)},
                  {"dimension", 1},
                  {"symbolic", {{"nbar", series_json(ns)}, {"Ebar", series_json(es)}}},
                  {"numeric", e.Ebar},
                  {"units", "m_r (Zα)^2"},
                  {"details",
                   {{"nbar_shoot", e.nbar},
                    {"nbar_series", n_series},
                    {"gammabar", e.gammabar},
                    {"Ebar_shoot", e.Ebar},
                    {"Ebar_series", E_series},
                    {"relative_difference", diff}}}};
        emit(j);
    } else {
        std::cout << "state " << st.str() << ", ε = " << o.eps << ", μ = " << mu << " (m_r Zα)\n";
        std::cout.precision(14);
        std::cout << "n̄  shooting " << e.nbar << "   series " << n_series << "   [" << ns.str() << "]\n";
        std::cout << "Ē  shooting " << e.Ebar << "   series " << E_series << "   [" << es.str() << "]\n";
        std::cout << "|Ē_shoot − Ē_series|/|E_n| = " << diff << "\n";
    }
    return 0;
}

int cmd_cx1(const Options& o) {
    Rat c1 = Rat::parse(o.c1), c2 = Rat::parse(o.c2), m1 = Rat::parse(o.m1), m2 = Rat::parse(o.m2);
    if (m1.sign() <= 0 || m2.sign() <= 0) throw UsageError("masses must be positive");
    auto sts = states(o);
    json arr = json::array();
    std::vector<std::vector<std::string>> t{{"n", "ℓ", "ΔE"}};
    for (const auto& st : sts) {
        Cx1Shift s = cx1_energy_shift(st, c1, c2, m1, m2);
        std::string units = s.laurent ? "π φ̄² (Zα)³ μ̄^(2ε) / m_r²" : "m_r (Zα)⁶";
        json sym = s.laurent ? series_json(s.series) : symbolic_json(s.exact);
        arr.push_back({{"n", st.n},
                       {"l", st.l},
                       {"branch", s.laurent ? "laurent" : "exact"},
                       {"prefactor", s.prefactor.str()},
                       {"symbolic", sym},
                       {"units", units}});
        t.push_back({std::to_string(st.n), std::to_string(st.l),
                     (s.laurent ? "(" + s.series.str() + ")" : s.exact.str()) + " " + units});
    }
    if (o.format == "json") {
        emit({{"command", "demo-cx1"},
              {"inputs", inputs_json(o, {"c1", o.c1, "c2", o.c2, "m1", o.m1, "m2", o.m2})},
              {"dimension", 1},
              {"results", arr}});
    } else {
        std::cout << "ΔE = −4 m_r (c1/m1⁴ + c2/m2⁴) ⟨(V̄′)²⟩, c1 = " << o.c1 << ", c2 = " << o.c2 << ", m1 = " << o.m1
                  << ", m2 = " << o.m2 << " (units of m_r)\n";
        std::cout << pretty_table(t);
    }
    return 0;
}

void state_flags(CLI::App* a, Options& o) {
    a->add_option("--n", o.n, "principal quantum number, N or A-B");
    a->add_option("--l", o.l, "angular momentum, L or A-B (default: all)");
}

void format_flag(CLI::App* a, Options& o, std::vector<std::string> allowed) {
    a->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
}

void phys_flags(CLI::App* a, Options& o) {
    a->add_option("--mr", o.mr, "reduced mass");
    a->add_option("--zalpha", o.zalpha, "Zα");
    a->add_option("--mu", o.mu, "MS-bar scale μ");
    a->add_option("--kappa", o.kappa, "log scale κ of ⟨ln q⟩");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Coulomb bound-state expectation values, D-dimensional poles and momentum brackets"};
    app.require_subcommand(1);
    Options o;

    auto* ev = app.add_subcommand("eval", "evaluate one expectation value or bracket");
    state_flags(ev, o);
    ev->add_option("--op", o.ops, "coordinate-space operator tag");
    ev->add_option("--bracket", o.brackets, "momentum-space bracket tag");
    ev->add_option("--eps", o.eps, "ε for a numeric rendering of Laurent data");
    phys_flags(ev, o);
    format_flag(ev, o, {"json", "pretty"});

    auto* tb = app.add_subcommand("table", "sweep (n, ℓ) over tags");
    state_flags(tb, o);
    tb->add_option("--op", o.ops, "operator tags");
    tb->add_option("--bracket", o.brackets, "bracket tags");
    format_flag(tb, o, {"json", "csv", "pretty"});

    auto* vf = app.add_subcommand("verify", "run property suites");
    vf->add_option("--suite", o.suite, "suite or module name, or all");
    format_flag(vf, o, {"json", "pretty"});

    auto* dr = app.add_subcommand("dimreg", "n̄ and Ē at finite ε: shooting vs expansion");
    state_flags(dr, o);
    dr->add_option("--eps", o.eps, "ε, |ε| ≤ 0.05")->required();
    dr->add_option("--order", o.order, "highest ε power kept in the expansions (0 or 1)");
    dr->add_option("--mu", o.mu, "MS-bar scale μ in units of m_r Zα");
    format_flag(dr, o, {"json", "pretty"});

    auto* cx = app.add_subcommand("demo-cx1", "energy shift from the (V̄′)² contact operator");
    state_flags(cx, o);
    cx->add_option("--c1", o.c1, "Wilson coefficient c1 (rational)");
    cx->add_option("--c2", o.c2, "Wilson coefficient c2 (rational)");
    cx->add_option("--m1", o.m1, "m1 in units of m_r (rational)");
    cx->add_option("--m2", o.m2, "m2 in units of m_r (rational)");
    format_flag(cx, o, {"json", "pretty"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    o.eps_given = ev->count("--eps") + dr->count("--eps") > 0;
    if (o.order < 0 || o.order > 1) {
        std::cerr << "error: --order must be 0 or 1\n";
        return kUsage;
    }

    try {
        if (*ev) return cmd_eval(o);
        if (*tb) return cmd_table(o);
        if (*vf) return cmd_verify(o);
        if (*dr) return cmd_dimreg(o);
        if (*cx) return cmd_cx1(o);
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kConvergence;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
