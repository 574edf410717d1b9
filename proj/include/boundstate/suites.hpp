#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace boundstate {

// Pass/fail tally for one property suite; keeps the first few failure labels.
class Checker {
public:
    explicit Checker(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& what) {
        if (ok) {
            ++passed_;
            return;
        }
        ++failed_;
        if (failures_.size() < 40) failures_.push_back(what);
    }

    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (got == want) {
            ++passed_;
            return;
        }
        std::ostringstream os;
        os << what << ": got " << render(got) << ", want " << render(want);
        expect(false, os.str());
    }

    // Runs f and records an exception as a failure instead of aborting the suite.
    template <class F>
    void guarded(const std::string& what, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            expect(false, what + ": threw " + e.what());
        }
    }

    const std::string& name() const { return name_; }
    long passed() const { return passed_; }
    long failed() const { return failed_; }
    bool ok() const { return failed_ == 0 && passed_ > 0; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    template <class T>
    static std::string render(const T& v) {
        if constexpr (requires { v.str(); }) {
            return v.str();
        } else {
            std::ostringstream os;
            os << v;
            return os.str();
        }
    }

    std::string name_;
    long passed_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
};

struct Suite {
    std::string name;
    std::string module;
    std::function<void(Checker&)> body;
};

// Every module invariant as a runnable suite, in a fixed order.
const std::vector<Suite>& all_suites();
// Runs the suites whose name or module matches `selector` ("all" runs everything).
std::vector<Checker> run_suites(const std::string& selector);

// Individual suites the acceptance binary calls directly.
void suite_diharmonic(Checker& c);
void suite_harmonic(Checker& c);
void suite_gamma_ratio(Checker& c);
void suite_eps_ring(Checker& c);
void suite_hypergeometric(Checker& c);
void suite_laguerre(Checker& c);
void suite_lagint_tables(Checker& c);
void suite_lagint_oracle(Checker& c, int random_specs);
void suite_lagint_sums(Checker& c);
void suite_coulomb_catalog(Checker& c, long nmax);
void suite_coulomb_relations(Checker& c);
void suite_coulomb_wavefunctions(Checker& c);
void suite_dimreg_coefficients(Checker& c);
void suite_dimreg_table(Checker& c, long nmax);
void suite_dimreg_identities(Checker& c);
void suite_dimreg_shooting(Checker& c);
void suite_dimreg_energy_order(Checker& c);
void suite_dimreg_pole(Checker& c);
void suite_dimreg_contact(Checker& c);
void suite_cx1(Checker& c);
void suite_fourier_kernels(Checker& c);
void suite_brackets_table(Checker& c);
void suite_brackets_duality(Checker& c);
void suite_bracket_lnq(Checker& c);

}  // namespace boundstate
