#include "boundstate/errors.hpp"
#include "boundstate/suites.hpp"

namespace boundstate {

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> s = {
        {"harmonic", "exactnum", suite_harmonic},
        {"diharmonic", "exactnum", suite_diharmonic},
        {"gamma-ratio", "exactnum", suite_gamma_ratio},
        {"eps-ring", "exactnum", suite_eps_ring},
        {"hypergeometric", "exactnum", suite_hypergeometric},
        {"laguerre", "laguerre", suite_laguerre},
        {"lagint-tables", "lagint", suite_lagint_tables},
        {"lagint-oracle", "lagint", [](Checker& c) { suite_lagint_oracle(c, 200); }},
        {"lagint-sums", "lagint", suite_lagint_sums},
        {"coulomb-catalog", "coulomb", [](Checker& c) { suite_coulomb_catalog(c, 10); }},
        {"coulomb-relations", "coulomb", suite_coulomb_relations},
        {"coulomb-wavefunctions", "coulomb", suite_coulomb_wavefunctions},
        {"dimreg-coefficients", "dimreg", suite_dimreg_coefficients},
        {"dimreg-table", "dimreg", [](Checker& c) { suite_dimreg_table(c, 10); }},
        {"dimreg-identities", "dimreg", suite_dimreg_identities},
        {"dimreg-shooting", "dimreg", suite_dimreg_shooting},
        {"dimreg-energy-order", "dimreg", suite_dimreg_energy_order},
        {"dimreg-pole", "dimreg", suite_dimreg_pole},
        {"dimreg-contact", "dimreg", suite_dimreg_contact},
        {"cx1", "dimreg", suite_cx1},
        {"fourier-kernels", "brackets", suite_fourier_kernels},
        {"brackets-table", "brackets", suite_brackets_table},
        {"brackets-duality", "brackets", suite_brackets_duality},
        {"bracket-lnq", "brackets", suite_bracket_lnq},
    };
    return s;
}

std::vector<Checker> run_suites(const std::string& selector) {
    std::vector<Checker> out;
    for (const auto& s : all_suites()) {
        if (selector != "all" && selector != s.name && selector != s.module) continue;
        Checker c(s.name);
        c.guarded(s.name, [&] { s.body(c); });
        out.push_back(std::move(c));
    }
    if (out.empty()) {
        std::string names;
        for (const auto& s : all_suites()) names += " " + s.name;
        throw CatalogError("no suite or module named '" + selector + "'; suites:" + names);
    }
    return out;
}

}  // namespace boundstate
