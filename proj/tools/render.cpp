#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "boundstate/errors.hpp"

namespace coulombdr {

using namespace boundstate;

json symbolic_json(const SymExpr& e) {
    json terms = json::object();
    for (const auto& [m, c] : e.terms()) terms[m.name()] = c.str();
    return {{"terms", terms}, {"rendered", e.str()}};
}

json series_json(const EpsSeries& s) {
    json coeffs = json::array();
    int lo = std::min(s.leading_order(), s.truncation());
    for (int k = lo; k <= s.truncation(); ++k) coeffs.push_back(symbolic_json(s.coeff(k))["terms"]);
    return {{"lowest_order", lo}, {"truncation", s.truncation()}, {"coefficients", coeffs}, {"rendered", s.str()}};
}

namespace {

Symbol symbol_named(const std::string& name) {
    using K = Symbol::Kind;
    if (name == "gammaE") return {K::EulerGamma, ""};
    if (name == "zeta2") return {K::Zeta2, ""};
    if (name == "ln2") return {K::Ln2, ""};
    if (name == "lnpi") return {K::LnPi, ""};
    if (name.starts_with("Lambda[") && name.ends_with("]")) return {K::LogScale, name.substr(7, name.size() - 8)};
    throw DomainError("unknown basis symbol '" + name + "'");
}

}  // namespace

SymExpr symbolic_from_json(const json& terms) {
    SymExpr out;
    for (const auto& [key, val] : terms.items()) {
        Monomial m;
        if (key != "1") {
            if (key.ends_with("^2")) {
                Symbol s = symbol_named(key.substr(0, key.size() - 2));
                m.factors = {s, s};
            } else {
                std::stringstream ss(key);
                for (std::string part; std::getline(ss, part, '*');) m.factors.push_back(symbol_named(part));
                std::sort(m.factors.begin(), m.factors.end());
            }
        }
        out += SymExpr::term(m, Rat::parse(val.get<std::string>()));
    }
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

namespace {

// display width, counting UTF-8 code points
size_t width(const std::string& s) {
    return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

}  // namespace

std::string pretty_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> w;
    for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) {
            if (w.size() <= i) w.push_back(0);
            w[i] = std::max(w[i], width(r[i]));
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(w[i] - width(r[i]) + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace coulombdr
