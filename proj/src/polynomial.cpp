#include "jumploci/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace jumploci {

unsigned exponent_degree(const std::vector<unsigned>& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0u);
}

bool GradedLex::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    unsigned da = exponent_degree(a), db = exponent_degree(b);
    if (da != db)
        return da < db;
    // within a degree, earlier variables weigh more: x^2 < x*y < y^2
    return a > b;
}

Polynomial Polynomial::monomial(unsigned vars, std::vector<unsigned> exps, Rational c) {
    Polynomial p(vars);
    p.add_term(std::move(exps), c);
    return p;
}

void Polynomial::add_term(std::vector<unsigned> exps, const Rational& c) {
    if (exps.size() != vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(std::vector<unsigned>(vars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [exps, c] : terms_)
        d = std::max(d, exponent_degree(exps));
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (vars_ != rhs.vars_)
        throw std::invalid_argument("variable count mismatch");
    Polynomial out = *this;
    for (const auto& [exps, c] : rhs.terms_)
        out.add_term(exps, c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (vars_ != rhs.vars_)
        throw std::invalid_argument("variable count mismatch");
    Polynomial out(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<unsigned> exps(vars_);
            for (unsigned i = 0; i < vars_; ++i)
                exps[i] = ea[i] + eb[i];
            out.add_term(std::move(exps), ca * cb);
        }
    return out;
}

Polynomial Polynomial::truncated_below(unsigned bound) const {
    Polynomial out(vars_);
    for (const auto& [exps, c] : terms_)
        if (exponent_degree(exps) < bound)
            out.add_term(exps, c);
    return out;
}

std::string monomial_label(const std::vector<unsigned>& exps,
                           const std::vector<std::string>& var_names) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += var_names[i];
        if (exps[i] > 1)
            s += '^' + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [exps, c] : terms_) {
        if (!s.empty())
            s += " + ";
        std::string mono = monomial_label(exps, var_names);
        if (mono == "1")
            s += jumploci::to_string(c);
        else if (c == 1)
            s += mono;
        else
            s += jumploci::to_string(c) + "*" + mono;
    }
    return s;
}

std::vector<std::vector<unsigned>> monomials_below(unsigned vars, unsigned bound) {
    std::vector<std::vector<unsigned>> all;
    std::vector<unsigned> cur(vars, 0);
    // enumerate every vector with total degree < bound, then sort graded-lex
    auto rec = [&](auto&& self, unsigned pos, unsigned budget) -> void {
        if (pos == vars) {
            all.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= budget; ++e) {
            cur[pos] = e;
            self(self, pos + 1, budget - e);
        }
        cur[pos] = 0;
    };
    if (bound > 0)
        rec(rec, 0, bound - 1);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return GradedLex{}(a, b); });
    return all;
}

} // namespace jumploci
