#pragma once

#include "jumploci/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace jumploci {

// Graded-lexicographic order on exponent vectors: lower total degree first,
// ties broken lexicographically. Fixed once so that serialization and the
// choice of standard monomials in quotients are canonical.
struct GradedLex {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Multivariate polynomial over Q in a fixed number of variables.
// No zero coefficients are ever stored.
class Polynomial {
public:
    using TermMap = std::map<std::vector<unsigned>, Rational, GradedLex>;

    explicit Polynomial(unsigned var_count) : vars_(var_count) {}

    static Polynomial monomial(unsigned vars, std::vector<unsigned> exps, Rational c);

    unsigned var_count() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational constant_term() const;
    unsigned total_degree() const; // 0 for the zero polynomial

    void add_term(std::vector<unsigned> exps, const Rational& c);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial&) const = default;

    /// Drops every term of total degree >= bound.
    Polynomial truncated_below(unsigned bound) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    unsigned vars_;
    TermMap terms_;
};

unsigned exponent_degree(const std::vector<unsigned>& exps);

/// All exponent vectors in `vars` variables of total degree < bound,
/// listed in graded-lex order.
std::vector<std::vector<unsigned>> monomials_below(unsigned vars, unsigned bound);

std::string monomial_label(const std::vector<unsigned>& exps,
                           const std::vector<std::string>& var_names);

} // namespace jumploci
