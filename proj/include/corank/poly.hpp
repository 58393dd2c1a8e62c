#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "corank/errors.hpp"
#include "corank/rational.hpp"

namespace corank {

/// Variable index inside a polynomial context: 0 is the indeterminate x,
/// i >= 1 is the root variable a_i.
using VarIndex = std::size_t;
inline constexpr VarIndex kVarX = 0;

/// Dense exponent vector sized to the ambient context (index 0 = x).
using Monomial = std::vector<std::uint32_t>;

std::uint64_t monomial_degree(const Monomial& m);

/// Graded lexicographic comparison with variable order x < a1 < ... < an:
/// higher total degree wins; ties compare exponents from x upward, the
/// larger exponent at the first difference wins. Returns a > b.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Rational coefficients.
///
/// Terms are kept in descending graded-lex order with no zero coefficients;
/// that ordering is also the canonical textual form. Values are immutable
/// in spirit: every operation returns a fresh polynomial.
class SparsePoly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
    };

    /// The zero polynomial in a context of `context` variables (x plus alphas).
    explicit SparsePoly(std::size_t context);

    static SparsePoly constant(std::size_t context, Rational c);
    static SparsePoly variable(std::size_t context, VarIndex v, std::uint32_t exp = 1);
    /// Single-term polynomial c * mono; mono.size() must equal context.
    static SparsePoly term(std::size_t context, Monomial mono, Rational c);
    /// The linear difference a_a - a_b.
    static SparsePoly linear_difference(std::size_t context, std::size_t a, std::size_t b);

    std::size_t context() const { return context_; }
    std::size_t alpha_count() const { return context_ - 1; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly& operator+=(const SparsePoly& o) { *this = *this + o; return *this; }
    SparsePoly& operator-=(const SparsePoly& o) { *this = *this - o; return *this; }
    SparsePoly& operator*=(const SparsePoly& o) { *this = *this * o; return *this; }
    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly scaled(const Rational& c) const;
    SparsePoly pow(std::uint32_t e) const;

    /// Formal partial derivative with respect to variable v.
    SparsePoly derivative(VarIndex v) const;

    SparsePoly substitute(VarIndex v, const Rational& value) const;
    SparsePoly substitute(VarIndex v, const SparsePoly& value) const;

    /// Full evaluation; `values` supplies one rational per context variable.
    Rational evaluate(const std::vector<Rational>& values) const;

    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    std::uint32_t degree_in(VarIndex v) const;

    /// Coefficient of v^power as a polynomial in the remaining variables.
    SparsePoly coefficient_of(VarIndex v, std::uint32_t power) const;

    const Term& leading_term() const;  // requires a nonzero polynomial

    /// Rebuilds the polynomial in a context of `new_context` variables,
    /// sending variable i to map[i]. The map must be injective.
    SparsePoly rename(const std::vector<VarIndex>& map, std::size_t new_context) const;

    /// Canonical textual form: descending graded-lex term list over
    /// variables x, a1, ..., an.
    std::string str() const;

private:
    void check_context(const SparsePoly& o) const;
    void check_var(VarIndex v) const;
    static SparsePoly from_terms(std::size_t context, std::vector<Term> terms);

    std::size_t context_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

/// prod_{m not in skip} (x - a_m)^{mults[m-1]} in context mults.size() + 1.
/// `skip` holds 1-based root indices; the result is monic in x.
SparsePoly deleted_product(const std::vector<unsigned>& mults, const std::set<std::size_t>& skip);

/// Simple-root case: all multiplicities are 1.
SparsePoly deleted_product(std::size_t n, const std::set<std::size_t>& skip);

/// prod_{i<j in indices} (a_i - a_j)^2 in the given context (1-based indices);
/// the empty and singleton cases give 1.
SparsePoly discriminant_square_product(std::size_t context, const std::set<std::size_t>& indices);

struct LinearDivision {
    SparsePoly quotient;
    bool divisible;
};

/// Divides p by (a_a - a_b) via synthetic division in a_a; the implied
/// remainder is p with a_a := a_b substituted, and `divisible` reports
/// whether it vanished. When divisible, quotient * (a_a - a_b) == p.
LinearDivision divide_linear_difference(const SparsePoly& p, std::size_t a, std::size_t b);

/// Exact division in the polynomial ring; throws KernelError when the
/// division is not exact (callers only divide where exactness is guaranteed).
SparsePoly exact_divide(const SparsePoly& num, const SparsePoly& den);

}  // namespace corank
