#include "corank/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace corank {

std::uint64_t monomial_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    const std::uint64_t da = monomial_degree(a);
    const std::uint64_t db = monomial_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

SparsePoly::SparsePoly(std::size_t context) : context_(context) {
    if (context == 0) {
        throw ContextError("polynomial context must hold at least the variable x");
    }
}

SparsePoly SparsePoly::constant(std::size_t context, Rational c) {
    SparsePoly p(context);
    if (!c.is_zero()) {
        p.terms_.push_back({Monomial(context, 0), std::move(c)});
    }
    return p;
}

SparsePoly SparsePoly::variable(std::size_t context, VarIndex v, std::uint32_t exp) {
    SparsePoly p(context);
    p.check_var(v);
    if (exp == 0) return constant(context, Rational(1));
    Monomial m(context, 0);
    m[v] = exp;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

SparsePoly SparsePoly::term(std::size_t context, Monomial mono, Rational c) {
    SparsePoly p(context);
    if (mono.size() != context) throw ContextError("term: monomial size does not match context");
    if (!c.is_zero()) {
        p.terms_.push_back({std::move(mono), std::move(c)});
    }
    return p;
}

SparsePoly SparsePoly::linear_difference(std::size_t context, std::size_t a, std::size_t b) {
    if (a == b) throw ArgumentError("linear difference: indices coincide");
    if (a < 1 || b < 1) throw ArgumentError("linear difference: root indices are 1-based");
    return variable(context, a) - variable(context, b);
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_[0].mono) == 0);
}

Rational SparsePoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw ArgumentError("constant_value on a non-constant polynomial");
    return terms_[0].coeff;
}

void SparsePoly::check_context(const SparsePoly& o) const {
    if (context_ != o.context_) {
        throw ContextError("polynomial contexts differ (" + std::to_string(context_) +
                           " vs " + std::to_string(o.context_) + " variables)");
    }
}

void SparsePoly::check_var(VarIndex v) const {
    if (v >= context_) {
        throw ContextError("variable index " + std::to_string(v) +
                           " outside context of " + std::to_string(context_) + " variables");
    }
}

// Sorts descending graded-lex, merges equal monomials, drops zeros.
SparsePoly SparsePoly::from_terms(std::size_t context, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
    SparsePoly p(context);
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly p(context_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
    return p;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    check_context(o);
    // Merge of two canonically sorted term lists.
    SparsePoly p(context_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) p.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        } else if (grlex_greater(terms_[i].mono, o.terms_[j].mono)) {
            p.terms_.push_back(terms_[i++]);
        } else {
            p.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
    return p;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    return *this + (-o);
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    check_context(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m(context_);
            for (std::size_t v = 0; v < context_; ++v) m[v] = a.mono[v] + b.mono[v];
            prod.push_back({std::move(m), a.coeff * b.coeff});
        }
    }
    return from_terms(context_, std::move(prod));
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    return context_ == o.context_ && terms_ == o.terms_;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
    if (c.is_zero()) return SparsePoly(context_);
    SparsePoly p(context_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
    SparsePoly acc = constant(context_, Rational(1));
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

SparsePoly SparsePoly::derivative(VarIndex v) const {
    check_var(v);
    SparsePoly p(context_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.mono[v] == 0) continue;
        Monomial m = t.mono;
        const long e = m[v];
        m[v] -= 1;
        p.terms_.push_back({std::move(m), t.coeff * Rational(e)});
    }
    // Dropping the exponent in one variable preserves graded-lex order, so the
    // surviving terms are already canonical.
    return p;
}

SparsePoly SparsePoly::substitute(VarIndex v, const Rational& value) const {
    check_var(v);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        const std::uint32_t e = m[v];
        m[v] = 0;
        out.push_back({std::move(m), e == 0 ? t.coeff : t.coeff * Rational::pow(value, e)});
    }
    return from_terms(context_, std::move(out));
}

SparsePoly SparsePoly::substitute(VarIndex v, const SparsePoly& value) const {
    check_var(v);
    check_context(value);
    // Group by the exponent of v, then Horner in `value`.
    std::uint32_t top = degree_in(v);
    std::vector<SparsePoly> coeff(top + 1, SparsePoly(context_));
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        const std::uint32_t e = m[v];
        m[v] = 0;
        coeff[e].terms_.push_back({std::move(m), t.coeff});
    }
    for (auto& c : coeff) c = from_terms(context_, std::move(c.terms_));
    SparsePoly acc = coeff[top];
    for (std::uint32_t e = top; e > 0; --e) {
        acc = acc * value + coeff[e - 1];
    }
    return acc;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& values) const {
    if (values.size() != context_) {
        throw ContextError("evaluate: expected " + std::to_string(context_) + " values, got " +
                           std::to_string(values.size()));
    }
    // Per-variable power tables up to the degree actually used.
    std::vector<std::vector<Rational>> powers(context_);
    for (std::size_t v = 0; v < context_; ++v) {
        const std::uint32_t d = degree_in(v);
        powers[v].reserve(d + 1);
        powers[v].push_back(Rational(1));
        for (std::uint32_t e = 1; e <= d; ++e) powers[v].push_back(powers[v][e - 1] * values[v]);
    }
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (std::size_t v = 0; v < context_; ++v) {
            if (t.mono[v] != 0) prod *= powers[v][t.mono[v]];
        }
        sum += prod;
    }
    return sum;
}

std::uint64_t SparsePoly::total_degree() const {
    return terms_.empty() ? 0 : monomial_degree(terms_[0].mono);
}

std::uint32_t SparsePoly::degree_in(VarIndex v) const {
    check_var(v);
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
}

SparsePoly SparsePoly::coefficient_of(VarIndex v, std::uint32_t power) const {
    check_var(v);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono[v] != power) continue;
        Monomial m = t.mono;
        m[v] = 0;
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(context_, std::move(out));
}

const SparsePoly::Term& SparsePoly::leading_term() const {
    if (terms_.empty()) throw ArgumentError("leading term of the zero polynomial");
    return terms_[0];
}

SparsePoly SparsePoly::rename(const std::vector<VarIndex>& map, std::size_t new_context) const {
    if (map.size() != context_) {
        throw ContextError("rename: map size does not match context");
    }
    std::vector<bool> seen(new_context, false);
    for (VarIndex v : map) {
        if (v >= new_context) throw ContextError("rename: target variable out of range");
        if (seen[v]) throw ArgumentError("rename: map is not injective");
        seen[v] = true;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(new_context, 0);
        for (std::size_t v = 0; v < context_; ++v) m[map[v]] = t.mono[v];
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(new_context, std::move(out));
}

namespace {

std::string variable_name(VarIndex v) {
    return v == kVarX ? "x" : "a" + std::to_string(v);
}

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(v);
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s;
}

}  // namespace

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff.sign() < 0;
        const Rational mag = t.coeff.abs();
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        const std::string mono = monomial_str(t.mono);
        if (mono.empty()) {
            s += mag.str();
        } else if (mag.is_one()) {
            s += mono;
        } else {
            s += mag.str() + "*" + mono;
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) {
    return os << p.str();
}

SparsePoly deleted_product(const std::vector<unsigned>& mults, const std::set<std::size_t>& skip) {
    const std::size_t r = mults.size();
    const std::size_t context = r + 1;
    for (std::size_t idx : skip) {
        if (idx < 1 || idx > r) {
            throw ArgumentError("deleted product: root index " + std::to_string(idx) +
                                " outside 1.." + std::to_string(r));
        }
    }
    SparsePoly p = SparsePoly::constant(context, Rational(1));
    for (std::size_t m = 1; m <= r; ++m) {
        if (skip.count(m)) continue;
        const SparsePoly factor =
            SparsePoly::variable(context, kVarX) - SparsePoly::variable(context, m);
        p = p * factor.pow(mults[m - 1]);
    }
    return p;
}

SparsePoly deleted_product(std::size_t n, const std::set<std::size_t>& skip) {
    return deleted_product(std::vector<unsigned>(n, 1u), skip);
}

SparsePoly discriminant_square_product(std::size_t context, const std::set<std::size_t>& indices) {
    for (std::size_t idx : indices) {
        if (idx < 1 || idx >= context) {
            throw ArgumentError("discriminant product: index " + std::to_string(idx) +
                                " outside context");
        }
    }
    SparsePoly p = SparsePoly::constant(context, Rational(1));
    for (auto i = indices.begin(); i != indices.end(); ++i) {
        for (auto j = std::next(i); j != indices.end(); ++j) {
            p = p * SparsePoly::linear_difference(context, *i, *j).pow(2);
        }
    }
    return p;
}

LinearDivision divide_linear_difference(const SparsePoly& p, std::size_t a, std::size_t b) {
    if (a == b) throw ArgumentError("divide by linear difference: indices coincide");
    const std::size_t context = p.context();
    if (a < 1 || a >= context || b < 1 || b >= context) {
        throw ArgumentError("divide by linear difference: index outside context");
    }
    // Synthetic division in a_a at the point a_b: write p = sum c_d * a_a^d,
    // then q_{d-1} = c_d + a_b * q_d going down, remainder = c_0 + a_b * q_0.
    const std::uint32_t top = p.degree_in(a);
    if (top == 0) {
        return {SparsePoly(context), p.is_zero()};
    }
    const SparsePoly point = SparsePoly::variable(context, b);
    std::vector<SparsePoly> q(top, SparsePoly(context));
    SparsePoly carry = p.coefficient_of(a, top);
    for (std::uint32_t d = top; d > 0; --d) {
        q[d - 1] = carry;
        carry = p.coefficient_of(a, d - 1) + point * carry;
    }
    if (!carry.is_zero()) {
        return {SparsePoly(context), false};
    }
    SparsePoly quotient(context);
    for (std::uint32_t d = 0; d < top; ++d) {
        quotient += q[d] * SparsePoly::variable(context, a, d);
    }
    return {std::move(quotient), true};
}

SparsePoly exact_divide(const SparsePoly& num, const SparsePoly& den) {
    if (den.is_zero()) throw KernelError("exact division by the zero polynomial");
    if (num.context() != den.context()) throw ContextError("exact division: context mismatch");
    const std::size_t context = num.context();
    SparsePoly rem = num;
    SparsePoly quot(context);
    const auto& dlt = den.leading_term();
    // Leading terms multiply in an integral domain, so when the division is
    // exact LT(rem) is divisible by LT(den) at every step and LT(rem)
    // strictly decreases.
    while (!rem.is_zero()) {
        const auto& rlt = rem.leading_term();
        Monomial m(context);
        for (std::size_t v = 0; v < context; ++v) {
            if (rlt.mono[v] < dlt.mono[v]) {
                throw KernelError("inexact polynomial division: leading monomial not divisible");
            }
            m[v] = rlt.mono[v] - dlt.mono[v];
        }
        const SparsePoly t = SparsePoly::term(context, std::move(m), rlt.coeff / dlt.coeff);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

}  // namespace corank
