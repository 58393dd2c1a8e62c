#include "corank/rational.hpp"

#include <cctype>
#include <ostream>

namespace corank {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) {
        throw ArgumentError("rational: zero denominator");
    }
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) {
        throw ArgumentError("rational: division by zero");
    }
    return Rational(mpq_class(v_ / o.v_));
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
    // Grammar: -?digits(/digits)?  with a positive denominator.
    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string num_digits = (!num.empty() && num[0] == '-') ? num.substr(1) : num;
    if (!all_digits(num_digits) || !all_digits(den)) {
        throw ArgumentError("rational: malformed token '" + text + "'");
    }
    mpq_class v(mpz_class(num), mpz_class(den));
    if (v.get_den() == 0) {
        throw ArgumentError("rational: zero denominator in '" + text + "'");
    }
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();  // GMP prints "p/q", or "p" when q = 1
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::pow(const Rational& base, unsigned exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), exp);
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

RootVector::RootVector(std::vector<Rational> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        for (std::size_t j = i + 1; j < values_.size(); ++j) {
            if (values_[i] == values_[j]) {
                throw ArgumentError("root vector: coordinates " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1) + " coincide");
            }
        }
    }
}

}  // namespace corank
