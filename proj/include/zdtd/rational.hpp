#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <utility>

#include "zdtd/errors.hpp"

namespace zdtd {

// Arbitrary-precision rational. Always kept in lowest terms with positive
// denominator (mpq canonical form). Equality is exact; there is no rounding
// anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational parse(const std::string& text) {
        if (!looks_like_rational(text))
            throw ParseError("not a rational literal: '" + text + "'");
        mpq_class v;
        if (v.set_str(text, 10) != 0)
            throw ParseError("not a rational literal: '" + text + "'");
        if (v.get_den() == 0)
            throw DivisionByZero("rational with zero denominator");
        v.canonicalize();
        return Rational(std::move(v), already_canonical{});
    }

    std::string to_string() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }
    long field_char() const { return 0; }

    Rational operator-() const { return Rational(-v_, already_canonical{}); }
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_, already_canonical{}); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_, already_canonical{}); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_, already_canonical{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw DivisionByZero("rational division by zero");
        return Rational(v_ / o.v_, already_canonical{});
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZero("inverse of zero");
        return Rational(1 / v_, already_canonical{});
    }

    Rational pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(mpq_class(num, den), already_canonical{});
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

private:
    struct already_canonical {};
    Rational(mpq_class v, already_canonical) : v_(std::move(v)) {}

    static bool looks_like_rational(const std::string& s) {
        std::size_t i = 0;
        auto digits = [&](std::size_t& k) {
            std::size_t start = k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            return k > start;
        };
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (!digits(i)) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        if (!digits(i)) return false;
        return i == s.size();
    }

    mpq_class v_;
};

} // namespace zdtd
