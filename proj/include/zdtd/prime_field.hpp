#pragma once

#include <string>

#include "zdtd/errors.hpp"

namespace zdtd {

namespace detail {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

} // namespace detail

// Element of Z/p for a runtime prime modulus p. Intended as a test vehicle
// for the characteristic conditions; p is expected to be small.
class PrimeField {
public:
    PrimeField() : v_(0), p_(0) {}
    PrimeField(long v, long p) : p_(p) {
        if (!detail::is_prime(p))
            throw ParseError("modulus " + std::to_string(p) + " is not prime");
        v_ = norm(v, p);
    }

    static PrimeField parse(const std::string& text, long p) {
        // "r mod p" with the modulus part optional on input.
        std::size_t at = text.find(" mod ");
        std::string rpart = at == std::string::npos ? text : text.substr(0, at);
        if (at != std::string::npos) {
            long pin;
            try {
                pin = std::stol(text.substr(at + 5));
            } catch (...) {
                throw ParseError("bad prime-field literal: '" + text + "'");
            }
            if (pin != p)
                throw FieldMismatch("literal is mod " + std::to_string(pin) +
                                    ", expected mod " + std::to_string(p));
        }
        long r;
        try {
            std::size_t pos = 0;
            r = std::stol(rpart, &pos);
            if (pos != rpart.size())
                throw ParseError("bad prime-field literal: '" + text + "'");
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError("bad prime-field literal: '" + text + "'");
        }
        return PrimeField(r, p);
    }

    std::string to_string() const {
        return std::to_string(v_) + " mod " + std::to_string(p_);
    }

    long residue() const { return v_; }
    long modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % p_; }

    PrimeField zero_like() const { return with(0); }
    PrimeField one_like() const { return with(1); }
    PrimeField from_int(long n) const { return with(norm(n, p_)); }
    long field_char() const { return p_; }

    PrimeField operator-() const { return with(v_ == 0 ? 0 : p_ - v_); }
    PrimeField operator+(const PrimeField& o) const { match(o); return with((v_ + o.v_) % p_); }
    PrimeField operator-(const PrimeField& o) const { match(o); return with((v_ - o.v_ + p_) % p_); }
    PrimeField operator*(const PrimeField& o) const { match(o); return with(mulmod(v_, o.v_, p_)); }
    PrimeField operator/(const PrimeField& o) const { return *this * o.inverse(); }
    PrimeField& operator+=(const PrimeField& o) { *this = *this + o; return *this; }
    PrimeField& operator-=(const PrimeField& o) { *this = *this - o; return *this; }
    PrimeField& operator*=(const PrimeField& o) { *this = *this * o; return *this; }
    PrimeField& operator/=(const PrimeField& o) { *this = *this / o; return *this; }

    PrimeField inverse() const {
        if (v_ == 0)
            throw DivisionByZero("inverse of zero in Z/" + std::to_string(p_));
        // extended Euclid
        long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            long q = a / b;
            long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return with(norm(x0, p_));
    }

    PrimeField pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        PrimeField r = one_like(), base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const PrimeField& o) const {
        if (p_ != o.p_)
            throw FieldMismatch("comparing Z/" + std::to_string(p_) + " with Z/" + std::to_string(o.p_));
        return v_ == o.v_;
    }
    bool operator!=(const PrimeField& o) const { return !(*this == o); }

private:
    PrimeField with(long v) const {
        PrimeField r;
        r.v_ = v;
        r.p_ = p_;
        return r;
    }
    void match(const PrimeField& o) const {
        if (p_ != o.p_)
            throw FieldMismatch("mixing Z/" + std::to_string(p_) + " with Z/" + std::to_string(o.p_));
    }
    static long norm(long v, long p) {
        long r = v % p;
        return r < 0 ? r + p : r;
    }
    static long mulmod(long a, long b, long p) {
        return static_cast<long>((static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b)) %
                                 static_cast<unsigned long long>(p));
    }

    long v_;
    long p_;
};

} // namespace zdtd
