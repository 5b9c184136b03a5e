#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "zdtd/prime_field.hpp"
#include "zdtd/rational.hpp"

namespace zdtd {

// Exact field scalar. Every operation is exact; equality is decidable.
// All helpers derive the field of the result from an existing value so that
// runtime-tagged fields (Z/p) work through the same interface as Q.
template <typename K>
concept Field = requires(const K& a, const K& b, long n) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::same_as<bool>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.zero_like() } -> std::same_as<K>;
    { a.one_like() } -> std::same_as<K>;
    { a.from_int(n) } -> std::same_as<K>;
    { a.inverse() } -> std::same_as<K>;
    { a.pow(n) } -> std::same_as<K>;
    { a.field_char() } -> std::same_as<long>;
    { a.to_string() } -> std::same_as<std::string>;
};

static_assert(Field<Rational>);
static_assert(Field<PrimeField>);

// Deterministic total order used for sorting eigenvalues and fixing gauges.
inline bool canonical_less(const Rational& a, const Rational& b) { return a < b; }
inline bool canonical_less(const PrimeField& a, const PrimeField& b) {
    return a.residue() < b.residue();
}

// Exact square root in the working field, if one exists.
inline std::optional<Rational> sqrt_exact(const Rational& a) {
    if (a < Rational(0)) return std::nullopt;
    if (a.is_zero()) return Rational(0);
    mpz_class num = a.num(), den = a.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

inline std::optional<PrimeField> sqrt_exact(const PrimeField& a) {
    for (long r = 0; r <= a.modulus() / 2; ++r) {
        PrimeField c = a.from_int(r);
        if (c * c == a) return c;
    }
    return std::nullopt;
}

// Gauge rule for picking q over q^{-1}: over Q take the root of larger
// absolute value, over Z/p the smaller canonical residue. Either choice is
// re-derivable from the other; this one is just fixed.
inline bool prefer_as_q(const Rational& a, const Rational& b) {
    return a.abs() > b.abs();
}
inline bool prefer_as_q(const PrimeField& a, const PrimeField& b) {
    return a.residue() < b.residue();
}

} // namespace zdtd
