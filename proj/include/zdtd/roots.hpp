#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "zdtd/polynomial.hpp"

namespace zdtd {

namespace detail {

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out);

inline mpz_class pollard_rho(const mpz_class& n) {
    // n odd composite, not a prime power of interest; returns a proper factor.
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    mpz_class f = 17;
    while (n > 1 && f * f <= n && f < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
            ++out[f];
            n /= f;
        }
        f += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

inline std::vector<mpz_class> divisors_of(const mpz_class& n) {
    std::map<mpz_class, int> fac;
    factor_into(n, fac);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        std::vector<mpz_class> next;
        next.reserve(divs.size() * static_cast<std::size_t>(e + 1));
        mpz_class pk = 1;
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Deflate f by (x - r) as many times as r remains a root; returns the
// multiplicity and replaces f with the deflated polynomial.
template <Field K>
int peel_root(Polynomial<K>& f, const K& r) {
    int mult = 0;
    while (!f.is_zero() && f.degree() >= 1 && f.evaluate(r).is_zero()) {
        f = Polynomial<K>::divide_exact(f, Polynomial<K>::x_minus(r));
        ++mult;
    }
    return mult;
}

inline std::vector<std::pair<Rational, int>> rational_roots_impl(const Polynomial<Rational>& f0) {
    std::vector<std::pair<Rational, int>> roots;
    Polynomial<Rational> f = f0;

    // roots at zero
    {
        int m = peel_root(f, Rational(0));
        if (m > 0) roots.emplace_back(Rational(0), m);
    }
    if (f.degree() < 1) return roots;

    // clear denominators and strip content to get a primitive integer polynomial
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ic;
    ic.reserve(f.coeffs().size());
    mpz_class content = 0;
    for (const auto& c : f.coeffs()) {
        mpz_class v = c.num() * (den_lcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ic.push_back(std::move(v));
    }
    for (auto& v : ic) v /= content;

    const mpz_class& a0 = ic.front();
    const mpz_class& an = ic.back();
    std::vector<mpz_class> ps = divisors_of(a0);
    std::vector<mpz_class> qs = divisors_of(an);

    for (const auto& p : ps) {
        for (const auto& q : qs) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                if (f.degree() < 1) return roots;
                Rational cand(mpq_class(sign > 0 ? p : mpz_class(-p), q));
                int m = peel_root(f, cand);
                if (m > 0) roots.emplace_back(cand, m);
            }
        }
    }
    return roots;
}

inline std::vector<std::pair<PrimeField, int>> rational_roots_impl(const Polynomial<PrimeField>& f0) {
    std::vector<std::pair<PrimeField, int>> roots;
    Polynomial<PrimeField> f = f0;
    const long p = f.sample().field_char();
    for (long r = 0; r < p && f.degree() >= 1; ++r) {
        PrimeField cand = f.sample().from_int(r);
        int m = peel_root(f, cand);
        if (m > 0) roots.emplace_back(cand, m);
    }
    return roots;
}

} // namespace detail

// All roots of f lying in the working field, with multiplicities, in
// canonical order. Over Q: rational-root search over divisor candidates of
// the extreme coefficients after clearing denominators. Over Z/p: scan.
// Roots in a proper extension are deliberately not searched for.
template <Field K>
std::vector<std::pair<K, int>> rational_roots(const Polynomial<K>& f) {
    if (f.is_zero())
        throw DivisionByZero("roots of the zero polynomial");
    auto roots = detail::rational_roots_impl(f);
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return roots;
}

} // namespace zdtd
