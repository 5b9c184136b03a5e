#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zdtd/closed_forms.hpp"
#include "zdtd/matrix.hpp"
#include "zdtd/polynomial.hpp"

namespace zdtd {

// Irreducible tridiagonal matrix with zero diagonal, stored as its
// subdiagonal and superdiagonal entries (indexed 1..d).
template <Field K>
struct ZeroDiagTD {
    int d;
    std::vector<K> sub;
    std::vector<K> sup;

    ZeroDiagTD(int d_, std::vector<K> sub_, std::vector<K> sup_)
        : d(d_), sub(std::move(sub_)), sup(std::move(sup_)) {
        if (d < 1)
            throw DiameterTooSmall("zero-diagonal TD matrix needs d >= 1");
        if (static_cast<int>(sub.size()) != d || static_cast<int>(sup.size()) != d)
            throw DimensionMismatch("sub/superdiagonal lengths must equal d");
        for (int i = 0; i < d; ++i)
            if (sub[i].is_zero() || sup[i].is_zero())
                throw NotZeroDiagTD("zero sub- or superdiagonal entry at position " +
                                    std::to_string(i + 1));
    }

    Matrix<K> dense() const {
        Matrix<K> m(d + 1, sub[0].zero_like());
        for (int i = 1; i <= d; ++i) {
            m(i, i - 1) = sub[static_cast<std::size_t>(i - 1)];
            m(i - 1, i) = sup[static_cast<std::size_t>(i - 1)];
        }
        return m;
    }

    static ZeroDiagTD from_dense(const Matrix<K>& m) {
        const int n = m.dim();
        if (n < 2)
            throw DiameterTooSmall("zero-diagonal TD matrix needs dimension >= 2");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool off = i == j + 1 || j == i + 1;
                if (!off && !m(i, j).is_zero())
                    throw NotZeroDiagTD("nonzero entry at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            }
        std::vector<K> sub, sup;
        for (int i = 1; i < n; ++i) {
            sub.push_back(m(i, i - 1));
            sup.push_back(m(i - 1, i));
        }
        return ZeroDiagTD(n - 1, std::move(sub), std::move(sup));
    }
};

// Pair in the normal form: first matrix has subdiagonal all 1 and
// superdiagonal z, second has subdiagonal x and superdiagonal y_i z_i.
template <Field K>
struct TDTDPair {
    int d;
    std::vector<K> x, y, z;

    TDTDPair(int d_, std::vector<K> x_, std::vector<K> y_, std::vector<K> z_)
        : d(d_), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
        if (d < 1)
            throw DiameterTooSmall("TD-TD pair needs d >= 1");
        if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d ||
            static_cast<int>(z.size()) != d)
            throw DimensionMismatch("x, y, z must all have length d");
        for (int i = 0; i < d; ++i)
            if (x[i].is_zero() || y[i].is_zero() || z[i].is_zero())
                throw NotZeroDiagTD("zero x, y or z entry at position " + std::to_string(i + 1));
    }

    std::pair<Matrix<K>, Matrix<K>> dense() const {
        const K zero = x[0].zero_like();
        const K one = x[0].one_like();
        Matrix<K> a(d + 1, zero), as(d + 1, zero);
        for (int i = 1; i <= d; ++i) {
            a(i, i - 1) = one;
            a(i - 1, i) = z[static_cast<std::size_t>(i - 1)];
            as(i, i - 1) = x[static_cast<std::size_t>(i - 1)];
            as(i - 1, i) = y[static_cast<std::size_t>(i - 1)] * z[static_cast<std::size_t>(i - 1)];
        }
        return {std::move(a), std::move(as)};
    }
};

// Normalizes a zero-diagonal TD-TD pair: conjugation by the diagonal with
// (i,i)-entry sub_1 ... sub_i of the first matrix makes its subdiagonal
// all 1. Returns the pair data and the conjugating diagonal.
template <Field K>
std::pair<TDTDPair<K>, std::vector<K>> normalize_pair(const Matrix<K>& a, const Matrix<K>& as) {
    ZeroDiagTD<K> ta = ZeroDiagTD<K>::from_dense(a);
    ZeroDiagTD<K> ts = ZeroDiagTD<K>::from_dense(as);
    if (ta.d != ts.d)
        throw DimensionMismatch("pair matrices have different dimensions");
    std::vector<K> diag{a.sample().one_like()};
    for (int i = 1; i <= ta.d; ++i)
        diag.push_back(diag.back() * ta.sub[static_cast<std::size_t>(i - 1)]);
    Matrix<K> na = conjugate_by_diagonal(a, diag);
    Matrix<K> ns = conjugate_by_diagonal(as, diag);
    std::vector<K> x, y, z;
    for (int i = 1; i <= ta.d; ++i) {
        z.push_back(na(i - 1, i));
        x.push_back(ns(i, i - 1));
        y.push_back(ns(i - 1, i) / na(i - 1, i));
    }
    return {TDTDPair<K>(ta.d, std::move(x), std::move(y), std::move(z)), std::move(diag)};
}

// pi(d,i): sum of z_{l_1} ... z_{l_i} over 1 <= l_1 < ... < l_i <= d with
// consecutive gaps >= 2, via pi(d,i) = pi(d-1,i) + z_d pi(d-2,i-1).
template <Field K>
K pi_sum(const std::vector<K>& z, int i) {
    if (z.empty())
        throw DimensionMismatch("pi(d,i) needs at least one superdiagonal entry");
    const int d = static_cast<int>(z.size());
    if (i < 0 || 2 * i > d + 1)
        throw IndexOutOfRange("pi(d,i) needs 0 <= i <= floor((d+1)/2), got i = " +
                              std::to_string(i) + " at d = " + std::to_string(d));
    const K zero = z[0].zero_like();
    const K one = z[0].one_like();
    if (i == 0) return one;
    // table[m][j] = pi(m, j); rows m = 0..d, cols j = 0..i
    std::vector<std::vector<K>> table(static_cast<std::size_t>(d + 1),
                                      std::vector<K>(static_cast<std::size_t>(i + 1), zero));
    for (int m = 0; m <= d; ++m) table[static_cast<std::size_t>(m)][0] = one;
    for (int m = 1; m <= d; ++m)
        for (int j = 1; j <= i && 2 * j <= m + 1; ++j) {
            K v = table[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)];
            K prev = m >= 2 ? table[static_cast<std::size_t>(m - 2)][static_cast<std::size_t>(j - 1)]
                            : (j == 1 ? one : zero);
            table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
                v + z[static_cast<std::size_t>(m - 1)] * prev;
        }
    return table[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
}

// Characteristic polynomial of a zero-diagonal TD matrix through the
// alternating pi(d,i) expansion; agrees with the determinant definition.
template <Field K>
Polynomial<K> char_poly_formula(const ZeroDiagTD<K>& m) {
    // normalizing the subdiagonal to 1 keeps the characteristic polynomial
    // and turns the superdiagonal into sub_i * sup_i
    std::vector<K> z;
    z.reserve(static_cast<std::size_t>(m.d));
    for (int i = 0; i < m.d; ++i)
        z.push_back(m.sub[static_cast<std::size_t>(i)] * m.sup[static_cast<std::size_t>(i)]);
    const K zero = z[0].zero_like();
    std::vector<K> coeffs(static_cast<std::size_t>(m.d + 2), zero);
    K sign = z[0].one_like();
    for (int i = 0; 2 * i <= m.d + 1; ++i) {
        coeffs[static_cast<std::size_t>(m.d + 1 - 2 * i)] = sign * pi_sum(z, i);
        sign = -sign;
    }
    return Polynomial<K>(std::move(coeffs));
}

// The explicit x, y, z vectors of each family.
template <Field K>
TDTDPair<K> make_family(const FamilyParams<K>& fam, int d) {
    check_admissible(fam, d);
    std::vector<K> x, y, z;

    if (std::holds_alternative<Krawtchouk<K>>(fam)) {
        const auto& f = std::get<Krawtchouk<K>>(fam);
        for (int i = 1; i <= d; ++i) {
            x.push_back(f.s);
            y.push_back(f.s.inverse());
            z.push_back(f.s.from_int(static_cast<long>(i) * (d - i + 1)));
        }
    } else if (std::holds_alternative<BannaiIto<K>>(fam)) {
        const auto& f = std::get<BannaiIto<K>>(fam);
        const K eps = f.tau.from_int(f.epsilon);
        auto num = [&](long n) { return f.tau.from_int(n); };
        for (int i = 1; i <= d; ++i) {
            K sgn = i % 2 == 1 ? eps : -eps;
            x.push_back(sgn);
            y.push_back(sgn);
            if (i % 2 == 0)
                z.push_back(num(i) * (num(d - i + 1) - eps * f.tau));
            else
                z.push_back(num(d - i + 1) * (num(i) + eps * f.tau));
        }
    } else if (std::holds_alternative<QRacahCompact<K>>(fam)) {
        const auto& f = std::get<QRacahCompact<K>>(fam);
        const K one = f.q.one_like();
        for (int i = 1; i <= d; ++i) {
            x.push_back(f.s * f.q.pow(1 - i));
            y.push_back(f.s.inverse() * f.q.pow(d - i));
            z.push_back(f.q.pow(i - 1) * (f.q.pow(i) - one) * (f.q.pow(d - i + 1) - one));
        }
    } else if (std::holds_alternative<QRacahLT<K>>(fam)) {
        const auto& f = std::get<QRacahLT<K>>(fam);
        const K one = f.q.one_like();
        const K s2 = f.s * f.s;
        for (int i = 1; i <= d; ++i) {
            x.push_back(f.s * f.q.pow(1 - i));
            y.push_back(f.s.inverse() * f.q.pow(i - 1));
        }
        z.push_back((f.q - one) * (f.q.pow(d) - one) * (s2 - f.q.pow(d)) / (s2 - f.q));
        for (int i = 2; i <= d - 1; ++i)
            z.push_back(f.q.pow(i - 1) * (f.q.pow(i) - one) * (f.q.pow(d - i + 1) - one) *
                        (s2 - f.q.pow(i - 2)) * (s2 - f.q.pow(d + i - 1)) /
                        ((s2 - f.q.pow(2 * i - 3)) * (s2 - f.q.pow(2 * i - 1))));
        z.push_back(f.q.pow(d - 1) * (f.q - one) * (f.q.pow(d) - one) *
                    (s2 - f.q.pow(d - 2)) / (s2 - f.q.pow(2 * d - 3)));
    } else if (std::holds_alternative<QRacahEven<K>>(fam)) {
        const auto& f = std::get<QRacahEven<K>>(fam);
        const K one = f.q.one_like();
        const K s2inv = (f.s * f.s).inverse();
        for (int i = 1; i <= d; ++i) {
            x.push_back(f.s * f.q.pow(1 - i));
            y.push_back(f.s * f.q.pow(1 - i));
            if (i % 2 == 0)
                z.push_back(f.q.pow(d) * (f.q.pow(i) - one) * (one - s2inv * f.q.pow(i - 2)));
            else
                z.push_back(-(f.q.pow(i - 1) * (f.q.pow(d - i + 1) - one) *
                              (one - s2inv * f.q.pow(d + i - 1))));
        }
    } else if (std::holds_alternative<D1Family<K>>(fam)) {
        const auto& f = std::get<D1Family<K>>(fam);
        x = {f.s};
        y = {f.s.inverse()};
        z = {f.s.one_like()};
    } else if (std::holds_alternative<D2aFamily<K>>(fam)) {
        const auto& f = std::get<D2aFamily<K>>(fam);
        const K one = f.y.one_like();
        x = {one, -one};
        z = {f.z, one - f.z};
        // superdiagonal of the second matrix is (yz, yz - 1)
        y = {f.y, (f.y * f.z - one) / (one - f.z)};
    } else {
        const auto& f = std::get<D2bFamily<K>>(fam);
        const K one = f.s.one_like();
        K y1 = f.t * f.z + (one - f.t * f.t) / (f.s + f.t);
        K y2 = -(f.s * f.z) + (one + f.s * f.t) / (f.s + f.t);
        x = {f.s, f.t};
        z = {f.z, one - f.z};
        y = {y1 / f.z, y2 / (one - f.z)};
    }
    return TDTDPair<K>(d, std::move(x), std::move(y), std::move(z));
}

// Diagonal matrix D with D_0 = 1 conjugating the first pair onto the
// second, if one exists. Both pairs must be zero-diagonal TD-TD of equal
// dimension; D is unique once D_0 is pinned.
template <Field K>
std::optional<std::vector<K>> diagonal_equivalence(const Matrix<K>& a, const Matrix<K>& as,
                                                   const Matrix<K>& b, const Matrix<K>& bs) {
    ZeroDiagTD<K> ta = ZeroDiagTD<K>::from_dense(a);
    ZeroDiagTD<K> tb = ZeroDiagTD<K>::from_dense(b);
    if (a.dim() != b.dim() || as.dim() != a.dim() || bs.dim() != b.dim())
        throw DimensionMismatch("pairs have different dimensions");
    std::vector<K> diag{a.sample().one_like()};
    for (int i = 1; i <= ta.d; ++i)
        diag.push_back(diag.back() * ta.sub[static_cast<std::size_t>(i - 1)] /
                       tb.sub[static_cast<std::size_t>(i - 1)]);
    if (conjugate_by_diagonal(a, diag) != b) return std::nullopt;
    if (conjugate_by_diagonal(as, diag) != bs) return std::nullopt;
    return diag;
}

template <Field K>
std::optional<std::vector<K>> equivalent(const TDTDPair<K>& pa, const TDTDPair<K>& pb) {
    if (pa.d != pb.d)
        throw DimensionMismatch("pairs have different diameters");
    auto [a, as] = pa.dense();
    auto [b, bs] = pb.dense();
    return diagonal_equivalence(a, as, b, bs);
}

} // namespace zdtd
