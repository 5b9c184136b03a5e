#pragma once

#include <string>
#include <vector>

#include "zdtd/errors.hpp"
#include "zdtd/field.hpp"
#include "zdtd/matrix.hpp"

namespace zdtd {

// Dense univariate polynomial, coefficients ascending by degree. The
// coefficient list is never empty, so a field sample is always available;
// the zero polynomial is stored as a single zero coefficient.
template <Field K>
class Polynomial {
public:
    explicit Polynomial(const K& c0) : c_{c0} {}
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            throw DimensionMismatch("polynomial needs at least one coefficient");
        trim();
    }

    static Polynomial x_minus(const K& a) {
        return Polynomial(std::vector<K>{-a, a.one_like()});
    }

    // -1 for the zero polynomial.
    int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    const K& coeff(int i) const {
        static_cast<void>(c_.at(static_cast<std::size_t>(i)));
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const { return c_.back(); }
    const K& sample() const { return c_[0]; }

    K evaluate(const K& x) const {
        K acc = c_.back();
        for (std::size_t i = c_.size(); i-- > 1;)
            acc = acc * x + c_[i - 1];
        return acc;
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<K> r = c_.size() >= o.c_.size() ? c_ : o.c_;
        const std::vector<K>& small = c_.size() >= o.c_.size() ? o.c_ : c_;
        for (std::size_t i = 0; i < small.size(); ++i) r[i] += small[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator-() const {
        std::vector<K> r = c_;
        for (auto& x : r) x = -x;
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial(sample().zero_like());
        std::vector<K> r(c_.size() + o.c_.size() - 1, sample().zero_like());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const K& s, const Polynomial& p) {
        std::vector<K> r = p.c_;
        for (auto& x : r) x = s * x;
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Quotient of an exact division; throws if the division leaves a
    // remainder (callers rely on divisibility guaranteed by construction).
    static Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero())
            throw DivisionByZero("polynomial division by zero");
        if (num.is_zero()) return num;
        if (num.degree() < den.degree())
            throw ConsistencyError("inexact polynomial division");
        std::vector<K> rem = num.c_;
        std::vector<K> quo(static_cast<std::size_t>(num.degree() - den.degree()) + 1,
                           num.sample().zero_like());
        K lead_inv = den.leading().inverse();
        for (int k = num.degree() - den.degree(); k >= 0; --k) {
            K f = rem[static_cast<std::size_t>(k + den.degree())] * lead_inv;
            quo[static_cast<std::size_t>(k)] = f;
            if (f.is_zero()) continue;
            for (int j = 0; j <= den.degree(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= f * den.c_[static_cast<std::size_t>(j)];
        }
        for (const auto& x : rem)
            if (!x.is_zero())
                throw ConsistencyError("inexact polynomial division");
        return Polynomial(std::move(quo));
    }

    std::string to_string() const {
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const K& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero() && degree() > 0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            if (i > 0) s += "*x^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

// Characteristic polynomial f(x) = det(xI - A), computed by fraction-free
// elimination over the polynomial ring K[x]. Result is monic of degree dim.
template <Field K>
Polynomial<K> char_poly(const Matrix<K>& a) {
    using P = Polynomial<K>;
    const int n = a.dim();
    const K zero = a.sample().zero_like();
    const K one = a.sample().one_like();

    std::vector<std::vector<P>> m;
    m.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<P> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            if (i == j)
                row.push_back(P::x_minus(a(i, j)));
            else
                row.push_back(P(-a(i, j)));
        }
        m.push_back(std::move(row));
    }

    P sign(one);
    P prev(one);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) { pivot = r; break; }
        if (pivot < 0) return P(zero);
        if (pivot != k) {
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        auto& mk = m[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            auto& mi = m[static_cast<std::size_t>(i)];
            for (int j = k + 1; j < n; ++j) {
                P num = mi[static_cast<std::size_t>(j)] * mk[static_cast<std::size_t>(k)] -
                        mi[static_cast<std::size_t>(k)] * mk[static_cast<std::size_t>(j)];
                mi[static_cast<std::size_t>(j)] = P::divide_exact(num, prev);
            }
        }
        prev = mk[static_cast<std::size_t>(k)];
    }
    return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

} // namespace zdtd
