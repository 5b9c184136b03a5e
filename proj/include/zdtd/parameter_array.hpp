#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "zdtd/errors.hpp"
#include "zdtd/field.hpp"

namespace zdtd {

// The sequence ({theta_i}_0^d, {theta*_i}_0^d, {varphi_i}_1^d, {phi_i}_1^d)
// attached to a Leonard system; classifies it up to isomorphism. Plain
// value; validity is a separate check so invalid arrays stay inspectable.
template <Field K>
struct ParameterArray {
    int d = 0;
    std::vector<K> theta;       // d+1
    std::vector<K> theta_star;  // d+1
    std::vector<K> varphi;      // d, indexed 1..d
    std::vector<K> phi;         // d, indexed 1..d

    const K& sample() const { return theta.at(0); }

    bool operator==(const ParameterArray& o) const {
        return d == o.d && theta == o.theta && theta_star == o.theta_star &&
               varphi == o.varphi && phi == o.phi;
    }
    bool operator!=(const ParameterArray& o) const { return !(*this == o); }

    void check_shape() const {
        if (d < 1)
            throw DiameterTooSmall("parameter array needs d >= 1, got d = " + std::to_string(d));
        if (static_cast<int>(theta.size()) != d + 1 || static_cast<int>(theta_star.size()) != d + 1 ||
            static_cast<int>(varphi.size()) != d || static_cast<int>(phi.size()) != d)
            throw DimensionMismatch("parameter array lists do not match d = " + std::to_string(d));
    }
};

struct ConditionResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when the condition holds
};

struct ValidationReport {
    std::vector<ConditionResult> conditions;

    bool all_pass() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
};

// The five conditions characterizing which sequences occur as parameter
// arrays of Leonard systems. All checks are exact.
template <Field K>
ValidationReport validate(const ParameterArray<K>& pa) {
    pa.check_shape();
    const int d = pa.d;
    ValidationReport rep;

    ConditionResult c1{"eigenvalues-distinct", true, ""};
    for (int i = 0; i <= d && c1.pass; ++i)
        for (int j = i + 1; j <= d && c1.pass; ++j) {
            if (pa.theta[i] == pa.theta[j]) {
                c1.pass = false;
                c1.detail = "theta_" + std::to_string(i) + " = theta_" + std::to_string(j);
            } else if (pa.theta_star[i] == pa.theta_star[j]) {
                c1.pass = false;
                c1.detail = "theta*_" + std::to_string(i) + " = theta*_" + std::to_string(j);
            }
        }
    rep.conditions.push_back(c1);

    ConditionResult c2{"split-sequences-nonzero", true, ""};
    for (int i = 1; i <= d && c2.pass; ++i) {
        if (pa.varphi[i - 1].is_zero()) {
            c2.pass = false;
            c2.detail = "varphi_" + std::to_string(i) + " = 0";
        } else if (pa.phi[i - 1].is_zero()) {
            c2.pass = false;
            c2.detail = "phi_" + std::to_string(i) + " = 0";
        }
    }
    rep.conditions.push_back(c2);

    // conditions (iii), (iv) need theta_0 != theta_d; skip them when the
    // distinctness check already failed there
    ConditionResult c3{"varphi-identity", true, ""};
    ConditionResult c4{"phi-identity", true, ""};
    if (pa.theta[0] == pa.theta[d]) {
        c3.pass = c4.pass = false;
        c3.detail = c4.detail = "theta_0 = theta_d, identity undefined";
    } else {
        const K span = pa.theta[0] - pa.theta[d];
        K partial = pa.sample().zero_like();
        for (int i = 1; i <= d; ++i) {
            partial += (pa.theta[i - 1] - pa.theta[d - i + 1]) / span;
            K rhs3 = pa.phi[0] * partial +
                     (pa.theta_star[i] - pa.theta_star[0]) * (pa.theta[i - 1] - pa.theta[d]);
            if (c3.pass && pa.varphi[i - 1] != rhs3) {
                c3.pass = false;
                c3.detail = "fails at i = " + std::to_string(i);
            }
            K rhs4 = pa.varphi[0] * partial +
                     (pa.theta_star[i] - pa.theta_star[0]) * (pa.theta[d - i + 1] - pa.theta[0]);
            if (c4.pass && pa.phi[i - 1] != rhs4) {
                c4.pass = false;
                c4.detail = "fails at i = " + std::to_string(i);
            }
        }
    }
    rep.conditions.push_back(c3);
    rep.conditions.push_back(c4);

    ConditionResult c5{"ratio-independence", true, ""};
    if (d >= 3) {
        bool have = false;
        K common = pa.sample().zero_like();
        for (int i = 2; i <= d - 1 && c5.pass; ++i) {
            K den = pa.theta[i - 1] - pa.theta[i];
            K dens = pa.theta_star[i - 1] - pa.theta_star[i];
            if (den.is_zero() || dens.is_zero()) {
                c5.pass = false;
                c5.detail = "zero denominator at i = " + std::to_string(i);
                break;
            }
            K r = (pa.theta[i - 2] - pa.theta[i + 1]) / den;
            K rs = (pa.theta_star[i - 2] - pa.theta_star[i + 1]) / dens;
            if (r != rs) {
                c5.pass = false;
                c5.detail = "primal and dual ratios differ at i = " + std::to_string(i);
            } else if (have && r != common) {
                c5.pass = false;
                c5.detail = "ratio depends on i near i = " + std::to_string(i);
            }
            common = r;
            have = true;
        }
    }
    rep.conditions.push_back(c5);
    return rep;
}

// beta: one less than the common value of the three-term eigenvalue ratios.
// Defined for d >= 3 only.
template <Field K>
K fundamental_beta(const ParameterArray<K>& pa) {
    pa.check_shape();
    if (pa.d < 3)
        throw DiameterTooSmall("fundamental parameter needs d >= 3, got d = " + std::to_string(pa.d));
    bool have = false;
    K common = pa.sample().zero_like();
    for (int i = 2; i <= pa.d - 1; ++i) {
        K den = pa.theta[i - 1] - pa.theta[i];
        K dens = pa.theta_star[i - 1] - pa.theta_star[i];
        if (den.is_zero() || dens.is_zero())
            throw NotConstant("ratio undefined at i = " + std::to_string(i));
        K r = (pa.theta[i - 2] - pa.theta[i + 1]) / den;
        K rs = (pa.theta_star[i - 2] - pa.theta_star[i + 1]) / dens;
        if (r != rs || (have && r != common))
            throw NotConstant("eigenvalue ratios not constant at i = " + std::to_string(i));
        common = r;
        have = true;
    }
    return common - pa.sample().one_like();
}

enum class Relative {
    DualReversed,    // reverse the dual idempotent ordering
    PrimalReversed,  // reverse the primal idempotent ordering
    BothReversed,
};

// Parameter array of the relative obtained by reversing one or both
// idempotent orderings.
template <Field K>
ParameterArray<K> d4_relative(const ParameterArray<K>& pa, Relative which) {
    pa.check_shape();
    ParameterArray<K> r = pa;
    auto rev = [](std::vector<K> v) {
        std::reverse(v.begin(), v.end());
        return v;
    };
    switch (which) {
    case Relative::DualReversed:
        r.theta_star = rev(pa.theta_star);
        r.varphi = rev(pa.phi);
        r.phi = rev(pa.varphi);
        break;
    case Relative::PrimalReversed:
        r.theta = rev(pa.theta);
        r.varphi = pa.phi;
        r.phi = pa.varphi;
        break;
    case Relative::BothReversed:
        r.theta = rev(pa.theta);
        r.theta_star = rev(pa.theta_star);
        r.varphi = rev(pa.varphi);
        r.phi = rev(pa.phi);
        break;
    }
    return r;
}

// ({xi theta_i}, {xi* theta*_i}, {xi xi* varphi_i}, {xi xi* phi_i}); the
// parameter array of the pair (xi A, xi* A*).
template <Field K>
ParameterArray<K> affine_scale(const ParameterArray<K>& pa, const K& xi, const K& xi_star) {
    pa.check_shape();
    if (xi.is_zero() || xi_star.is_zero())
        throw ZeroScale("affine scaling by zero");
    ParameterArray<K> r = pa;
    for (auto& t : r.theta) t = xi * t;
    for (auto& t : r.theta_star) t = xi_star * t;
    const K c = xi * xi_star;
    for (auto& v : r.varphi) v = c * v;
    for (auto& v : r.phi) v = c * v;
    return r;
}

// Whether the array is that of a pair isomorphic to its opposite:
// theta and theta* antisymmetric, varphi and phi palindromic.
template <Field K>
bool is_opposite_symmetric(const ParameterArray<K>& pa) {
    pa.check_shape();
    const int d = pa.d;
    for (int i = 0; i <= d; ++i) {
        if (!(pa.theta[i] + pa.theta[d - i]).is_zero()) return false;
        if (!(pa.theta_star[i] + pa.theta_star[d - i]).is_zero()) return false;
    }
    for (int i = 1; i <= d; ++i) {
        if (pa.varphi[i - 1] != pa.varphi[d - i]) return false;
        if (pa.phi[i - 1] != pa.phi[d - i]) return false;
    }
    return true;
}

} // namespace zdtd
