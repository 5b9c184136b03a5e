#pragma once

#include <string>
#include <utility>
#include <variant>

#include "zdtd/parameter_array.hpp"

namespace zdtd {

// Parameters of the families of zero-diagonal TD-TD Leonard pairs in scope.
// The first five exist for d >= 3 (Krawtchouk at beta = 2, Bannai-Ito at
// beta = -2 with even d, three q-Racah shapes otherwise); D1/D2a/D2b cover
// the small diameters.
template <Field K> struct Krawtchouk { K s; };
template <Field K> struct BannaiIto { K tau; int epsilon = 1; };
template <Field K> struct QRacahCompact { K q, s; };
template <Field K> struct QRacahLT { K q, s; };
template <Field K> struct QRacahEven { K q, s; };
template <Field K> struct D1Family { K s; };
template <Field K> struct D2aFamily { K y, z; };
template <Field K> struct D2bFamily { K s, t, z; };

template <Field K>
using FamilyParams = std::variant<Krawtchouk<K>, BannaiIto<K>, QRacahCompact<K>,
                                  QRacahLT<K>, QRacahEven<K>, D1Family<K>,
                                  D2aFamily<K>, D2bFamily<K>>;

template <Field K>
std::string family_name(const FamilyParams<K>& fam) {
    struct Namer {
        std::string operator()(const Krawtchouk<K>&) const { return "krawtchouk"; }
        std::string operator()(const BannaiIto<K>&) const { return "bannai_ito"; }
        std::string operator()(const QRacahCompact<K>&) const { return "qracah_compact"; }
        std::string operator()(const QRacahLT<K>&) const { return "qracah_lt"; }
        std::string operator()(const QRacahEven<K>&) const { return "qracah_even"; }
        std::string operator()(const D1Family<K>&) const { return "d1"; }
        std::string operator()(const D2aFamily<K>&) const { return "d2a"; }
        std::string operator()(const D2bFamily<K>&) const { return "d2b"; }
    };
    return std::visit(Namer{}, fam);
}

namespace detail {

template <Field K>
void require_char_not_two(const K& sample) {
    if (sample.field_char() == 2)
        throw InadmissibleParams("char(F) = 2; no pair in scope exists over such a field");
}

template <Field K>
void require_char_zero_or_above(const K& sample, int d) {
    require_char_not_two(sample);
    long p = sample.field_char();
    if (p != 0 && p <= d)
        throw InadmissibleParams("char(F) = " + std::to_string(p) + " is not 0 and not greater than d = " +
                                 std::to_string(d));
}

template <Field K>
void check_q_racah_base(const K& q, const K& s, int d) {
    if (q.is_zero()) throw InadmissibleParams("q = 0");
    if (s.is_zero()) throw InadmissibleParams("s = 0");
    const K one = q.one_like();
    for (int i = 1; i <= d; ++i)
        if (q.pow(i) == one)
            throw InadmissibleParams("q^i = 1 at i = " + std::to_string(i));
    for (int i = 0; i <= d - 1; ++i)
        if (q.pow(i) == -one)
            throw InadmissibleParams("q^i = -1 at i = " + std::to_string(i));
    const K s2 = s * s;
    for (int i = 0; i <= d - 1; ++i)
        if (s2 == q.pow(2 * i))
            throw InadmissibleParams("s^2 = q^(2i) at i = " + std::to_string(i));
}

} // namespace detail

// Checks the admissibility conditions of a family at diameter d; throws a
// named error describing the violated condition.
template <Field K>
void check_admissible(const FamilyParams<K>& fam, int d) {
    if (d < 1)
        throw DiameterTooSmall("d = " + std::to_string(d));
    if (std::holds_alternative<Krawtchouk<K>>(fam)) {
        const auto& f = std::get<Krawtchouk<K>>(fam);
        if (d < 3) throw DiameterMismatch("krawtchouk family needs d >= 3");
        detail::require_char_zero_or_above(f.s, d);
        if (f.s.is_zero()) throw InadmissibleParams("s = 0");
        if (f.s * f.s == f.s.one_like()) throw InadmissibleParams("s^2 = 1");
    } else if (std::holds_alternative<BannaiIto<K>>(fam)) {
        const auto& f = std::get<BannaiIto<K>>(fam);
        if (d < 3) throw DiameterMismatch("bannai_ito family needs d >= 3");
        if (d % 2 != 0) throw OddDiameter("bannai_ito family needs even d, got " + std::to_string(d));
        if (f.epsilon != 1 && f.epsilon != -1)
            throw InadmissibleParams("epsilon must be +1 or -1");
        detail::require_char_zero_or_above(f.tau, d);
        for (int k = 1 - d; k <= d - 1; k += 2)
            if (f.tau == f.tau.from_int(k))
                throw InadmissibleParams("tau = " + std::to_string(k) +
                                         ", an odd integer between 1-d and d-1");
    } else if (std::holds_alternative<QRacahCompact<K>>(fam)) {
        const auto& f = std::get<QRacahCompact<K>>(fam);
        if (d < 3) throw DiameterMismatch("qracah_compact family needs d >= 3");
        detail::require_char_not_two(f.q);
        detail::check_q_racah_base(f.q, f.s, d);
    } else if (std::holds_alternative<QRacahLT<K>>(fam)) {
        const auto& f = std::get<QRacahLT<K>>(fam);
        if (d < 3) throw DiameterMismatch("qracah_lt family needs d >= 3");
        detail::require_char_not_two(f.q);
        detail::check_q_racah_base(f.q, f.s, d);
        const K s2 = f.s * f.s;
        for (int i = 0; i <= 2 * d - 2; ++i)
            if (s2 == f.q.pow(i))
                throw InadmissibleParams("s^2 = q^i at i = " + std::to_string(i));
    } else if (std::holds_alternative<QRacahEven<K>>(fam)) {
        const auto& f = std::get<QRacahEven<K>>(fam);
        if (d < 3) throw DiameterMismatch("qracah_even family needs d >= 3");
        if (d % 2 != 0) throw OddDiameter("qracah_even family needs even d, got " + std::to_string(d));
        detail::require_char_not_two(f.q);
        detail::check_q_racah_base(f.q, f.s, d);
    } else if (std::holds_alternative<D1Family<K>>(fam)) {
        const auto& f = std::get<D1Family<K>>(fam);
        if (d != 1) throw DiameterMismatch("d1 family needs d = 1, got " + std::to_string(d));
        detail::require_char_not_two(f.s);
        if (f.s.is_zero()) throw InadmissibleParams("s = 0");
        if (f.s * f.s == f.s.one_like()) throw InadmissibleParams("s^2 = 1");
    } else if (std::holds_alternative<D2aFamily<K>>(fam)) {
        const auto& f = std::get<D2aFamily<K>>(fam);
        if (d != 2) throw DiameterMismatch("d2a family needs d = 2, got " + std::to_string(d));
        detail::require_char_not_two(f.y);
        const K one = f.y.one_like();
        if (f.y.is_zero()) throw InadmissibleParams("y = 0");
        if (f.z.is_zero()) throw InadmissibleParams("z = 0");
        if (f.y == one) throw InadmissibleParams("y = 1");
        if (f.y == -one) throw InadmissibleParams("y = -1");
        if (f.z == one) throw InadmissibleParams("z = 1");
        if (f.y * f.z == one) throw InadmissibleParams("yz = 1");
        if ((f.y + one) * f.z == f.y.from_int(2)) throw InadmissibleParams("(y+1)z = 2");
    } else {
        const auto& f = std::get<D2bFamily<K>>(fam);
        if (d != 2) throw DiameterMismatch("d2b family needs d = 2, got " + std::to_string(d));
        detail::require_char_not_two(f.s);
        const K one = f.s.one_like();
        if (f.s.is_zero()) throw InadmissibleParams("s = 0");
        if (f.t.is_zero()) throw InadmissibleParams("t = 0");
        if (f.z.is_zero()) throw InadmissibleParams("z = 0");
        if (f.s * f.s == one) throw InadmissibleParams("s^2 = 1");
        if (f.t * f.t == one) throw InadmissibleParams("t^2 = 1");
        if ((f.s + f.t).is_zero()) throw InadmissibleParams("s + t = 0");
        if (f.z == one) throw InadmissibleParams("z = 1");
        // superdiagonal entries of the second matrix must not vanish
        K y1 = f.t * f.z + (one - f.t * f.t) / (f.s + f.t);
        K y2 = -(f.s * f.z) + (one + f.s * f.t) / (f.s + f.t);
        if (y1.is_zero()) throw InadmissibleParams("tz + (1-t^2)/(s+t) = 0");
        if (y2.is_zero()) throw InadmissibleParams("-sz + (1+st)/(s+t) = 0");
    }
}

// The closed-form parameter array of a family instance; output passes
// validate() whenever the admissibility conditions hold.
template <Field K>
ParameterArray<K> closed_form(const FamilyParams<K>& fam, int d) {
    check_admissible(fam, d);
    ParameterArray<K> pa;
    pa.d = d;

    if (std::holds_alternative<Krawtchouk<K>>(fam)) {
        const auto& f = std::get<Krawtchouk<K>>(fam);
        const K tau_m = f.s + f.s.inverse() - f.s.from_int(2);
        const K tau_p = f.s + f.s.inverse() + f.s.from_int(2);
        for (int i = 0; i <= d; ++i) pa.theta.push_back(f.s.from_int(d - 2 * i));
        pa.theta_star = pa.theta;
        for (int i = 1; i <= d; ++i) {
            const K c = f.s.from_int(i * (d - i + 1));
            pa.varphi.push_back(c * tau_m);
            pa.phi.push_back(c * tau_p);
        }
    } else if (std::holds_alternative<BannaiIto<K>>(fam)) {
        const auto& f = std::get<BannaiIto<K>>(fam);
        auto num = [&](long n) { return f.tau.from_int(n); };
        for (int i = 0; i <= d; ++i)
            pa.theta.push_back(num(i % 2 == 0 ? 2 * i - d : d - 2 * i));
        pa.theta_star = pa.theta;
        for (int i = 1; i <= d; ++i) {
            if (i % 2 == 0) {
                pa.varphi.push_back(num(2 * i) * (num(d - 2 * i + 1) + f.tau));
                pa.phi.push_back(num(-2 * i) * (num(d - 2 * i + 1) - f.tau));
            } else {
                pa.varphi.push_back(num(-2 * (d - i + 1)) * (num(d - 2 * i + 1) - f.tau));
                pa.phi.push_back(num(2 * (d - i + 1)) * (num(d - 2 * i + 1) + f.tau));
            }
        }
    } else if (std::holds_alternative<D1Family<K>>(fam)) {
        const auto& f = std::get<D1Family<K>>(fam);
        const K one = f.s.one_like();
        pa.theta = {one, -one};
        pa.theta_star = pa.theta;
        pa.varphi = {f.s + f.s.inverse() - f.s.from_int(2)};
        pa.phi = {f.s + f.s.inverse() + f.s.from_int(2)};
    } else if (std::holds_alternative<D2aFamily<K>>(fam)) {
        const auto& f = std::get<D2aFamily<K>>(fam);
        const K one = f.y.one_like();
        pa.theta = {one, f.y.zero_like(), -one};
        pa.theta_star = pa.theta;
        const K c = (f.y + one) * f.z;
        pa.varphi = {c - f.y.from_int(2), c - f.y.from_int(2)};
        pa.phi = {c, c};
    } else if (std::holds_alternative<D2bFamily<K>>(fam)) {
        const auto& f = std::get<D2bFamily<K>>(fam);
        const K one = f.s.one_like();
        pa.theta = {one, f.s.zero_like(), -one};
        pa.theta_star = pa.theta;
        const K vp = (f.s - one) * (f.t - one) / (f.s + f.t);
        const K ph = (f.s + one) * (f.t + one) / (f.s + f.t);
        pa.varphi = {vp, vp};
        pa.phi = {ph, ph};
    } else {
        // the three q-Racah shapes share one parameter array
        const auto [q, s] = [&]() -> std::pair<K, K> {
            if (std::holds_alternative<QRacahCompact<K>>(fam)) {
                const auto& f = std::get<QRacahCompact<K>>(fam);
                return {f.q, f.s};
            }
            if (std::holds_alternative<QRacahLT<K>>(fam)) {
                const auto& f = std::get<QRacahLT<K>>(fam);
                return {f.q, f.s};
            }
            const auto& f = std::get<QRacahEven<K>>(fam);
            return {f.q, f.s};
        }();
        const K one = q.one_like();
        for (int i = 0; i <= d; ++i) pa.theta.push_back(q.pow(i) - q.pow(d - i));
        pa.theta_star = pa.theta;
        for (int i = 1; i <= d; ++i) {
            const K lead = (q.pow(i) - one) * (q.pow(d - i + 1) - one) * s.inverse();
            pa.varphi.push_back(lead * (s - q.pow(i - 1)) * (s - q.pow(d - i)));
            pa.phi.push_back(lead * (s + q.pow(i - 1)) * (s + q.pow(d - i)));
        }
    }
    return pa;
}

} // namespace zdtd
