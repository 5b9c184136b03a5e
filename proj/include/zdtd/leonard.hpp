#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "zdtd/idempotents.hpp"
#include "zdtd/parameter_array.hpp"
#include "zdtd/roots.hpp"

namespace zdtd {

// A Leonard pair together with compatible orderings of both idempotent
// sets: each matrix multiplicity-free, E_i A* E_j and E*_i A E*_j zero for
// |i-j| > 1 and nonzero for |i-j| = 1.
template <Field K>
struct LeonardSystem {
    Matrix<K> a;
    Matrix<K> a_star;
    IdempotentSet<K> e;       // ordering for a
    IdempotentSet<K> e_star;  // ordering for a_star

    int diameter() const { return e.diameter(); }
};

namespace detail {

// Eigenvalues of a multiplicity-free matrix over the working field, in
// canonical order. Throws when the spectrum is repeated or incomplete.
template <Field K>
std::vector<K> multiplicity_free_spectrum(const Matrix<K>& a) {
    auto roots = rational_roots(char_poly(a));
    int total = 0;
    for (const auto& [r, m] : roots) {
        if (m > 1)
            throw NotMultiplicityFree("eigenvalue " + r.to_string() + " has multiplicity " +
                                      std::to_string(m));
        total += m;
    }
    if (total != a.dim())
        throw FieldExtensionRequired("characteristic polynomial does not split over the working field (" +
                                     std::to_string(total) + " of " + std::to_string(a.dim()) +
                                     " eigenvalues found)");
    std::vector<K> eigs;
    eigs.reserve(roots.size());
    for (const auto& [r, m] : roots) eigs.push_back(r);
    return eigs;
}

// Support of the conjugated action: edges (i,j), i != j, where
// E_i M E_j != 0. For a Leonard pair this graph is a Hamiltonian path.
template <Field K>
std::vector<std::pair<int, int>> support_edges(const IdempotentSet<K>& e, const Matrix<K>& m) {
    std::vector<std::pair<int, int>> edges;
    const int n = e.diameter() + 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix<K> prod = e.idempotents[static_cast<std::size_t>(i)] * m *
                             e.idempotents[static_cast<std::size_t>(j)];
            if (!prod.is_zero()) edges.emplace_back(i, j);
        }
    return edges;
}

// If the undirected support graph is a Hamiltonian path, returns a
// traversal order; otherwise nullopt.
inline std::optional<std::vector<int>> hamiltonian_path_order(
    int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 1) return std::vector<int>{0};
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [i, j] : edges) {
        int a = std::min(i, j), b = std::max(i, j);
        if (!seen[a][b]) {
            seen[a][b] = true;
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
    }
    int ends = 0, start = -1;
    for (int v = 0; v < n; ++v) {
        if (adj[static_cast<std::size_t>(v)].size() == 1) {
            ++ends;
            if (start < 0) start = v;
        } else if (adj[static_cast<std::size_t>(v)].size() != 2) {
            return std::nullopt;
        }
    }
    if (ends != 2) return std::nullopt;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : adj[static_cast<std::size_t>(cur)])
            if (w != prev) { next = w; break; }
        if (next < 0) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

template <Field K>
IdempotentSet<K> reorder(const IdempotentSet<K>& e, const std::vector<int>& order) {
    IdempotentSet<K> r;
    r.idempotents.reserve(order.size());
    r.eigenvalues.reserve(order.size());
    for (int i : order) {
        r.idempotents.push_back(e.idempotents[static_cast<std::size_t>(i)]);
        r.eigenvalues.push_back(e.eigenvalues[static_cast<std::size_t>(i)]);
    }
    return r;
}

// Checks tridiagonality of E_i M E_j under the ordering of e; returns the
// first offending (i, j) and whether it violated the zero or the nonzero
// requirement.
template <Field K>
std::optional<std::pair<std::pair<int, int>, bool>> tridiagonal_violation(
    const IdempotentSet<K>& e, const Matrix<K>& m) {
    const int n = e.diameter() + 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool nonzero = !(e.idempotents[static_cast<std::size_t>(i)] * m *
                             e.idempotents[static_cast<std::size_t>(j)])
                                .is_zero();
            if (std::abs(i - j) > 1 && nonzero)
                return std::make_pair(std::make_pair(i, j), true);
            if (std::abs(i - j) == 1 && !nonzero)
                return std::make_pair(std::make_pair(i, j), false);
        }
    return std::nullopt;
}

} // namespace detail

// Every Leonard system associated with the pair (a, a_star): none when the
// pair is not a Leonard pair over the working field, four (two orderings a
// side) otherwise. The orderings are found from the support graph of one
// matrix on the other's eigenbasis, which must be a Hamiltonian path.
template <Field K>
std::vector<LeonardSystem<K>> find_leonard_orderings(const Matrix<K>& a, const Matrix<K>& a_star) {
    if (a.dim() != a_star.dim())
        throw DimensionMismatch("pair matrices differ in dimension");

    std::vector<K> eigs_a = detail::multiplicity_free_spectrum(a);
    std::vector<K> eigs_as = detail::multiplicity_free_spectrum(a_star);
    IdempotentSet<K> e0 = primitive_idempotents(a, eigs_a);
    IdempotentSet<K> es0 = primitive_idempotents(a_star, eigs_as);

    auto order_a = detail::hamiltonian_path_order(a.dim(), detail::support_edges(e0, a_star));
    auto order_as = detail::hamiltonian_path_order(a.dim(), detail::support_edges(es0, a));
    if (!order_a || !order_as) return {};

    std::vector<std::vector<int>> orders_a{*order_a};
    std::vector<std::vector<int>> orders_as{*order_as};
    if (a.dim() > 1) {
        orders_a.push_back({order_a->rbegin(), order_a->rend()});
        orders_as.push_back({order_as->rbegin(), order_as->rend()});
    }

    std::vector<LeonardSystem<K>> systems;
    for (const auto& oa : orders_a)
        for (const auto& os : orders_as) {
            IdempotentSet<K> e = detail::reorder(e0, oa);
            IdempotentSet<K> es = detail::reorder(es0, os);
            if (detail::tridiagonal_violation(e, a_star) || detail::tridiagonal_violation(es, a))
                continue;
            systems.push_back(LeonardSystem<K>{a, a_star, std::move(e), std::move(es)});
        }
    return systems;
}

// Reverses one or both idempotent orderings of a system.
template <Field K>
LeonardSystem<K> relative(const LeonardSystem<K>& sys, Relative which) {
    auto rev = [](IdempotentSet<K> e) {
        std::reverse(e.idempotents.begin(), e.idempotents.end());
        std::reverse(e.eigenvalues.begin(), e.eigenvalues.end());
        return e;
    };
    LeonardSystem<K> r = sys;
    if (which == Relative::DualReversed || which == Relative::BothReversed) r.e_star = rev(r.e_star);
    if (which == Relative::PrimalReversed || which == Relative::BothReversed) r.e = rev(r.e);
    return r;
}

// First split sequence from an explicit split basis: picks a nonzero
// v in E*_0 V, forms u_i = (A - theta_{i-1} I) ... (A - theta_0 I) v,
// asserts the bidiagonal shapes of the represented pair, and reads the
// superdiagonal of the second matrix. Returns the sequence and the basis.
template <Field K>
std::pair<std::vector<K>, Matrix<K>> split_sequence(const LeonardSystem<K>& sys) {
    const int n = sys.a.dim();
    const Matrix<K>& es0 = sys.e_star.idempotents.at(0);

    // first nonzero column under column-major scan; E*_0 V is 1-dimensional
    // so any choice differs by a scalar only
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
        for (int i = 0; i < n; ++i)
            if (!es0(i, j).is_zero()) { col = j; break; }
    if (col < 0)
        throw DegenerateBasis("E*_0 is the zero matrix");

    std::vector<K> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(es0(i, col));

    Matrix<K> basis(n, sys.a.sample().zero_like());
    for (int i = 0; i < n; ++i) basis(i, 0) = v[static_cast<std::size_t>(i)];
    for (int k = 1; k < n; ++k) {
        const K& th = sys.e.eigenvalues[static_cast<std::size_t>(k - 1)];
        std::vector<K> next;
        next.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            K acc = -(th * v[static_cast<std::size_t>(i)]);
            for (int j = 0; j < n; ++j)
                acc += sys.a(i, j) * v[static_cast<std::size_t>(j)];
            next.push_back(std::move(acc));
        }
        v = std::move(next);
        for (int i = 0; i < n; ++i) basis(i, k) = v[static_cast<std::size_t>(i)];
    }

    Matrix<K> binv = [&] {
        try {
            return inverse(basis);
        } catch (const SingularMatrix&) {
            throw DegenerateBasis("split basis is not a basis");
        }
    }();
    Matrix<K> rep_a = binv * sys.a * basis;
    Matrix<K> rep_as = binv * sys.a_star * basis;

    const K one = sys.a.sample().one_like();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                if (rep_a(i, i) != sys.e.eigenvalues[static_cast<std::size_t>(i)] ||
                    rep_as(i, i) != sys.e_star.eigenvalues[static_cast<std::size_t>(i)])
                    throw ConsistencyError("split representation has wrong diagonal");
            } else if (i == j + 1) {
                if (rep_a(i, j) != one)
                    throw ConsistencyError("split representation of A is not unit lower bidiagonal");
                if (!rep_as(i, j).is_zero())
                    throw ConsistencyError("split representation of A* is not upper bidiagonal");
            } else if (j == i + 1) {
                if (!rep_a(i, j).is_zero())
                    throw ConsistencyError("split representation of A is not lower bidiagonal");
            } else {
                if (!rep_a(i, j).is_zero() || !rep_as(i, j).is_zero())
                    throw ConsistencyError("split representation is not bidiagonal");
            }
        }

    std::vector<K> varphi;
    varphi.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) varphi.push_back(rep_as(i - 1, i));
    return {std::move(varphi), std::move(basis)};
}

// First and second split sequences through the trace quotients
//   varphi_i = (th*_0 - th*_i) tr(E*_0 prod_{l<i} (A - th_l)) / tr(E*_0 prod_{l<i-1} (A - th_l)),
// and the same with the reversed eigenvalue order for phi.
template <Field K>
std::pair<std::vector<K>, std::vector<K>> trace_split_sequence(const LeonardSystem<K>& sys) {
    const int n = sys.a.dim();
    const int d = n - 1;
    const Matrix<K> id = Matrix<K>::identity(n, sys.a.sample());
    const Matrix<K>& es0 = sys.e_star.idempotents.at(0);
    const auto& th = sys.e.eigenvalues;
    const auto& ths = sys.e_star.eigenvalues;

    auto run = [&](bool reversed) {
        std::vector<K> seq;
        seq.reserve(static_cast<std::size_t>(d));
        Matrix<K> prod = es0;
        K prev_trace = prod.trace();
        for (int i = 1; i <= d; ++i) {
            const K& factor = reversed ? th[static_cast<std::size_t>(d - (i - 1))]
                                       : th[static_cast<std::size_t>(i - 1)];
            prod = prod * (sys.a - factor * id);
            K cur = prod.trace();
            if (prev_trace.is_zero())
                throw ZeroTraceDenominator("trace denominator vanished at i = " + std::to_string(i));
            seq.push_back((ths[0] - ths[static_cast<std::size_t>(i)]) * cur / prev_trace);
            prev_trace = std::move(cur);
        }
        return seq;
    };
    return {run(false), run(true)};
}

// The parameter array of a system: eigenvalue sequences plus the two split
// sequences.
template <Field K>
ParameterArray<K> extract_parameter_array(const LeonardSystem<K>& sys) {
    ParameterArray<K> pa;
    pa.d = sys.diameter();
    pa.theta = sys.e.eigenvalues;
    pa.theta_star = sys.e_star.eigenvalues;
    auto [varphi, phi] = trace_split_sequence(sys);
    pa.varphi = std::move(varphi);
    pa.phi = std::move(phi);
    return pa;
}

// a_i = tr(E*_i A) and a*_i = tr(E_i A*); checked against their closed
// forms in terms of the parameter array (with varphi_0 = varphi_{d+1} = 0).
template <Field K>
std::pair<std::vector<K>, std::vector<K>> a_scalars(const LeonardSystem<K>& sys) {
    const int d = sys.diameter();
    std::vector<K> a, a_star;
    a.reserve(static_cast<std::size_t>(d + 1));
    a_star.reserve(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        a.push_back((sys.e_star.idempotents[static_cast<std::size_t>(i)] * sys.a).trace());
        a_star.push_back((sys.e.idempotents[static_cast<std::size_t>(i)] * sys.a_star).trace());
    }

    ParameterArray<K> pa = extract_parameter_array(sys);
    for (int i = 0; i <= d; ++i) {
        K lhs = a[static_cast<std::size_t>(i)] - pa.theta[static_cast<std::size_t>(i)];
        K lhs_star = a_star[static_cast<std::size_t>(i)] - pa.theta_star[static_cast<std::size_t>(i)];
        K rhs = pa.sample().zero_like();
        K rhs_star = rhs;
        if (i >= 1) {
            rhs += pa.varphi[static_cast<std::size_t>(i - 1)] /
                   (pa.theta_star[static_cast<std::size_t>(i)] - pa.theta_star[static_cast<std::size_t>(i - 1)]);
            rhs_star += pa.varphi[static_cast<std::size_t>(i - 1)] /
                        (pa.theta[static_cast<std::size_t>(i)] - pa.theta[static_cast<std::size_t>(i - 1)]);
        }
        if (i <= d - 1) {
            rhs += pa.varphi[static_cast<std::size_t>(i)] /
                   (pa.theta_star[static_cast<std::size_t>(i)] - pa.theta_star[static_cast<std::size_t>(i + 1)]);
            rhs_star += pa.varphi[static_cast<std::size_t>(i)] /
                        (pa.theta[static_cast<std::size_t>(i)] - pa.theta[static_cast<std::size_t>(i + 1)]);
        }
        if (lhs != rhs || lhs_star != rhs_star)
            throw ConsistencyError("trace scalars disagree with their closed form at i = " +
                                   std::to_string(i));
    }
    return {std::move(a), std::move(a_star)};
}

// Leonard systems are isomorphic exactly when their parameter arrays agree.
template <Field K>
bool is_isomorphic(const LeonardSystem<K>& s1, const LeonardSystem<K>& s2) {
    if (s1.diameter() != s2.diameter()) return false;
    return extract_parameter_array(s1) == extract_parameter_array(s2);
}

// Pair-level verification report: one entry per defining condition, with
// offending indices where a condition fails.
struct PairConditionReport {
    std::string name;
    bool pass = false;
    std::string detail;
    std::vector<std::pair<int, int>> witnesses;
};

struct PairReport {
    std::vector<PairConditionReport> conditions;
    int systems_found = 0;

    bool is_leonard_pair() const { return systems_found > 0; }
};

template <Field K>
PairReport verify_pair(const Matrix<K>& a, const Matrix<K>& a_star) {
    PairReport rep;
    auto fail = [&](const std::string& name, const std::string& detail,
                    std::vector<std::pair<int, int>> witnesses = {}) {
        rep.conditions.push_back(PairConditionReport{name, false, detail, std::move(witnesses)});
    };
    auto pass = [&](const std::string& name) {
        rep.conditions.push_back(PairConditionReport{name, true, "", {}});
    };

    std::optional<IdempotentSet<K>> e, es;
    for (int side = 0; side < 2; ++side) {
        const Matrix<K>& m = side == 0 ? a : a_star;
        std::string name = side == 0 ? "A-multiplicity-free" : "A*-multiplicity-free";
        try {
            auto eigs = detail::multiplicity_free_spectrum(m);
            (side == 0 ? e : es) = primitive_idempotents(m, eigs);
            pass(name);
        } catch (const Error& err) {
            fail(name, err.what());
        }
    }
    if (!e || !es) return rep;

    for (int side = 0; side < 2; ++side) {
        const IdempotentSet<K>& basis = side == 0 ? *e : *es;
        const Matrix<K>& other = side == 0 ? a_star : a;
        std::string name = side == 0 ? "A*-tridiagonal-on-A-eigenbasis" : "A-tridiagonal-on-A*-eigenbasis";
        auto edges = detail::support_edges(basis, other);
        auto order = detail::hamiltonian_path_order(a.dim(), edges);
        if (order) {
            auto reordered = detail::reorder(basis, *order);
            if (auto viol = detail::tridiagonal_violation(reordered, other)) {
                fail(name,
                     viol->second ? "block nonzero beyond distance 1" : "block zero at distance 1",
                     {viol->first});
            } else {
                pass(name);
            }
        } else {
            fail(name, "support graph of the conjugated action is not a Hamiltonian path", edges);
        }
    }

    if (rep.conditions[2].pass && rep.conditions[3].pass)
        rep.systems_found = static_cast<int>(find_leonard_orderings(a, a_star).size());
    return rep;
}

} // namespace zdtd
