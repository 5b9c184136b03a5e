#pragma once

#include <vector>

#include "zdtd/matrix.hpp"
#include "zdtd/polynomial.hpp"

namespace zdtd {

// Primitive idempotents of a multiplicity-free matrix, in the order of the
// given eigenvalue sequence.  E_i E_j = delta_{ij} E_i, sum E_i = I,
// A = sum theta_i E_i.
template <Field K>
struct IdempotentSet {
    std::vector<Matrix<K>> idempotents;
    std::vector<K> eigenvalues;

    int diameter() const { return static_cast<int>(eigenvalues.size()) - 1; }
};

// Lagrange product formula: E_i = prod_{l != i} (A - theta_l I)/(theta_i - theta_l).
template <Field K>
IdempotentSet<K> primitive_idempotents(const Matrix<K>& a, const std::vector<K>& eigs) {
    const int n = a.dim();
    if (static_cast<int>(eigs.size()) != n)
        throw NotMultiplicityFree("expected " + std::to_string(n) + " eigenvalues, got " +
                                  std::to_string(eigs.size()));
    for (std::size_t i = 0; i < eigs.size(); ++i)
        for (std::size_t j = i + 1; j < eigs.size(); ++j)
            if (eigs[i] == eigs[j])
                throw NotMultiplicityFree("repeated eigenvalue " + eigs[i].to_string());

    // char poly must split as prod (x - theta_i) over exactly this list
    Polynomial<K> f = char_poly(a);
    for (const auto& th : eigs) {
        if (!f.evaluate(th).is_zero())
            throw EigenvalueMismatch(th.to_string() + " is not an eigenvalue");
        f = Polynomial<K>::divide_exact(f, Polynomial<K>::x_minus(th));
    }

    IdempotentSet<K> set;
    set.eigenvalues = eigs;
    set.idempotents.reserve(eigs.size());
    const Matrix<K> id = Matrix<K>::identity(n, a.sample());
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        Matrix<K> e = id;
        for (std::size_t l = 0; l < eigs.size(); ++l) {
            if (l == i) continue;
            K denom = (eigs[i] - eigs[l]).inverse();
            e = e * (denom * (a - eigs[l] * id));
        }
        set.idempotents.push_back(std::move(e));
    }
    return set;
}

} // namespace zdtd
