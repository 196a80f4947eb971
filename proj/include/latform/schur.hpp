#pragma once

#include <vector>

#include "latform/fock.hpp"

namespace latform {

// Coefficient s_{x_i, n} of z^n in exp(sum_{r>0} x_i(-r) z^r / r):
// sum over partitions of n with multiplicities m_j of
// prod_j x_i(-j)^{m_j} / (j^{m_j} m_j!).
FockElement schur_coefficient(int var, int n);

// Basis of the weight-n piece of the Schur-coefficient integral form.
// Elements are indexed by k-tuples of partitions with total weight n; the
// element for (lambda^(1), ..., lambda^(k)) is prod_i prod_t s_{x_i, part}.
struct ABasis {
    int k = 0;
    int n = 0;
    std::vector<FockElement> elements;
    // per element: the k partitions, each weakly decreasing
    std::vector<std::vector<std::vector<int>>> labels;
};

ABasis a_basis(int k, int n);

// Index of the monomial form inside the Schur form at weight n, computed
// two ways that must agree: as 1/|det| of the rational change-of-basis
// matrix (Schur basis in monomial coordinates) and as the product of Smith
// invariant factors of the integer matrix of monomials in Schur
// coordinates.
Integer index_a_over_b(int k, int n);

// true iff every monomial basis element has all-integer coordinates in the
// Schur basis.
bool verify_b_subring_of_a(int k, int n);

// Change-of-basis matrix: row i holds a_basis element i in the coordinates
// of the flat monomial basis of the same weight.
QMatrix a_in_monomial_coordinates(int k, int n);

}  // namespace latform
