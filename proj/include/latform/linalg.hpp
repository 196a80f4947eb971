#pragma once

#include <vector>

#include "latform/matrix.hpp"

namespace latform {

// Exact determinant. Integer-entry input goes through fraction-free
// Bareiss elimination; rational input through exact Gaussian elimination.
Rational determinant(const QMatrix& m);

struct SmithResult {
    std::vector<Integer> invariant_factors;  // d_1 | d_2 | ... | d_r, all > 0
    std::size_t rank = 0;

    Integer product() const {
        Integer p = 1;
        for (const auto& d : invariant_factors) p *= d;
        return p;
    }
};

// Smith normal form of an integer matrix. Throws std::domain_error on a
// non-integral entry.
SmithResult smith_normal_form(const QMatrix& m);

// Solve sum_i c_i * basis[i] = target exactly. Throws std::domain_error
// ("dependent basis") on a rank-deficient basis and std::domain_error
// ("target outside span") when no exact solution exists.
std::vector<Rational> solve_in_basis(const std::vector<std::vector<Rational>>& basis,
                                     const std::vector<Rational>& target);

// Index [super : sub] of two full-rank lattices given by coordinate vectors
// in a common ambient basis. Each sub vector is solved in the super basis;
// the coordinates must be integral (sub contained in super) and the index is
// the product of Smith invariant factors of that coordinate matrix.
Integer lattice_index(const std::vector<std::vector<Rational>>& super,
                      const std::vector<std::vector<Rational>>& sub);

// Gauss-Jordan inverse of a nonsingular rational matrix.
QMatrix inverse(const QMatrix& m);

}  // namespace latform
