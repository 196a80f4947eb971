#pragma once

#include <compare>
#include <vector>

#include "latform/scalar.hpp"

namespace latform {

// Multiplicity encoding of a partition: multiplicity(j) counts parts equal
// to j, so weight() = sum_j j * a_j. Canonical form has no trailing zeros.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> multiplicities);

    static WeightVector from_partition(const std::vector<int>& parts);

    int weight() const;
    int total_parts() const;                      // sum_j a_j
    int max_part() const { return static_cast<int>(mult_.size()); }
    int multiplicity(int j) const;                // a_j, 1-based

    // weakly decreasing parts
    std::vector<int> to_partition() const;
    const std::vector<int>& multiplicities() const { return mult_; }

    bool operator==(const WeightVector&) const = default;
    auto operator<=>(const WeightVector&) const = default;

private:
    std::vector<int> mult_;
};

// All weight vectors of weight exactly n, ordered by lexicographically
// ascending partition encoding. Empty for n = 0.
std::vector<WeightVector> weight_vectors(int n);

// All ordered k-tuples of nonnegative integers summing to n, lexicographic.
std::vector<std::vector<int>> compositions(int k, int n);

// Number of monomials of total degree m in k variables: C(m+k-1, k-1).
Integer count_monomials(int k, int m);

// Exponent e with |B(x_1..x_k; a) : B(p x_1..p x_k; a)| = p^e:
// (sum_j a_j) * prod_j C(a_j+k-1, k-1).
Integer scaling_exponent(int k, const WeightVector& a);

// The uncorrected product prod_j a_j * C(a_j+k-1, k-1), kept for
// side-by-side reporting; it vanishes whenever some a_j = 0 and does not
// match the Smith-form oracle.
Integer scaling_exponent_literal(int k, const WeightVector& a);

// S(k,n) = (1/k) * sum over a of weight n of scaling_exponent(k,a).
// Throws if the division is not exact (it always is; a failure is a bug).
Integer s_value(int k, int n);

// b_n = prod over weight vectors a of weight n of prod_i i^{a_i} * a_i!,
// with b_0 = 1.
Integer b_value(int n);

// Integer square root of prod over compositions (n_1..n_k) of n of
// prod_i b_{n_i}^{prod_{j != i} p(n_j)}, the determinant of the
// orthonormal monomial Gram matrix; throws if the product is not a
// perfect square.
Integer index_formula_value(int k, int n);

}  // namespace latform
