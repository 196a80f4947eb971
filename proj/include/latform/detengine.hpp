#pragma once

#include <string>
#include <vector>

#include "latform/lattice.hpp"
#include "latform/schur.hpp"

namespace latform {

enum class ExponentMode { S, TwoS };

// Thrown when a requested graded piece exceeds the dimension budget.
class SizeBudgetError : public std::runtime_error {
public:
    SizeBudgetError(std::size_t dimension, std::size_t budget)
        : std::runtime_error("graded piece dimension " + std::to_string(dimension) +
                             " exceeds budget " + std::to_string(budget)),
          dimension_(dimension) {}
    std::size_t dimension() const { return dimension_; }

private:
    std::size_t dimension_;
};

inline constexpr std::size_t kDefaultBudget = 2000;

// dim of the weight-n piece for rank k
Integer graded_dimension(int k, int n);

struct DetReport {
    std::string lattice;
    int n = 0;
    Integer oracle_det;   // |det| of the Schur-form Gram matrix
    Integer closed_s;     // det(L)^S(k,n)
    Integer closed_2s;    // det(L)^{2 S(k,n)}
    std::string matches;  // "S", "2S", "S,2S" or "none"
    Integer index_a_b;
    int gram_sign = 0;
    std::string recombination;  // "ok", "fail" or "n/a"
};

// Signed Gram determinant of the Schur basis of weight n under L's form.
Rational det_a_form_signed(const IntegerLattice& L, int n,
                           std::size_t budget = kDefaultBudget);

// |det|, always a positive integer for an integral lattice.
Integer det_a_form(const IntegerLattice& L, int n, std::size_t budget = kDefaultBudget);

Integer det_a_form_closed(const IntegerLattice& L, int n, ExponentMode mode);

// Determinant recombination identity across the square of forms
//   A_sup >= C_sup, A_sub >= C_sub
// for the scaled sublattice diag(scales) of Z^k at weight n:
//   |det A_sub| * [A_sub:C_sub]^2 == [C_sup:C_sub]^2 * [A_sup:C_sup]^2 * |det A_sup|
// with the two determinants from Gram matrices and the three indices from
// Smith normal forms, all computed independently.
bool recombination_identity(int k, const std::vector<Integer>& scales, int n,
                            std::size_t budget = kDefaultBudget);

// Single report row for one weight.
DetReport det_report_cell(const IntegerLattice& L, int n,
                          std::size_t budget = kDefaultBudget);

// One report per n in [0, n_max]: Gram oracle against both closed forms,
// the Schur/monomial index, and the recombination identity where the
// lattice is a diagonal of perfect squares (a scaled copy of Z^k).
std::vector<DetReport> verify_m1_grid(const IntegerLattice& L, int n_max,
                                      std::size_t budget = kDefaultBudget);

std::string mode_name(ExponentMode mode);

}  // namespace latform
