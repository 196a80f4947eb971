#pragma once

#include "latform/detengine.hpp"

namespace latform {

// One block of the weight-n graded piece of the standard integral form:
// the Schur form of weight n - m tensored with e^alpha, alpha of norm 2m.
struct VoaBlockInfo {
    std::vector<Integer> alpha;  // coefficients in the lattice basis
    int shell_m = 0;             // <alpha, alpha> = 2m
    std::size_t fock_dim = 0;
};

struct VoaGradedPiece {
    int n = 0;
    std::vector<VoaBlockInfo> blocks;  // all alpha, both signs; vacuum first
    QMatrix gram;                      // full pairing matrix, e^a vs e^{-a}
};

struct VoaDetReport {
    std::string lattice;
    int n = 0;
    Integer oracle_det;
    Integer closed_s;
    Integer closed_2s;
    std::string matches;
    std::vector<ShellCount> shells;  // norms 0..2n
};

// One representative per +-pair of shell vectors: the one whose first
// nonzero coordinate is positive.
std::vector<std::vector<Integer>> shell_representatives(const IntegerLattice& L, int norm);

// sum_m |L_{2m}| * dim of the weight-(n-m) piece; requires an even lattice.
Integer voa_graded_rank(const IntegerLattice& L, int n);

// Full basis and pairing matrix of the weight-n graded piece.
VoaGradedPiece voa_graded_piece(const IntegerLattice& L, int n,
                                std::size_t budget = kDefaultBudget);

// Block-product determinant: the alpha = 0 block contributes
// det_a_form(L, n) once; every +-pair of norm-2m vectors contributes
// det_a_form(L, n-m)^2.
Integer voa_det_block_oracle(const IntegerLattice& L, int n,
                             std::size_t budget = kDefaultBudget);

// |det| of the assembled full Gram matrix.
Integer voa_det_full_gram(const IntegerLattice& L, int n,
                          std::size_t budget = kDefaultBudget);

// Computes both oracle routes and insists they agree.
Integer voa_det_oracle(const IntegerLattice& L, int n, std::size_t budget = kDefaultBudget);

// prod_{m=0}^{n} det(L)^{|L_{2m}| * S(k, n-m)}, squared in mode 2S.
Integer voa_det_closed(const IntegerLattice& L, int n, ExponentMode mode);

VoaDetReport voa_report_cell(const IntegerLattice& L, int n,
                             std::size_t budget = kDefaultBudget);

std::vector<VoaDetReport> verify_voa_grid(const IntegerLattice& L, int n_max,
                                          std::size_t budget = kDefaultBudget);

}  // namespace latform
