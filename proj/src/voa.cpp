#include "latform/voa.hpp"

#include "latform/linalg.hpp"

namespace latform {

namespace {

void require_even(const IntegerLattice& L) {
    if (!is_even(L))
        throw std::domain_error("even lattice required: " + L.name);
}

bool lex_positive(const std::vector<Integer>& v) {
    for (const auto& c : v) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;
}

}  // namespace

std::vector<std::vector<Integer>> shell_representatives(const IntegerLattice& L, int norm) {
    std::vector<std::vector<Integer>> reps;
    for (auto& v : shell_vectors(L, norm))
        if (lex_positive(v)) reps.push_back(std::move(v));
    return reps;
}

Integer voa_graded_rank(const IntegerLattice& L, int n) {
    require_even(L);
    if (n < 0) throw std::invalid_argument("weight must be nonnegative");
    const int k = static_cast<int>(L.rank());
    auto shells = shell_counts(L, 2 * n);
    Integer rank = 0;
    for (int m = 0; m <= n; ++m)
        rank += shells[m].count * graded_dimension(k, n - m);
    return rank;
}

VoaGradedPiece voa_graded_piece(const IntegerLattice& L, int n, std::size_t budget) {
    require_even(L);
    const int k = static_cast<int>(L.rank());
    Integer rank = voa_graded_rank(L, n);
    if (rank > static_cast<long>(budget))
        throw SizeBudgetError(rank.get_ui(), budget);

    VoaGradedPiece piece;
    piece.n = n;
    // block layout: m ascending; within a shell the enumeration order of
    // shell_vectors; per vector the Schur basis of weight n - m
    std::vector<std::vector<FockElement>> block_elems;
    for (int m = 0; m <= n; ++m) {
        auto vectors = m == 0 ? std::vector<std::vector<Integer>>{std::vector<Integer>(k, 0)}
                              : shell_vectors(L, 2 * m);
        if (vectors.empty()) continue;
        auto basis = a_basis(k, n - m).elements;
        for (auto& alpha : vectors) {
            piece.blocks.push_back({alpha, m, basis.size()});
            block_elems.push_back(basis);
        }
    }

    std::size_t dim = 0;
    std::vector<std::size_t> offset(piece.blocks.size());
    for (std::size_t b = 0; b < piece.blocks.size(); ++b) {
        offset[b] = dim;
        dim += piece.blocks[b].fock_dim;
    }
    piece.gram = QMatrix(dim, dim);
    for (std::size_t b = 0; b < piece.blocks.size(); ++b)
        for (std::size_t c = b; c < piece.blocks.size(); ++c) {
            // e^alpha pairs only with e^{-alpha}
            bool opposite = true;
            for (std::size_t i = 0; i < L.rank(); ++i)
                if (piece.blocks[b].alpha[i] + piece.blocks[c].alpha[i] != 0) {
                    opposite = false;
                    break;
                }
            if (!opposite) continue;
            for (std::size_t i = 0; i < block_elems[b].size(); ++i)
                for (std::size_t j = 0; j < block_elems[c].size(); ++j) {
                    Rational v = pair_form(block_elems[b][i], block_elems[c][j], L.gram);
                    piece.gram.at(offset[b] + i, offset[c] + j) = v;
                    piece.gram.at(offset[c] + j, offset[b] + i) = v;
                }
        }
    return piece;
}

Integer voa_det_block_oracle(const IntegerLattice& L, int n, std::size_t budget) {
    require_even(L);
    Integer rank = voa_graded_rank(L, n);
    if (rank > static_cast<long>(budget))
        throw SizeBudgetError(rank.get_ui(), budget);
    Integer det = det_a_form(L, n, budget);
    for (int m = 1; m <= n; ++m) {
        Integer pairs(shell_representatives(L, 2 * m).size());
        if (pairs == 0) continue;
        Integer block = det_a_form(L, n - m, budget);
        det *= pow_integer(block * block, pairs.get_ui());
    }
    return det;
}

Integer voa_det_full_gram(const IntegerLattice& L, int n, std::size_t budget) {
    return to_integer(abs(determinant(voa_graded_piece(L, n, budget).gram)));
}

Integer voa_det_oracle(const IntegerLattice& L, int n, std::size_t budget) {
    Integer block = voa_det_block_oracle(L, n, budget);
    Integer full = voa_det_full_gram(L, n, budget);
    if (block != full)
        throw std::logic_error("block-product and full-Gram determinants disagree: " +
                               block.get_str() + " vs " + full.get_str());
    return block;
}

Integer voa_det_closed(const IntegerLattice& L, int n, ExponentMode mode) {
    require_even(L);
    const int k = static_cast<int>(L.rank());
    Integer d = lattice_det(L);
    auto shells = shell_counts(L, 2 * n);
    Integer result = 1;
    for (int m = 0; m <= n; ++m) {
        Integer exponent = shells[m].count * s_value(k, n - m);
        if (mode == ExponentMode::TwoS) exponent *= 2;
        result *= pow_integer(d, exponent.get_ui());
    }
    return result;
}

VoaDetReport voa_report_cell(const IntegerLattice& L, int n, std::size_t budget) {
    VoaDetReport r;
    r.lattice = L.name;
    r.n = n;
    r.oracle_det = voa_det_oracle(L, n, budget);
    r.closed_s = voa_det_closed(L, n, ExponentMode::S);
    r.closed_2s = voa_det_closed(L, n, ExponentMode::TwoS);
    bool ms = r.oracle_det == r.closed_s;
    bool m2s = r.oracle_det == r.closed_2s;
    r.matches = ms && m2s ? "S,2S" : ms ? "S" : m2s ? "2S" : "none";
    r.shells = shell_counts(L, 2 * n);
    return r;
}

std::vector<VoaDetReport> verify_voa_grid(const IntegerLattice& L, int n_max,
                                          std::size_t budget) {
    require_even(L);
    std::vector<VoaDetReport> reports;
    for (int n = 0; n <= n_max; ++n) reports.push_back(voa_report_cell(L, n, budget));
    return reports;
}

}  // namespace latform
