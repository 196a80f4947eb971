#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latform/matrix.hpp"

namespace latform {

// Positive definite integral lattice given by its Gram matrix.
struct IntegerLattice {
    std::string name;
    QMatrix gram;

    std::size_t rank() const { return gram.rows(); }
};

struct ShellCount {
    int norm = 0;       // even value 2m
    Integer count = 0;  // |L_{2m}|
};

// Validates integrality, symmetry and positive definiteness (leading
// principal minors); throws std::domain_error naming the failing check.
IntegerLattice make_lattice(std::string name, QMatrix gram);

Integer lattice_det(const IntegerLattice& L);

// true iff all diagonal Gram entries are even
bool is_even(const IntegerLattice& L);

// Exact counts |L_norm| for norm = 0, 2, ..., max_norm by exhaustive box
// enumeration; the coefficient bounds come from the exact inverse Gram.
std::vector<ShellCount> shell_counts(const IntegerLattice& L, int max_norm);

// Same counts via a rational LDL^T decomposition with backward pruning;
// independent cross-check of the box enumeration.
std::vector<ShellCount> shell_counts_recursive(const IntegerLattice& L, int max_norm);

// All coefficient vectors of the given norm, deterministic order.
std::vector<std::vector<Integer>> shell_vectors(const IntegerLattice& L, int norm);

// Gram of the sublattice spanned by scales[i] * x_i.
IntegerLattice sublattice_scale(const IntegerLattice& L, const std::vector<Integer>& scales);

// det(sublattice) = index^2 * det(superlattice)
Integer index_det_transfer(const Integer& det_super, const Integer& index);

// Built-in lattices: Z1..Z4, A1, A2, A1A1. Throws on unknown names.
IntegerLattice builtin_lattice(std::string_view name);
std::vector<std::string> builtin_lattice_names();

// Parse {"name": string, "gram": [[int, ...], ...]}.
IntegerLattice lattice_from_json_text(const std::string& text);

}  // namespace latform
