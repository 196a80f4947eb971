#include "latform/detengine.hpp"

#include "latform/linalg.hpp"

namespace latform {

Integer graded_dimension(int k, int n) {
    Integer dim = 0;
    for (const auto& a : weight_vectors(n)) {
        Integer block = 1;
        for (int j = 1; j <= a.max_part(); ++j)
            block *= count_monomials(k, a.multiplicity(j));
        dim += block;
    }
    if (n == 0) dim = 1;
    return dim;
}

namespace {

void check_budget(int k, int n, std::size_t budget) {
    Integer dim = graded_dimension(k, n);
    if (dim > static_cast<long>(budget))
        throw SizeBudgetError(dim.get_ui(), budget);
}

Integer pow_mode(const Integer& base, const Integer& exponent, ExponentMode mode) {
    Integer e = exponent;
    if (mode == ExponentMode::TwoS) e *= 2;
    return pow_integer(base, e.get_ui());
}

}  // namespace

Rational det_a_form_signed(const IntegerLattice& L, int n, std::size_t budget) {
    const int k = static_cast<int>(L.rank());
    check_budget(k, n, budget);
    auto basis = a_basis(k, n);
    return determinant(gram_matrix(basis.elements, L.gram));
}

Integer det_a_form(const IntegerLattice& L, int n, std::size_t budget) {
    return to_integer(abs(det_a_form_signed(L, n, budget)));
}

Integer det_a_form_closed(const IntegerLattice& L, int n, ExponentMode mode) {
    return pow_mode(lattice_det(L), s_value(static_cast<int>(L.rank()), n), mode);
}

namespace {

std::vector<std::vector<Rational>> element_coordinates(const std::vector<FockElement>& elems,
                                                       const std::vector<FockMonomial>& ambient) {
    std::vector<std::vector<Rational>> coords;
    coords.reserve(elems.size());
    for (const auto& e : elems) coords.push_back(coordinate_vector(e, ambient));
    return coords;
}

}  // namespace

bool recombination_identity(int k, const std::vector<Integer>& scales, int n,
                            std::size_t budget) {
    if (static_cast<int>(scales.size()) != k)
        throw std::invalid_argument("scale count must equal the rank");
    check_budget(k, n, budget);

    IntegerLattice zk = make_lattice("Z" + std::to_string(k), QMatrix::identity(k));
    IntegerLattice sub = sublattice_scale(zk, scales);

    auto ambient = monomial_basis(k, n).flat();
    std::vector<FockElement> mono_elems, mono_scaled;
    std::vector<Rational> rscales(scales.begin(), scales.end());
    for (const auto& m : ambient) {
        mono_elems.push_back(FockElement::monomial(m));
        mono_scaled.push_back(scale_variables(mono_elems.back(), rscales));
    }
    auto a_sup = a_basis(k, n).elements;
    std::vector<FockElement> a_sub;
    for (const auto& e : a_sup) a_sub.push_back(scale_variables(e, rscales));

    Integer det_a_sup = to_integer(abs(determinant(gram_matrix(a_sup, zk.gram))));
    Integer det_a_sub = to_integer(abs(determinant(gram_matrix(a_sub, zk.gram))));

    auto c_sup = element_coordinates(mono_elems, ambient);
    auto c_sub = element_coordinates(mono_scaled, ambient);
    auto a_sup_coords = element_coordinates(a_sup, ambient);
    auto a_sub_coords = element_coordinates(a_sub, ambient);

    Integer idx_c = lattice_index(c_sup, c_sub);
    Integer idx_sup = lattice_index(a_sup_coords, c_sup);
    Integer idx_sub = lattice_index(a_sub_coords, c_sub);

    return det_a_sub * idx_sub * idx_sub == idx_c * idx_c * idx_sup * idx_sup * det_a_sup;
}

namespace {

// recognize a scaled copy of Z^k: diagonal Gram with perfect square entries
bool scaled_zk_scales(const IntegerLattice& L, std::vector<Integer>& scales) {
    scales.clear();
    for (std::size_t i = 0; i < L.rank(); ++i) {
        for (std::size_t j = 0; j < L.rank(); ++j)
            if (i != j && L.gram.at(i, j) != 0) return false;
        Integer d = L.gram.at(i, i).get_num();
        if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
        scales.push_back(exact_sqrt(d));
    }
    return true;
}

}  // namespace

DetReport det_report_cell(const IntegerLattice& L, int n, std::size_t budget) {
    const int k = static_cast<int>(L.rank());
    std::vector<Integer> scales;
    DetReport r;
    r.lattice = L.name;
    r.n = n;
    Rational signed_det = det_a_form_signed(L, n, budget);
    r.oracle_det = to_integer(abs(signed_det));
    r.gram_sign = signed_det < 0 ? -1 : 1;
    r.closed_s = det_a_form_closed(L, n, ExponentMode::S);
    r.closed_2s = det_a_form_closed(L, n, ExponentMode::TwoS);
    bool ms = r.oracle_det == r.closed_s;
    bool m2s = r.oracle_det == r.closed_2s;
    r.matches = ms && m2s ? "S,2S" : ms ? "S" : m2s ? "2S" : "none";
    r.index_a_b = index_a_over_b(k, n);
    if (scaled_zk_scales(L, scales))
        r.recombination = recombination_identity(k, scales, n, budget) ? "ok" : "fail";
    else
        r.recombination = "n/a";
    return r;
}

std::vector<DetReport> verify_m1_grid(const IntegerLattice& L, int n_max, std::size_t budget) {
    std::vector<DetReport> reports;
    for (int n = 0; n <= n_max; ++n) reports.push_back(det_report_cell(L, n, budget));
    return reports;
}

std::string mode_name(ExponentMode mode) {
    return mode == ExponentMode::S ? "S" : "2S";
}

}  // namespace latform
