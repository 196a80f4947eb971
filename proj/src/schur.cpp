#include "latform/schur.hpp"

#include "latform/linalg.hpp"

namespace latform {

FockElement schur_coefficient(int var, int n) {
    if (var < 1 || n < 0)
        throw std::invalid_argument("schur_coefficient: var >= 1, n >= 0 required");
    if (n == 0) return FockElement::vacuum();
    FockElement out;
    for (const auto& a : weight_vectors(n)) {
        FockMonomial m;
        Rational coeff = 1;
        for (int j = 1; j <= a.max_part(); ++j) {
            int mj = a.multiplicity(j);
            if (mj == 0) continue;
            m.multiply_by(var, j, mj);
            coeff /= Rational(pow_integer(j, static_cast<unsigned long>(mj)) *
                              factorial(static_cast<unsigned long>(mj)));
        }
        out.add_term(m, coeff);
    }
    return out;
}

ABasis a_basis(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("a_basis: k >= 1, n >= 0 required");
    ABasis basis;
    basis.k = k;
    basis.n = n;
    for (const auto& comp : compositions(k, n)) {
        // per-variable partition lists; zero parts are dropped so each
        // basis element appears exactly once
        std::vector<std::vector<std::vector<int>>> choices(k);
        for (int i = 0; i < k; ++i) {
            if (comp[i] == 0) {
                choices[i] = {{}};
                continue;
            }
            for (const auto& a : weight_vectors(comp[i]))
                choices[i].push_back(a.to_partition());
        }
        std::vector<std::vector<std::vector<int>>> tuples{{}};
        for (int i = 0; i < k; ++i) {
            std::vector<std::vector<std::vector<int>>> next;
            for (const auto& prefix : tuples)
                for (const auto& lambda : choices[i]) {
                    auto t = prefix;
                    t.push_back(lambda);
                    next.push_back(std::move(t));
                }
            tuples = std::move(next);
        }
        for (auto& tuple : tuples) {
            FockElement e = FockElement::vacuum();
            for (int i = 0; i < k; ++i)
                for (int part : tuple[i]) e = e * schur_coefficient(i + 1, part);
            basis.elements.push_back(std::move(e));
            basis.labels.push_back(std::move(tuple));
        }
    }
    return basis;
}

QMatrix a_in_monomial_coordinates(int k, int n) {
    auto monomials = monomial_basis(k, n).flat();
    auto ab = a_basis(k, n);
    if (ab.elements.size() != monomials.size())
        throw std::logic_error("Schur and monomial bases disagree on dimension");
    QMatrix m(ab.elements.size(), monomials.size());
    for (std::size_t i = 0; i < ab.elements.size(); ++i) {
        auto coords = coordinate_vector(ab.elements[i], monomials);
        for (std::size_t j = 0; j < coords.size(); ++j) m.at(i, j) = coords[j];
    }
    return m;
}

Integer index_a_over_b(int k, int n) {
    QMatrix m = a_in_monomial_coordinates(k, n);
    Rational det = determinant(m);
    if (det == 0)
        throw std::domain_error("Schur basis is degenerate");
    Rational inv_abs = abs(Rational(1) / det);
    if (!is_integral(inv_abs))
        throw std::domain_error("1/|det| of the change of basis is not an integer; "
                                "the monomial form would not sit inside the Schur form");
    Integer via_det = to_integer(inv_abs);

    // independent route: monomials in Schur coordinates, Smith invariant
    // factors of the resulting integer matrix
    QMatrix b_in_a = inverse(m);  // row i: monomial i in Schur coordinates
    if (!b_in_a.is_integral())
        throw std::domain_error("monomial has non-integer Schur coordinates");
    Integer via_snf = smith_normal_form(b_in_a).product();
    if (via_det != via_snf)
        throw std::logic_error("index mismatch between determinant and Smith routes: " +
                               via_det.get_str() + " vs " + via_snf.get_str());
    return via_det;
}

bool verify_b_subring_of_a(int k, int n) {
    QMatrix m = a_in_monomial_coordinates(k, n);
    return inverse(m).is_integral();
}

}  // namespace latform
