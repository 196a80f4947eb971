#include <doctest.h>

#include <random>

#include "latform/detengine.hpp"
#include "latform/linalg.hpp"
#include "latform/schur.hpp"

using namespace latform;

namespace {

// truncated product of power series with FockElement coefficients
using Series = std::vector<FockElement>;

Series series_mul(const Series& a, const Series& b, std::size_t order) {
    Series out(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
        for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) {
            if (i >= a.size()) break;
            out[i + j] += a[i] * b[j];
        }
    return out;
}

// exp(sum_{r=1..order} x(-r) z^r / r) through z^order, by multiplying the
// truncated exponentials of each single term
Series exponential_series(int var, std::size_t order) {
    Series result(order + 1);
    result[0] = FockElement::vacuum();
    for (std::size_t r = 1; r <= order; ++r) {
        FockMonomial xr;
        xr.multiply_by(var, static_cast<int>(r));
        Series term(order + 1);
        term[0] = FockElement::vacuum();
        FockElement power = FockElement::vacuum();
        Rational coeff = 1;
        for (std::size_t m = 1; m * r <= order; ++m) {
            power = power * FockElement::monomial(xr);
            coeff /= Rational(static_cast<long>(r)) * Rational(static_cast<long>(m));
            term[m * r] = power * coeff;
        }
        result = series_mul(result, term, order);
    }
    return result;
}

}  // namespace

TEST_CASE("schur_coefficient small cases") {
    CHECK(schur_coefficient(1, 0) == FockElement::vacuum());

    FockMonomial x1;
    x1.multiply_by(1, 1);
    CHECK(schur_coefficient(1, 1) == FockElement::monomial(x1));

    FockMonomial x1sq;
    x1sq.multiply_by(1, 1, 2);
    FockMonomial x2;
    x2.multiply_by(1, 2);
    auto expected = FockElement::monomial(x1sq, Rational(1, 2)) +
                    FockElement::monomial(x2, Rational(1, 2));
    CHECK(schur_coefficient(1, 2) == expected);
}

TEST_CASE("leading coefficient is 1/n!") {
    for (int n = 1; n <= 6; ++n) {
        FockMonomial lead;
        lead.multiply_by(1, 1, n);
        auto coeff = schur_coefficient(1, n);
        auto it = coeff.terms().find(lead);
        REQUIRE(it != coeff.terms().end());
        CHECK(it->second == Rational(1) / Rational(factorial(n)));
    }
}

TEST_CASE("generating identity against series exponentiation") {
    auto series = exponential_series(1, 8);
    for (int n = 0; n <= 8; ++n) CHECK(schur_coefficient(1, n) == series[n]);
}

TEST_CASE("a_basis sizes and simple cases") {
    auto a12 = a_basis(1, 2);
    REQUIRE(a12.elements.size() == 2);
    auto s2 = schur_coefficient(1, 2);
    auto s1 = schur_coefficient(1, 1);
    CHECK((a12.elements[0] == s2 || a12.elements[1] == s2));
    CHECK((a12.elements[0] == s1 * s1 || a12.elements[1] == s1 * s1));

    auto a21 = a_basis(2, 1);
    REQUIRE(a21.elements.size() == 2);
    CHECK(a_basis(2, 2).elements.size() == 5);
    CHECK(a_basis(1, 0).elements.size() == 1);

    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 5; ++n)
            CHECK(Integer(a_basis(k, n).elements.size()) == graded_dimension(k, n));
}

TEST_CASE("index_a_over_b examples") {
    CHECK(index_a_over_b(1, 1) == 1);
    CHECK(index_a_over_b(1, 2) == 2);
    CHECK(index_a_over_b(2, 2) == 4);
}

TEST_CASE("index matches the closed formula") {
    for (int k = 1; k <= 2; ++k)
        for (int n = 0; n <= 5; ++n)
            CHECK(index_a_over_b(k, n) == index_formula_value(k, n));
}

TEST_CASE("monomials lie integrally in the Schur form") {
    CHECK(verify_b_subring_of_a(1, 1));
    CHECK(verify_b_subring_of_a(1, 2));
    CHECK(verify_b_subring_of_a(2, 3));

    // x(-2) = 2 s_2 - s_1^2, found by exact solve
    auto monomials = monomial_basis(1, 2).flat();
    auto ab = a_basis(1, 2);
    std::vector<std::vector<Rational>> basis;
    for (const auto& e : ab.elements) basis.push_back(coordinate_vector(e, monomials));
    FockMonomial x2;
    x2.multiply_by(1, 2);
    auto coords = solve_in_basis(
        basis, coordinate_vector(FockElement::monomial(x2), monomials));
    REQUIRE(coords.size() == 2);
    for (const auto& c : coords) CHECK(is_integral(c));
    // one coordinate 2 on s_2 and -1 on s_1 s_1, in basis order
    Rational on_s2 = ab.elements[0] == schur_coefficient(1, 2) ? coords[0] : coords[1];
    Rational on_s11 = ab.elements[0] == schur_coefficient(1, 2) ? coords[1] : coords[0];
    CHECK(on_s2 == 2);
    CHECK(on_s11 == -1);
}

TEST_CASE("index is invariant under unimodular basis changes") {
    std::mt19937 rng(31);
    const int k = 2;
    for (int n = 1; n <= 4; ++n) {
        Integer expected = index_a_over_b(k, n);
        for (int trial = 0; trial < 3; ++trial) {
            // random unimodular transform with entries in [-2, 2], built
            // from elementary operations
            QMatrix u = QMatrix::identity(k);
            for (int step = 0; step < 12; ++step) {
                QMatrix cand = u;
                std::size_t i = rng() % k, j = rng() % k;
                if (i == j) {
                    for (std::size_t c = 0; c < k; ++c) cand.at(i, c) = -cand.at(i, c);
                } else {
                    int s = rng() % 2 ? 1 : -1;
                    for (std::size_t c = 0; c < k; ++c)
                        cand.at(i, c) += Rational(s) * cand.at(j, c);
                }
                bool ok = true;
                for (std::size_t r = 0; r < k && ok; ++r)
                    for (std::size_t c = 0; c < k && ok; ++c)
                        ok = abs(cand.at(r, c)) <= 2;
                if (ok) u = cand;
            }
            REQUIRE(abs(determinant(u)) == 1);

            auto ambient = monomial_basis(k, n).flat();
            QMatrix ma(ambient.size(), ambient.size());
            auto ab = a_basis(k, n);
            for (std::size_t i = 0; i < ab.elements.size(); ++i) {
                auto c = coordinate_vector(substitute_variables(ab.elements[i], u), ambient);
                for (std::size_t j = 0; j < c.size(); ++j) ma.at(i, j) = c[j];
            }
            QMatrix mb(ambient.size(), ambient.size());
            for (std::size_t i = 0; i < ambient.size(); ++i) {
                auto c = coordinate_vector(
                    substitute_variables(FockElement::monomial(ambient[i]), u), ambient);
                for (std::size_t j = 0; j < c.size(); ++j) mb.at(i, j) = c[j];
            }
            Rational index = abs(determinant(mb) / determinant(ma));
            CHECK(index == Rational(expected));
        }
    }
}

TEST_CASE("Schur-form Gram entries are integers on even lattices") {
    for (auto name : {"A1", "A2", "A1A1"}) {
        auto L = builtin_lattice(name);
        for (int n = 0; n <= 3; ++n) {
            auto basis = a_basis(static_cast<int>(L.rank()), n);
            CHECK(gram_matrix(basis.elements, L.gram).is_integral());
        }
    }
}
