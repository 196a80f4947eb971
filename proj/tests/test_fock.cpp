#include <doctest.h>

#include <random>

#include "latform/fock.hpp"

using namespace latform;

namespace {

FockMonomial mono(std::initializer_list<std::pair<std::pair<int, int>, int>> factors) {
    // factors: {{var, mode}, exponent}
    FockMonomial m;
    for (const auto& [vm, e] : factors) m.multiply_by(vm.first, vm.second, e);
    return m;
}

FockElement random_element(std::mt19937& rng, int k, int weight) {
    auto basis = monomial_basis(k, weight).flat();
    std::uniform_int_distribution<int> coeff(-3, 3);
    FockElement e;
    for (const auto& m : basis) e.add_term(m, coeff(rng));
    if (e.is_zero()) e.add_term(basis.front(), 1);
    return e;
}

}  // namespace

TEST_CASE("monomial bookkeeping and rendering") {
    auto m = mono({{{1, 1}, 2}, {{2, 3}, 1}});
    CHECK(m.weight() == 5);
    CHECK(m.degree() == 3);
    CHECK(m.degree_in(1) == 2);
    CHECK(m.str() == "x1(-1)^2 x2(-3)");
    CHECK(FockMonomial{}.str() == "1");
}

TEST_CASE("monomial basis structure") {
    auto b12 = monomial_basis(1, 2);
    REQUIRE(b12.blocks.size() == 2);
    CHECK(b12.blocks[0].first == WeightVector({2}));
    CHECK(b12.blocks[0].second == std::vector<FockMonomial>{mono({{{1, 1}, 2}})});
    CHECK(b12.blocks[1].second == std::vector<FockMonomial>{mono({{{1, 2}, 1}})});

    CHECK(monomial_basis(2, 2).size() == 5);
    CHECK(monomial_basis(1, 0).flat() == std::vector<FockMonomial>{FockMonomial{}});

    // the (1,1) block for k=2 has the 4 monomials x_s(-1) x_t(-2)
    auto b22 = monomial_basis(2, 3);
    bool found = false;
    for (const auto& [a, block] : b22.blocks)
        if (a == WeightVector({1, 1})) {
            found = true;
            CHECK(block.size() == 4);
        }
    CHECK(found);
}

TEST_CASE("block sizes follow the counting rule") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 6; ++n) {
            auto basis = monomial_basis(k, n);
            for (const auto& [a, block] : basis.blocks) {
                Integer expect = 1;
                for (int j = 1; j <= a.max_part(); ++j)
                    expect *= count_monomials(k, a.multiplicity(j));
                CHECK(Integer(block.size()) == expect);
            }
        }
}

TEST_CASE("pairing of equal powers of one mode") {
    QMatrix one = QMatrix::identity(1);
    for (int p = 1; p <= 4; ++p)
        for (int s = 1; s <= 4; ++s) {
            auto u = FockElement::monomial(mono({{{1, p}, s}}));
            Rational expect = (s % 2 ? -1 : 1) * Rational(factorial(s) * pow_integer(p, s));
            CHECK(pair_form(u, u, one) == expect);
        }
}

TEST_CASE("pairing vanishes across mode multisets") {
    QMatrix one = QMatrix::identity(1);
    auto u = FockElement::monomial(mono({{{1, 2}, 1}}));
    auto v = FockElement::monomial(mono({{{1, 1}, 2}}));
    CHECK(pair_form(u, v, one) == 0);
}

TEST_CASE("pairing of single factors is -<x|y>") {
    QMatrix d(1, 1);
    d.at(0, 0) = 5;
    auto u = FockElement::monomial(mono({{{1, 1}, 1}}));
    CHECK(pair_form(u, u, d) == -5);
}

TEST_CASE("gram_matrix examples") {
    QMatrix one = QMatrix::identity(1);
    auto g = gram_matrix({FockElement::monomial(mono({{{1, 1}, 2}})),
                          FockElement::monomial(mono({{{1, 2}, 1}}))},
                         one);
    CHECK(g == QMatrix{{2, 0}, {0, -2}});

    CHECK(gram_matrix({FockElement::vacuum()}, one) == QMatrix{{1}});

    QMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK(gram_matrix({FockElement::monomial(mono({{{1, 1}, 1}}))}, two) == QMatrix{{-2}});

    CHECK_THROWS_AS(gram_matrix({FockElement::vacuum(),
                                 FockElement::monomial(mono({{{1, 1}, 1}}))},
                                one),
                    std::domain_error);
}

TEST_CASE("pairing respects the block decomposition") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 5; ++n) {
            auto basis = monomial_basis(k, n);
            QMatrix gram = QMatrix::identity(k);
            for (std::size_t b = 0; b < basis.blocks.size(); ++b)
                for (std::size_t c = b + 1; c < basis.blocks.size(); ++c)
                    for (const auto& mu : basis.blocks[b].second)
                        for (const auto& mv : basis.blocks[c].second)
                            CHECK(pair_form(FockElement::monomial(mu),
                                            FockElement::monomial(mv), gram) == 0);
        }
}

TEST_CASE("matching formula agrees with the recursive pairing") {
    std::mt19937 rng(23);
    QMatrix gram{{2, 1}, {1, 2}};
    for (int weight = 1; weight <= 4; ++weight)
        for (int trial = 0; trial < 5; ++trial) {
            auto u = random_element(rng, 2, weight);
            auto v = random_element(rng, 2, weight);
            CHECK(pair_form(u, v, gram) == pair_form_recursive(u, v, gram));
        }
}

TEST_CASE("pairing is symmetric and bilinear") {
    std::mt19937 rng(29);
    QMatrix gram{{2, 1}, {1, 4}};
    for (int trial = 0; trial < 10; ++trial) {
        int weight = 1 + static_cast<int>(rng() % 4);
        auto u = random_element(rng, 2, weight);
        auto v = random_element(rng, 2, weight);
        auto w = random_element(rng, 2, weight);
        CHECK(pair_form(u, v, gram) == pair_form(v, u, gram));
        Rational a = 3, b = -2;
        CHECK(pair_form(u * a + w * b, v, gram) ==
              a * pair_form(u, v, gram) + b * pair_form(w, v, gram));
    }
}

TEST_CASE("variable index out of range") {
    auto u = FockElement::monomial(mono({{{3, 1}, 1}}));
    CHECK_THROWS_AS(pair_form(u, u, QMatrix::identity(2)), std::domain_error);
}

TEST_CASE("scale_variables") {
    auto e = FockElement::monomial(mono({{{1, 1}, 1}, {{2, 2}, 1}}));
    auto scaled = scale_variables(e, {Rational(3), Rational(1)});
    CHECK(scaled == e * Rational(3));

    auto sq = FockElement::monomial(mono({{{1, 1}, 2}}));
    CHECK(scale_variables(sq, {Rational(5)}) == sq * Rational(25));
    CHECK(scale_variables(sq, {Rational(1)}) == sq);
    CHECK_THROWS_AS(scale_variables(sq, {Rational(0)}), std::domain_error);
}

TEST_CASE("substitute_variables generalizes scaling") {
    auto e = FockElement::monomial(mono({{{1, 1}, 2}, {{2, 3}, 1}}));
    CHECK(substitute_variables(e, QMatrix::identity(2)) == e);

    QMatrix diag{{3, 0}, {0, 2}};
    CHECK(substitute_variables(e, diag) ==
          scale_variables(e, {Rational(3), Rational(2)}));

    // x1 -> x1 + x2 on x1(-1): two terms
    QMatrix shear{{1, 1}, {0, 1}};
    auto x1 = FockElement::monomial(mono({{{1, 1}, 1}}));
    auto x2 = FockElement::monomial(mono({{{2, 1}, 1}}));
    CHECK(substitute_variables(x1, shear) == x1 + x2);
}

TEST_CASE("coordinate_vector") {
    auto basis = monomial_basis(1, 2).flat();
    auto e = FockElement::monomial(basis[0], Rational(1, 2)) +
             FockElement::monomial(basis[1], -3);
    auto c = coordinate_vector(e, basis);
    CHECK(c == std::vector<Rational>{Rational(1, 2), Rational(-3)});
    auto other = FockElement::monomial(mono({{{1, 3}, 1}}));
    CHECK_THROWS_AS(coordinate_vector(other, basis), std::domain_error);
}
