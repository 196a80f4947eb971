#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latform/combinatorics.hpp"
#include "latform/matrix.hpp"

namespace latform {

// A monomial prod x_i(-r)^e in the symmetric algebra on the modes x_i(-r),
// r >= 1, over a fixed abstract basis x_1..x_k. Keys are (r, i) so the
// canonical order is mode ascending, then variable ascending.
class FockMonomial {
public:
    using Key = std::pair<int, int>;  // (mode r, variable i), both 1-based

    FockMonomial() = default;

    void multiply_by(int var, int mode, int exponent = 1);
    int exponent(int var, int mode) const;

    int weight() const;       // sum r * e over factors
    int degree() const;       // total number of factors, with multiplicity
    int degree_in(int var) const;
    int max_variable() const;
    bool is_vacuum() const { return exps_.empty(); }

    const std::map<Key, int>& factors() const { return exps_; }

    // flat factor list [(r, i), ...] in canonical order, exponents expanded
    std::vector<Key> expanded() const;

    FockMonomial operator*(const FockMonomial& rhs) const;

    bool operator==(const FockMonomial&) const = default;
    auto operator<=>(const FockMonomial&) const = default;

    std::string str() const;  // e.g. "x1(-1)^2 x2(-3)"; vacuum is "1"

private:
    std::map<Key, int> exps_;
};

// Exact-rational linear combination of Fock monomials.
class FockElement {
public:
    FockElement() = default;

    static FockElement vacuum() { return monomial(FockMonomial{}); }
    static FockElement monomial(FockMonomial m, Rational coeff = 1);

    const std::map<FockMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // weight shared by all monomials; throws on mixed weights
    int weight() const;
    bool is_homogeneous() const;

    void add_term(const FockMonomial& m, const Rational& coeff);

    FockElement& operator+=(const FockElement& rhs);
    FockElement& operator-=(const FockElement& rhs);
    FockElement operator+(const FockElement& rhs) const;
    FockElement operator-(const FockElement& rhs) const;
    FockElement operator*(const FockElement& rhs) const;
    FockElement operator*(const Rational& c) const;

    bool operator==(const FockElement&) const = default;

    std::string str() const;

private:
    std::map<FockMonomial, Rational> terms_;
};

// Monomial basis of the weight-n graded piece, split into the blocks B(a)
// indexed by weight vectors a of weight n.
struct BlockIndexedBasis {
    int k = 0;
    int n = 0;
    std::vector<std::pair<WeightVector, std::vector<FockMonomial>>> blocks;

    std::vector<FockMonomial> flat() const;
    std::size_t size() const;
};

BlockIndexedBasis monomial_basis(int k, int n);

// Contraction form: monomials pair to zero unless their mode multisets
// agree; otherwise (-1)^p times the sum over mode-preserving bijections of
// the products r * <x_a | x_b>, p the number of factors. gram is the k x k
// matrix of <x_i | x_j>.
Rational pair_form(const FockElement& u, const FockElement& v, const QMatrix& gram);

// Same value computed by recursive application of the adjointness relation
// <h(m)u | v> = -<u | h(-m)v>; cross-check oracle for the matching formula.
Rational pair_form_recursive(const FockElement& u, const FockElement& v, const QMatrix& gram);

// Symmetric matrix of pairwise pairings of a homogeneous equal-weight basis.
QMatrix gram_matrix(const std::vector<FockElement>& basis, const QMatrix& gram);

// Substitute x_i -> scales[i] * x_i.
FockElement scale_variables(const FockElement& e, const std::vector<Rational>& scales);

// Substitute x_i -> sum_j T(i,j) * x_j, extended as an algebra map.
FockElement substitute_variables(const FockElement& e, const QMatrix& transform);

// Coordinates of e in an ordered monomial basis; throws if a term's
// monomial is missing from the basis.
std::vector<Rational> coordinate_vector(const FockElement& e,
                                        const std::vector<FockMonomial>& basis);

}  // namespace latform
