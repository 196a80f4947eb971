#include "latform/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace latform {

namespace {

// Fraction-free Bareiss elimination; every division below is exact.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { pivot = r; break; }
            if (m[pivot][k] == 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

Rational gaussian_determinant(QMatrix m) {
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rational f = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j)
                m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

}  // namespace

Rational determinant(const QMatrix& m) {
    if (!m.square())
        throw std::invalid_argument("determinant of non-square matrix");
    if (m.is_integral()) {
        std::vector<std::vector<Integer>> zm(m.rows(), std::vector<Integer>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                zm[i][j] = m.at(i, j).get_num();
        return Rational(bareiss_determinant(std::move(zm)));
    }
    return gaussian_determinant(m);
}

SmithResult smith_normal_form(const QMatrix& mat) {
    if (!mat.is_integral())
        throw std::domain_error("smith_normal_form requires integer entries");
    const std::size_t rows = mat.rows(), cols = mat.cols();
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = mat.at(i, j).get_num();

    // For a nonsingular square matrix the invariant factors agree with
    // those of the matrix augmented by d*I, d = |det|, whose columns the
    // column lattice already contains; every entry may therefore be kept
    // as a balanced residue mod d, which bounds the coefficient growth.
    Integer modulus = 0;
    if (rows == cols && rows > 0) modulus = abs(bareiss_determinant(m));
    auto reduce = [&modulus](Integer& x) {
        if (modulus == 0) return;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
        if (x * 2 > modulus) x -= modulus;
    };
    if (modulus != 0)
        for (auto& row : m)
            for (auto& x : row) reduce(x);

    const std::size_t bound = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < bound; ++t) {
        // pick the nonzero entry of smallest absolute value as pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Integer a = abs(m[i][j]);
                if (!found || a < best) { found = true; best = a; pi = i; pj = j; }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        if (pj != t)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Integer q = m[i][t] / m[t][t];  // truncating quotient is fine
                for (std::size_t j = t; j < cols; ++j) {
                    m[i][j] -= q * m[t][j];
                    if (j > t) reduce(m[i][j]);
                }
                if (m[i][t] != 0) {  // remainder became the smaller pivot
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Integer q = m[t][j] / m[t][t];
                for (std::size_t i = 0; i < rows; ++i) {
                    m[i][j] -= q * m[i][t];
                    if (i > t) reduce(m[i][j]);
                }
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
    }

    SmithResult res;
    res.rank = t;
    res.invariant_factors.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
        res.invariant_factors.push_back(
            // the implicit d*I columns contribute d to every coordinate,
            // so a diagonal residue a contributes gcd(a, d)
            modulus != 0 ? Integer(gcd(Integer(abs(m[i][i])), modulus))
                         : Integer(abs(m[i][i])));
    if (modulus != 0) {
        // a residual block that vanished mod d is spanned by the implicit
        // d*I columns, so the missing factors are d itself
        for (std::size_t i = t; i < bound; ++i) res.invariant_factors.push_back(modulus);
        res.rank = bound;
    }
    // enforce the divisibility chain d_1 | d_2 | ...
    auto& d = res.invariant_factors;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0) continue;
            Integer g = gcd(d[i], d[j]);
            d[j] = d[i] / g * d[j];
            d[i] = g;
        }
    return res;
}

std::vector<Rational> solve_in_basis(const std::vector<std::vector<Rational>>& basis,
                                     const std::vector<Rational>& target) {
    if (basis.empty())
        throw std::domain_error("dependent basis: empty basis");
    const std::size_t dim = basis[0].size();
    const std::size_t k = basis.size();
    for (const auto& b : basis)
        if (b.size() != dim)
            throw std::invalid_argument("inconsistent basis vector lengths");
    if (target.size() != dim)
        throw std::invalid_argument("target length does not match basis");

    // augmented system: columns are the basis vectors, extra column the target
    QMatrix aug(dim, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim; ++i) aug.at(i, j) = basis[j][i];
    for (std::size_t i = 0; i < dim; ++i) aug.at(i, k) = target[i];

    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t p = row;
        while (p < dim && aug.at(p, col) == 0) ++p;
        if (p == dim)
            throw std::domain_error("dependent basis");
        if (p != row)
            for (std::size_t j = 0; j <= k; ++j) std::swap(aug.at(row, j), aug.at(p, j));
        Rational inv = Rational(1) / aug.at(row, col);
        for (std::size_t j = col; j <= k; ++j) aug.at(row, j) *= inv;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || aug.at(i, col) == 0) continue;
            Rational f = aug.at(i, col);
            for (std::size_t j = col; j <= k; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < dim; ++i)
        if (aug.at(i, k) != 0)
            throw std::domain_error("target outside span");

    std::vector<Rational> coords(k);
    for (std::size_t col = 0; col < k; ++col) coords[col] = aug.at(pivot_row[col], k);
    return coords;
}

Integer lattice_index(const std::vector<std::vector<Rational>>& super,
                      const std::vector<std::vector<Rational>>& sub) {
    if (super.size() != sub.size())
        throw std::domain_error("lattice_index requires equal ranks");
    QMatrix coords(sub.size(), super.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
        auto c = solve_in_basis(super, sub[i]);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (!is_integral(c[j]))
                throw std::domain_error("sub vector not in the super lattice");
            coords.at(i, j) = c[j];
        }
    }
    SmithResult snf = smith_normal_form(coords);
    if (snf.rank != sub.size())
        throw std::domain_error("sub lattice not of full rank");
    return snf.product();
}

QMatrix inverse(const QMatrix& m) {
    if (!m.square())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    QMatrix a = m;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n)
            throw std::domain_error("singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rational d = Rational(1) / a.at(k, k);
        for (std::size_t j = 0; j < n; ++j) { a.at(k, j) *= d; inv.at(k, j) *= d; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rational f = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

}  // namespace latform
