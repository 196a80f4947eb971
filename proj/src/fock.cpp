#include "latform/fock.hpp"

#include <algorithm>
#include <sstream>

namespace latform {

void FockMonomial::multiply_by(int var, int mode, int exponent) {
    if (var < 1 || mode < 1)
        throw std::invalid_argument("variable and mode indices are 1-based");
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (exponent == 0) return;
    exps_[{mode, var}] += exponent;
}

int FockMonomial::exponent(int var, int mode) const {
    auto it = exps_.find({mode, var});
    return it == exps_.end() ? 0 : it->second;
}

int FockMonomial::weight() const {
    int w = 0;
    for (const auto& [key, e] : exps_) w += key.first * e;
    return w;
}

int FockMonomial::degree() const {
    int d = 0;
    for (const auto& [key, e] : exps_) d += e;
    return d;
}

int FockMonomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [key, e] : exps_)
        if (key.second == var) d += e;
    return d;
}

int FockMonomial::max_variable() const {
    int m = 0;
    for (const auto& [key, e] : exps_) m = std::max(m, key.second);
    return m;
}

std::vector<FockMonomial::Key> FockMonomial::expanded() const {
    std::vector<Key> out;
    for (const auto& [key, e] : exps_)
        out.insert(out.end(), static_cast<std::size_t>(e), key);
    return out;
}

FockMonomial FockMonomial::operator*(const FockMonomial& rhs) const {
    FockMonomial p = *this;
    for (const auto& [key, e] : rhs.exps_) p.exps_[key] += e;
    return p;
}

std::string FockMonomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, e] : exps_) {
        if (!first) os << ' ';
        first = false;
        os << 'x' << key.second << "(-" << key.first << ')';
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

FockElement FockElement::monomial(FockMonomial m, Rational coeff) {
    FockElement e;
    e.add_term(m, coeff);
    return e;
}

int FockElement::weight() const {
    if (terms_.empty()) throw std::domain_error("weight of the zero element");
    int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) throw std::domain_error("element has mixed weights");
    return w;
}

bool FockElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return false;
    return true;
}

void FockElement::add_term(const FockMonomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

FockElement& FockElement::operator+=(const FockElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

FockElement& FockElement::operator-=(const FockElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

FockElement FockElement::operator+(const FockElement& rhs) const {
    FockElement r = *this;
    r += rhs;
    return r;
}

FockElement FockElement::operator-(const FockElement& rhs) const {
    FockElement r = *this;
    r -= rhs;
    return r;
}

FockElement FockElement::operator*(const FockElement& rhs) const {
    FockElement p;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

FockElement FockElement::operator*(const Rational& c) const {
    FockElement p;
    if (c == 0) return p;
    for (const auto& [m, coeff] : terms_) p.add_term(m, coeff * c);
    return p;
}

std::string FockElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || m.is_vacuum()) os << c.get_str() << '*';
        os << m.str();
    }
    return os.str();
}

std::vector<FockMonomial> BlockIndexedBasis::flat() const {
    std::vector<FockMonomial> out;
    for (const auto& [a, block] : blocks)
        out.insert(out.end(), block.begin(), block.end());
    return out;
}

std::size_t BlockIndexedBasis::size() const {
    std::size_t s = 0;
    for (const auto& [a, block] : blocks) s += block.size();
    return s;
}

namespace {

// nondecreasing variable sequences of the given length over 1..k
void multisets_rec(int k, int length, int lo, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (length == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= k; ++v) {
        cur.push_back(v);
        multisets_rec(k, length - 1, v, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> variable_multisets(int k, int length) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    multisets_rec(k, length, 1, cur, out);
    return out;
}

}  // namespace

BlockIndexedBasis monomial_basis(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("monomial_basis: k >= 1, n >= 0 required");
    BlockIndexedBasis basis;
    basis.k = k;
    basis.n = n;
    if (n == 0) {
        basis.blocks.emplace_back(WeightVector{}, std::vector<FockMonomial>{FockMonomial{}});
        return basis;
    }
    for (const auto& a : weight_vectors(n)) {
        std::vector<FockMonomial> block{FockMonomial{}};
        for (int j = 1; j <= a.max_part(); ++j) {
            int aj = a.multiplicity(j);
            if (aj == 0) continue;
            std::vector<FockMonomial> next;
            for (const auto& prefix : block)
                for (const auto& vars : variable_multisets(k, aj)) {
                    FockMonomial m = prefix;
                    for (int v : vars) m.multiply_by(v, j);
                    next.push_back(std::move(m));
                }
            block = std::move(next);
        }
        basis.blocks.emplace_back(a, std::move(block));
    }
    return basis;
}

namespace {

void check_variables(const FockMonomial& m, const QMatrix& gram) {
    if (m.max_variable() > static_cast<int>(gram.rows()))
        throw std::domain_error("monomial uses a variable beyond the form matrix");
}

// permanent of a small square rational matrix, row recursion over a
// used-column bitmask
Rational permanent(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Rational total = 0;
    auto rec = [&](auto&& self, std::size_t row, unsigned used, Rational acc) -> void {
        if (row == n) {
            total += acc;
            return;
        }
        for (std::size_t col = 0; col < n; ++col) {
            if (used & (1u << col)) continue;
            if (m[row][col] == 0) continue;
            self(self, row + 1, used | (1u << col), acc * m[row][col]);
        }
    };
    rec(rec, 0, 0, Rational(1));
    return total;
}

Rational pair_monomials(const FockMonomial& mu, const FockMonomial& mv, const QMatrix& gram) {
    check_variables(mu, gram);
    check_variables(mv, gram);
    auto fu = mu.expanded();
    auto fv = mv.expanded();
    if (fu.size() != fv.size()) return 0;

    // group factor variables by mode; multisets of modes must agree
    std::map<int, std::vector<int>> gu, gv;
    for (const auto& [r, i] : fu) gu[r].push_back(i);
    for (const auto& [r, i] : fv) gv[r].push_back(i);
    if (gu.size() != gv.size()) return 0;
    for (const auto& [r, vars] : gu) {
        auto it = gv.find(r);
        if (it == gv.end() || it->second.size() != vars.size()) return 0;
    }

    Rational result = fu.size() % 2 == 0 ? 1 : -1;
    for (const auto& [r, us] : gu) {
        const auto& vs = gv[r];
        std::vector<std::vector<Rational>> block(us.size(), std::vector<Rational>(vs.size()));
        for (std::size_t s = 0; s < us.size(); ++s)
            for (std::size_t t = 0; t < vs.size(); ++t)
                block[s][t] = Rational(r) * gram.at(us[s] - 1, vs[t] - 1);
        result *= permanent(block);
        if (result == 0) return 0;
    }
    return result;
}

// annihilation action of x_i(r), r >= 1, on a monomial
FockElement annihilate(int var, int mode, const FockMonomial& m, const QMatrix& gram) {
    FockElement out;
    for (const auto& [key, e] : m.factors()) {
        if (key.first != mode) continue;
        Rational g = gram.at(var - 1, key.second - 1);
        if (g == 0) continue;
        FockMonomial reduced;
        for (const auto& [k2, e2] : m.factors()) {
            int exp = e2 - (k2 == key ? 1 : 0);
            if (exp > 0) reduced.multiply_by(k2.second, k2.first, exp);
        }
        out.add_term(reduced, Rational(mode) * Rational(e) * g);
    }
    return out;
}

Rational pair_monomials_recursive(const FockMonomial& mu, const FockMonomial& mv,
                                  const QMatrix& gram) {
    if (mu.is_vacuum()) return mv.is_vacuum() ? 1 : 0;
    if (mv.is_vacuum()) return 0;
    auto [key, e] = *mu.factors().begin();
    FockMonomial rest;
    for (const auto& [k2, e2] : mu.factors()) {
        int exp = e2 - (k2 == key ? 1 : 0);
        if (exp > 0) rest.multiply_by(k2.second, k2.first, exp);
    }
    // <x_i(-r) u' | v> = -<u' | x_i(r) v>
    Rational total = 0;
    FockElement lowered = annihilate(key.second, key.first, mv, gram);
    for (const auto& [m2, c2] : lowered.terms())
        total += c2 * pair_monomials_recursive(rest, m2, gram);
    return -total;
}

Rational pair_bilinear(const FockElement& u, const FockElement& v, const QMatrix& gram,
                       Rational (*mono_pair)(const FockMonomial&, const FockMonomial&,
                                             const QMatrix&)) {
    if (!gram.square()) throw std::invalid_argument("form matrix must be square");
    Rational total = 0;
    for (const auto& [mu, cu] : u.terms())
        for (const auto& [mv, cv] : v.terms()) {
            if (mu.weight() != mv.weight()) continue;  // cross-weight pairings vanish
            total += cu * cv * mono_pair(mu, mv, gram);
        }
    return total;
}

}  // namespace

Rational pair_form(const FockElement& u, const FockElement& v, const QMatrix& gram) {
    return pair_bilinear(u, v, gram, &pair_monomials);
}

Rational pair_form_recursive(const FockElement& u, const FockElement& v, const QMatrix& gram) {
    return pair_bilinear(u, v, gram, [](const FockMonomial& a, const FockMonomial& b,
                                        const QMatrix& g) {
        check_variables(a, g);
        check_variables(b, g);
        return pair_monomials_recursive(a, b, g);
    });
}

QMatrix gram_matrix(const std::vector<FockElement>& basis, const QMatrix& gram) {
    int weight = -1;
    for (const auto& e : basis) {
        if (e.is_zero() || !e.is_homogeneous())
            throw std::domain_error("gram_matrix requires nonzero homogeneous elements");
        int w = e.weight();
        if (weight < 0) weight = w;
        else if (w != weight)
            throw std::domain_error("gram_matrix requires equal-weight elements");
    }
    const std::size_t n = basis.size();
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational v = pair_form(basis[i], basis[j], gram);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    return g;
}

FockElement scale_variables(const FockElement& e, const std::vector<Rational>& scales) {
    for (const auto& s : scales)
        if (s == 0) throw std::domain_error("scale_variables: zero scale");
    FockElement out;
    for (const auto& [m, c] : e.terms()) {
        if (m.max_variable() > static_cast<int>(scales.size()))
            throw std::domain_error("monomial uses a variable beyond the scale list");
        Rational factor = c;
        for (std::size_t i = 0; i < scales.size(); ++i) {
            int d = m.degree_in(static_cast<int>(i + 1));
            if (d > 0) factor *= pow_rational(scales[i], d);
        }
        out.add_term(m, factor);
    }
    return out;
}

FockElement substitute_variables(const FockElement& e, const QMatrix& transform) {
    if (!transform.square())
        throw std::invalid_argument("substitution matrix must be square");
    const int k = static_cast<int>(transform.rows());
    FockElement out;
    for (const auto& [m, c] : e.terms()) {
        if (m.max_variable() > k)
            throw std::domain_error("monomial uses a variable beyond the substitution");
        FockElement prod = FockElement::monomial(FockMonomial{}, c);
        for (const auto& [key, exp] : m.factors()) {
            FockElement linear;
            for (int j = 1; j <= k; ++j) {
                const Rational& t = transform.at(key.second - 1, j - 1);
                if (t == 0) continue;
                FockMonomial xm;
                xm.multiply_by(j, key.first);
                linear.add_term(xm, t);
            }
            for (int rep = 0; rep < exp; ++rep) prod = prod * linear;
        }
        out += prod;
    }
    return out;
}

std::vector<Rational> coordinate_vector(const FockElement& e,
                                        const std::vector<FockMonomial>& basis) {
    std::map<FockMonomial, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
    std::vector<Rational> coords(basis.size(), Rational(0));
    for (const auto& [m, c] : e.terms()) {
        auto it = pos.find(m);
        if (it == pos.end())
            throw std::domain_error("monomial not in the given basis: " + m.str());
        coords[it->second] = c;
    }
    return coords;
}

}  // namespace latform
