#include "latform/lattice.hpp"

#include <nlohmann/json.hpp>

#include "latform/linalg.hpp"

namespace latform {

IntegerLattice make_lattice(std::string name, QMatrix gram) {
    if (!gram.square() || gram.rows() == 0)
        throw std::domain_error("lattice Gram matrix must be square and nonempty");
    if (!gram.is_integral())
        throw std::domain_error("lattice Gram matrix must have integer entries");
    if (!gram.is_symmetric())
        throw std::domain_error("lattice Gram matrix must be symmetric");
    for (std::size_t t = 1; t <= gram.rows(); ++t) {
        QMatrix minor(t, t);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) minor.at(i, j) = gram.at(i, j);
        if (determinant(minor) <= 0)
            throw std::domain_error("Gram matrix not positive definite: leading minor " +
                                    std::to_string(t) + " is not positive");
    }
    return IntegerLattice{std::move(name), std::move(gram)};
}

Integer lattice_det(const IntegerLattice& L) {
    return to_integer(determinant(L.gram));
}

bool is_even(const IntegerLattice& L) {
    for (std::size_t i = 0; i < L.rank(); ++i)
        if (L.gram.at(i, i).get_num() % 2 != 0) return false;
    return true;
}

namespace {

Integer norm_of(const IntegerLattice& L, const std::vector<Integer>& c) {
    Rational n = 0;
    const std::size_t k = L.rank();
    for (std::size_t i = 0; i < k; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            n += Rational(c[i]) * Rational(c[j]) * L.gram.at(i, j);
    }
    return to_integer(n);
}

// |c_i| <= floor(sqrt(norm_bound * (G^{-1})_{ii})); Cauchy-Schwarz in the
// inner product defined by G
std::vector<Integer> coefficient_bounds(const IntegerLattice& L, int max_norm) {
    QMatrix inv = inverse(L.gram);
    std::vector<Integer> bounds(L.rank());
    for (std::size_t i = 0; i < L.rank(); ++i)
        bounds[i] = floor_sqrt(Rational(max_norm) * inv.at(i, i));
    return bounds;
}

template <typename Visit>
void enumerate_box(const IntegerLattice& L, int max_norm, Visit&& visit) {
    if (max_norm < 0) return;
    const std::size_t k = L.rank();
    auto bounds = coefficient_bounds(L, max_norm);
    std::vector<Integer> c(k);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == k) {
            Integer norm = norm_of(L, c);
            if (norm <= max_norm) visit(c, norm);
            return;
        }
        for (Integer v = -bounds[pos]; v <= bounds[pos]; ++v) {
            c[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<ShellCount> shell_counts(const IntegerLattice& L, int max_norm) {
    if (max_norm < 0 || max_norm % 2 != 0)
        throw std::invalid_argument("max_norm must be even and nonnegative");
    std::vector<ShellCount> shells(static_cast<std::size_t>(max_norm / 2) + 1);
    for (std::size_t m = 0; m < shells.size(); ++m) shells[m].norm = static_cast<int>(2 * m);
    enumerate_box(L, max_norm, [&](const std::vector<Integer>&, const Integer& norm) {
        if (norm % 2 == 0) ++shells[norm.get_ui() / 2].count;
    });
    return shells;
}

std::vector<ShellCount> shell_counts_recursive(const IntegerLattice& L, int max_norm) {
    if (max_norm < 0 || max_norm % 2 != 0)
        throw std::invalid_argument("max_norm must be even and nonnegative");
    const std::size_t k = L.rank();

    // rational LDL^T: Q(c) = sum_i d_i (c_i + sum_{j>i} l_{ji} c_j)^2
    QMatrix a = L.gram;
    std::vector<Rational> d(k);
    QMatrix lower = QMatrix::identity(k);
    for (std::size_t i = 0; i < k; ++i) {
        d[i] = a.at(i, i);
        for (std::size_t p = 0; p < i; ++p)
            d[i] -= d[p] * lower.at(i, p) * lower.at(i, p);
        for (std::size_t j = i + 1; j < k; ++j) {
            Rational v = a.at(j, i);
            for (std::size_t p = 0; p < i; ++p)
                v -= d[p] * lower.at(j, p) * lower.at(i, p);
            lower.at(j, i) = v / d[i];
        }
    }

    std::vector<ShellCount> shells(static_cast<std::size_t>(max_norm / 2) + 1);
    for (std::size_t m = 0; m < shells.size(); ++m) shells[m].norm = static_cast<int>(2 * m);

    std::vector<Integer> c(k);
    // enumerate from the last coordinate down, pruning by remaining budget
    auto rec = [&](auto&& self, int pos, const Rational& used) -> void {
        if (pos < 0) {
            Integer norm = to_integer(used);
            if (norm % 2 == 0) ++shells[norm.get_ui() / 2].count;
            return;
        }
        Rational shift = 0;
        for (std::size_t j = pos + 1; j < k; ++j)
            shift += lower.at(j, pos) * Rational(c[j]);
        Rational budget = Rational(max_norm) - used;
        // d[pos] * (v + shift)^2 <= budget holds on a contiguous integer
        // range around -shift; bracket the minimum and scan outward
        auto fits = [&](const Integer& v) {
            Rational t = Rational(v) + shift;
            return d[pos] * t * t <= budget;
        };
        Rational center = -shift;
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), center.get_num().get_mpz_t(), center.get_den().get_mpz_t());
        Integer start;
        if (fits(fl)) start = fl;
        else if (fits(fl + 1)) start = fl + 1;
        else return;  // empty range
        Integer lo = start, hi = start;
        while (fits(lo - 1)) --lo;
        while (fits(hi + 1)) ++hi;
        for (Integer v = lo; v <= hi; ++v) {
            c[pos] = v;
            Rational t = Rational(v) + shift;
            self(self, pos - 1, used + d[pos] * t * t);
        }
        c[pos] = 0;
    };
    if (max_norm >= 0) rec(rec, static_cast<int>(k) - 1, Rational(0));
    return shells;
}

std::vector<std::vector<Integer>> shell_vectors(const IntegerLattice& L, int norm) {
    if (norm < 0) throw std::invalid_argument("norm must be nonnegative");
    std::vector<std::vector<Integer>> out;
    enumerate_box(L, norm, [&](const std::vector<Integer>& c, const Integer& n) {
        if (n == norm) out.push_back(c);
    });
    return out;
}

IntegerLattice sublattice_scale(const IntegerLattice& L, const std::vector<Integer>& scales) {
    if (scales.size() != L.rank())
        throw std::invalid_argument("scale count must match the lattice rank");
    for (const auto& s : scales)
        if (s < 1) throw std::invalid_argument("scales must be positive");
    QMatrix g = L.gram;
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j)
            g.at(i, j) *= Rational(scales[i]) * Rational(scales[j]);
    return IntegerLattice{L.name + "(scaled)", std::move(g)};
}

Integer index_det_transfer(const Integer& det_super, const Integer& index) {
    if (det_super < 1 || index < 1)
        throw std::invalid_argument("index_det_transfer requires positive inputs");
    return index * index * det_super;
}

IntegerLattice builtin_lattice(std::string_view name) {
    if (name == "Z1") return make_lattice("Z1", QMatrix{{1}});
    if (name == "Z2") return make_lattice("Z2", QMatrix::identity(2));
    if (name == "Z3") return make_lattice("Z3", QMatrix::identity(3));
    if (name == "Z4") return make_lattice("Z4", QMatrix::identity(4));
    if (name == "A1") return make_lattice("A1", QMatrix{{2}});
    if (name == "A2") return make_lattice("A2", QMatrix{{2, 1}, {1, 2}});
    if (name == "A1A1") return make_lattice("A1A1", QMatrix{{2, 0}, {0, 2}});
    throw std::domain_error("unknown built-in lattice: " + std::string(name));
}

std::vector<std::string> builtin_lattice_names() {
    return {"Z1", "Z2", "Z3", "Z4", "A1", "A2", "A1A1"};
}

IntegerLattice lattice_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("gram"))
        throw std::domain_error("lattice JSON must be an object with a \"gram\" array");
    std::string name = j.value("name", std::string("lattice"));
    const auto& rows = j.at("gram");
    if (!rows.is_array() || rows.empty())
        throw std::domain_error("\"gram\" must be a nonempty array of rows");
    QMatrix gram(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != rows.size())
            throw std::domain_error("\"gram\" must be square");
        for (std::size_t jj = 0; jj < row.size(); ++jj) {
            if (!row[jj].is_number_integer())
                throw std::domain_error("Gram entries must be integers");
            gram.at(i, jj) = Rational(row[jj].get<long>());
        }
    }
    return make_lattice(std::move(name), std::move(gram));
}

}  // namespace latform
