#include "latform/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace latform {

WeightVector::WeightVector(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    for (int a : mult_)
        if (a < 0) throw std::invalid_argument("negative multiplicity in weight vector");
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
}

WeightVector WeightVector::from_partition(const std::vector<int>& parts) {
    int largest = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        largest = std::max(largest, p);
    }
    std::vector<int> mult(largest, 0);
    for (int p : parts) ++mult[p - 1];
    return WeightVector(std::move(mult));
}

int WeightVector::weight() const {
    int w = 0;
    for (std::size_t j = 0; j < mult_.size(); ++j) w += static_cast<int>(j + 1) * mult_[j];
    return w;
}

int WeightVector::total_parts() const {
    return std::accumulate(mult_.begin(), mult_.end(), 0);
}

int WeightVector::multiplicity(int j) const {
    if (j < 1) throw std::invalid_argument("part index is 1-based");
    return j <= static_cast<int>(mult_.size()) ? mult_[j - 1] : 0;
}

std::vector<int> WeightVector::to_partition() const {
    std::vector<int> parts;
    for (int j = static_cast<int>(mult_.size()); j >= 1; --j)
        parts.insert(parts.end(), mult_[j - 1], j);
    return parts;
}

namespace {

// partitions of n with parts <= cap, lexicographically ascending as
// weakly decreasing sequences
void partitions_rec(int n, int cap, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int first = 1; first <= std::min(n, cap); ++first) {
        prefix.push_back(first);
        partitions_rec(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<WeightVector> weight_vectors(int n) {
    if (n < 0) throw std::invalid_argument("weight_vectors: n must be nonnegative");
    if (n == 0) return {};
    std::vector<std::vector<int>> parts;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, parts);
    std::vector<WeightVector> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(WeightVector::from_partition(p));
    return out;
}

std::vector<std::vector<int>> compositions(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("compositions: k >= 1, n >= 0 required");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == k - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

Integer count_monomials(int k, int m) {
    if (k < 1 || m < 0) throw std::invalid_argument("count_monomials: k >= 1, m >= 0 required");
    return binomial(static_cast<unsigned long>(m + k - 1), static_cast<unsigned long>(k - 1));
}

Integer scaling_exponent(int k, const WeightVector& a) {
    if (k < 1) throw std::invalid_argument("scaling_exponent: k >= 1 required");
    Integer e = a.total_parts();
    for (int j = 1; j <= a.max_part(); ++j)
        e *= count_monomials(k, a.multiplicity(j));
    return e;
}

Integer scaling_exponent_literal(int k, const WeightVector& a) {
    if (k < 1) throw std::invalid_argument("scaling_exponent_literal: k >= 1 required");
    Integer e = 1;
    for (int j = 1; j <= a.max_part(); ++j)
        e *= Integer(a.multiplicity(j)) * count_monomials(k, a.multiplicity(j));
    return e;
}

Integer s_value(int k, int n) {
    Integer sum = 0;
    for (const auto& a : weight_vectors(n)) sum += scaling_exponent(k, a);
    if (sum % k != 0)
        throw std::logic_error("s_value: exponent sum not divisible by k");
    return sum / k;
}

Integer b_value(int n) {
    if (n < 0) throw std::invalid_argument("b_value: n must be nonnegative");
    Integer b = 1;
    for (const auto& a : weight_vectors(n))
        for (int i = 1; i <= a.max_part(); ++i) {
            int ai = a.multiplicity(i);
            if (ai == 0) continue;
            b *= pow_integer(i, static_cast<unsigned long>(ai));
            b *= factorial(static_cast<unsigned long>(ai));
        }
    return b;
}

Integer index_formula_value(int k, int n) {
    // Each composition contributes a tensor product of the one-variable
    // blocks, so b_{n_i} enters with exponent prod_{j != i} p(n_j).
    Integer product = 1;
    for (const auto& comp : compositions(k, n)) {
        std::vector<unsigned long> dims;
        unsigned long total = 1;
        for (int ni : comp) {
            auto d = ni == 0 ? 1ul : weight_vectors(ni).size();
            dims.push_back(d);
            total *= d;
        }
        for (std::size_t i = 0; i < comp.size(); ++i)
            product *= pow_integer(b_value(comp[i]), total / dims[i]);
    }
    return exact_sqrt(product);
}

}  // namespace latform
