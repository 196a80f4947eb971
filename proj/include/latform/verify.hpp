#pragma once

#include "latform/voa.hpp"

namespace latform {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct VerifySummary {
    std::vector<CheckResult> checks;
    std::string adjudicated_mode;  // which closed-form exponent the oracles confirm
    std::vector<DetReport> m1_reports;
    std::vector<VoaDetReport> voa_reports;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyConfig {
    int k_max = 2;
    int n_max = 4;
    std::vector<std::string> lattices = {"Z2", "A1", "A2", "A1A1"};
    std::size_t budget = kDefaultBudget;
    int jobs = 1;
};

// Smith-form index of the scaled image of the weight-n monomial form
// (or of one block of it) inside itself; the generic lattice machinery is
// used on purpose, as the independent oracle for the closed-form exponents.
Integer scaling_index_block(int k, const WeightVector& a, const std::vector<Rational>& scales);
Integer scaling_index_full(int k, int n, const std::vector<Rational>& scales);

// Runs the whole structural invariant grid: subring integrality, the index
// formula, both scaling oracles, the literal-vs-corrected exponent report,
// and both determinant grids. Collects failures instead of stopping early.
VerifySummary verify_all(const VerifyConfig& config);

}  // namespace latform
