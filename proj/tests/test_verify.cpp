#include <doctest.h>

#include "latform/verify.hpp"

using namespace latform;

TEST_CASE("scaling index oracle equals p^N per block") {
    for (long p : {2L, 3L})
        for (int k = 1; k <= 2; ++k)
            for (int n = 1; n <= 4; ++n)
                for (const auto& a : weight_vectors(n)) {
                    std::vector<Rational> scales(k, Rational(p));
                    CHECK(scaling_index_block(k, a, scales) ==
                          pow_integer(p, scaling_exponent(k, a).get_ui()));
                }
}

TEST_CASE("full scaling index equals p^{k S(k,n)}") {
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n) {
            std::vector<Rational> scales(k, Rational(2));
            Integer expect = pow_integer(2, Integer(s_value(k, n) * k).get_ui());
            CHECK(scaling_index_full(k, n, scales) == expect);
        }
}

TEST_CASE("single-variable scaling is sensitive to the corrected exponent") {
    // scaling only x1 by 2 in the (1,1) block for k=2: SNF index 2^4,
    // half of the all-variable 2^8
    std::vector<Rational> scales{Rational(2), Rational(1)};
    CHECK(scaling_index_block(2, WeightVector({1, 1}), scales) == 16);
}

TEST_CASE("verify_all on a reduced grid") {
    VerifyConfig config;
    config.k_max = 2;
    config.n_max = 2;
    config.lattices = {"A1", "A1A1"};
    config.jobs = 2;
    auto summary = verify_all(config);
    CHECK(summary.all_pass());
    CHECK(summary.adjudicated_mode == "S");
    CHECK(!summary.m1_reports.empty());
    CHECK(!summary.voa_reports.empty());
    for (const auto& c : summary.checks) {
        INFO(c.name, ": ", c.details);
        CHECK(c.pass);
    }
}

TEST_CASE("verify_all collects failures instead of throwing") {
    VerifyConfig config;
    config.k_max = 1;
    config.n_max = 2;
    config.lattices = {"A1"};
    config.budget = 1;
    auto summary = verify_all(config);
    CHECK(!summary.all_pass());
}

TEST_CASE("job count does not change the outcome") {
    VerifyConfig config;
    config.k_max = 1;
    config.n_max = 2;
    config.lattices = {"A1"};
    auto one = verify_all(config);
    config.jobs = 4;
    auto four = verify_all(config);
    REQUIRE(one.checks.size() == four.checks.size());
    for (std::size_t i = 0; i < one.checks.size(); ++i) {
        CHECK(one.checks[i].name == four.checks[i].name);
        CHECK(one.checks[i].pass == four.checks[i].pass);
        CHECK(one.checks[i].details == four.checks[i].details);
    }
}
