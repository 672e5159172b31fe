#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hmc/asymptotics.hpp"
#include "hmc/cycleindex.hpp"
#include "hmc/hypercount.hpp"

using namespace hmc;
namespace as = hmc::asympt;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_err(double got, double want) { return std::abs(got / want - 1.0); }
} // namespace

TEST_CASE("gamma accuracy contract") {
    CHECK(rel_err(as::gamma_fn(5.0), 24.0) <= 1e-12);
    CHECK(rel_err(as::gamma_fn(0.5), std::sqrt(kPi)) <= 1e-12);
    CHECK(rel_err(as::gamma_fn(1.0), 1.0) <= 1e-12);
    CHECK(rel_err(as::gamma_fn(20.0), 121645100408832000.0) <= 1e-12);
    // reflection: Gamma(1/6) Gamma(5/6) = pi / sin(pi/6) = 2 pi
    CHECK(rel_err(as::gamma_fn(1.0 / 6) * as::gamma_fn(5.0 / 6), 2 * kPi) <= 1e-12);
    CHECK_THROWS_AS(as::gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(as::gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("reflection identity on each family's parameter list") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 4}, {3, 3}, {5, 6}}) {
        as::AsymptoticParams ap = as::derive(FamilySpec::make(p, q));
        CHECK(ap.gamma_prod > 0);
        for (double a : ap.a) {
            if (a >= 1.0) continue;
            CHECK(rel_err(as::gamma_fn(a) * as::gamma_fn(1.0 - a),
                          kPi / std::sin(kPi * a)) <= 1e-12);
        }
    }
}

TEST_CASE("log estimates are finite and monotone to k = 200") {
    for (auto [p, q] : {std::pair{2, 3}, {5, 6}, {2, FamilySpec::kInf}}) {
        FamilySpec fam = FamilySpec::make(p, q);
        double prev = -1e300;
        for (std::int64_t k = 1; k <= 200; ++k) {
            double lg = as::log_rooted_estimate(fam, k);
            REQUIRE(std::isfinite(lg));
            REQUIRE(lg > prev);
            prev = lg;
        }
    }
}

TEST_CASE("(2,3) exponent simplifies to k + 1/2") {
    // (N-1)k - (N-1)/2 + sum a_i with N = 2, sum = 1
    as::AsymptoticParams ap = as::derive(FamilySpec::make(2, 3));
    REQUIRE(ap.N == 2);
    REQUIRE(ap.sum_a == doctest::Approx(1.0).epsilon(1e-14));
    for (std::int64_t k : {1, 5, 10}) {
        double expect = 0.5 * std::log(2 * kPi) + std::log(6.0) - std::log(2 * kPi) +
                        (k + 0.5) * std::log(static_cast<double>(k)) +
                        (std::log(6.0) - 1.0) * k;
        // Gamma(1/6)Gamma(5/6) = 2 pi makes the constant 6/sqrt(2 pi)
        CHECK(std::abs(as::log_rooted_estimate(FamilySpec::make(2, 3), k) - expect) <=
              1e-10);
    }
}

TEST_CASE("exact/asymptotic ratio approaches 1") {
    FamilySpec fam = FamilySpec::make(2, 3);
    CountReport rooted = hypercount::rooted_series(fam, 60);
    auto dev = [&](std::int64_t k) {
        double log_ratio =
            as::log_int(rooted.coeff[6 * k]) - as::log_rooted_estimate(fam, k);
        return std::abs(std::exp(log_ratio) - 1.0);
    };
    CHECK(dev(10) < dev(3));
    // same trend for maps
    FamilySpec maps = FamilySpec::make(2, FamilySpec::kInf);
    CountReport mr = hypercount::rooted_series(maps, 40);
    auto mdev = [&](std::int64_t k) {
        double log_ratio =
            as::log_int(mr.coeff[2 * k]) - as::log_rooted_estimate(maps, k);
        return std::abs(std::exp(log_ratio) - 1.0);
    };
    CHECK(mdev(20) < mdev(5));
}

TEST_CASE("conjugacy estimate is rooted / n") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 4}, {5, 6}, {2, FamilySpec::kInf}}) {
        FamilySpec fam = FamilySpec::make(p, q);
        std::int64_t lcm = hypercount::derive_params(fam).lcm_pq;
        for (std::int64_t k = 1; k <= 50; ++k) {
            double lhs = as::log_conjugacy_estimate(fam, k) +
                         std::log(static_cast<double>(lcm * k));
            double rhs = as::log_rooted_estimate(fam, k);
            REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("exact conjugacy/rooted ratio behaves like 1/n") {
    FamilySpec fam = FamilySpec::make(2, 3);
    CountReport rooted = hypercount::rooted_series(fam, 60);
    CountReport conj = cycleindex::conjugacy_series(fam, 60);
    // n * conjugacy(n) / rooted(n) at k = 10 sits within 25% of 1
    double ratio = std::exp(as::log_int(conj.coeff[60] * 60) - as::log_int(rooted.coeff[60]));
    CHECK(std::abs(ratio - 1.0) < 0.25);

    // maps: the same ratio tightens as k grows
    FamilySpec maps = FamilySpec::make(2, FamilySpec::kInf);
    CountReport mroot = hypercount::rooted_series(maps, 40);
    CountReport mconj = cycleindex::conjugacy_series(maps, 40);
    auto off = [&](std::int64_t n) {
        return std::abs(std::exp(as::log_int(mconj.coeff[n] * Int(static_cast<unsigned long>(n))) -
                                 as::log_int(mroot.coeff[n])) -
                        1.0);
    };
    CHECK(off(40) < off(10));
}
