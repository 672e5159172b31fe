// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds. Exact-integer comparisons carry zero tolerance; runtime limits are
// part of the criteria and are measured per item.
//
// The oracle stages need roughly 4e9 visited pairs for (2,3) on 12 darts;
// the budget below admits that and nothing bigger.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hmc/asymptotics.hpp"
#include "hmc/cycleindex.hpp"
#include "hmc/hypercount.hpp"
#include "hmc/numtheory.hpp"
#include "hmc/oracle.hpp"
#include "hmc/riccati.hpp"
#include "reference_values.hpp"

using namespace hmc;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    double time_limit_s;
    std::function<bool(std::string&)> body;
};

void run_criterion(const Criterion& c) {
    std::string detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!ok) ++g_failures;
    std::printf("%s  %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                c.label.c_str(), secs, c.time_limit_s, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
}

bool check_table(const CountReport& rep, const std::vector<refvals::Entry>& want,
                 std::string& detail) {
    std::string why;
    if (!refvals::matches(rep, want, &why)) {
        detail = why;
        return false;
    }
    return true;
}

const FamilySpec kF23 = FamilySpec::make(2, 3);
const FamilySpec kF24 = FamilySpec::make(2, 4);
const FamilySpec kF33 = FamilySpec::make(3, 3);
const FamilySpec kF56 = FamilySpec::make(5, 6);
const FamilySpec kMaps = FamilySpec::make(2, FamilySpec::kInf);
const FamilySpec kF2 = FamilySpec::make(FamilySpec::kInf, FamilySpec::kInf);

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"criterion 1: rooted (2,3) first ten nonzero terms", 1.0,
                        [](std::string& d) {
                            return check_table(hypercount::rooted_series(kF23, 60),
                                               refvals::rooted_2_3, d);
                        }});

    criteria.push_back({"criterion 2: rooted (2,4) ten terms", 1.0, [](std::string& d) {
                            return check_table(hypercount::rooted_series(kF24, 40),
                                               refvals::rooted_2_4, d);
                        }});
    criteria.push_back({"criterion 2: rooted (3,3) ten terms", 1.0, [](std::string& d) {
                            return check_table(hypercount::rooted_series(kF33, 30),
                                               refvals::rooted_3_3, d);
                        }});

    criteria.push_back({"criterion 3: rooted (5,6) coefficient of z^30", 1.0,
                        [](std::string& d) {
                            CountReport rep = hypercount::rooted_series(kF56, 30);
                            if (rep.coeff[30] != Int(refvals::rooted_5_6_z30)) {
                                d = "got " + rep.coeff[30].get_str();
                                return false;
                            }
                            return true;
                        }});

    criteria.push_back({"criterion 4: conjugacy (2,3) ten terms", 30.0,
                        [](std::string& d) {
                            return check_table(cycleindex::conjugacy_series(kF23, 60),
                                               refvals::conj_2_3, d);
                        }});
    criteria.push_back({"criterion 4: conjugacy (2,4) ten terms", 30.0,
                        [](std::string& d) {
                            return check_table(cycleindex::conjugacy_series(kF24, 40),
                                               refvals::conj_2_4, d);
                        }});
    criteria.push_back({"criterion 4: conjugacy (3,3) ten terms", 30.0,
                        [](std::string& d) {
                            return check_table(cycleindex::conjugacy_series(kF33, 30),
                                               refvals::conj_3_3, d);
                        }});
    criteria.push_back({"criterion 4: conjugacy (5,6) coefficient of z^30", 30.0,
                        [](std::string& d) {
                            CountReport rep = cycleindex::conjugacy_series(kF56, 30);
                            if (rep.coeff[30] != Int(refvals::conj_5_6_z30)) {
                                d = "got " + rep.coeff[30].get_str();
                                return false;
                            }
                            return true;
                        }});

    criteria.push_back(
        {"criterion 5: maps (2,inf) rooted through z^40 and conjugacy through z^20",
         5.0, [](std::string& d) {
             if (!check_table(hypercount::rooted_series(kMaps, 40),
                              refvals::rooted_2_inf, d))
                 return false;
             CountReport conj = cycleindex::conjugacy_series(kMaps, 40);
             return check_table(conj, refvals::conj_2_inf, d);
         }});

    criteria.push_back(
        {"criterion 6: F2 subgroup counts (Hall) and conjugacy counts to n=41", 10.0,
         [](std::string& d) {
             CountReport hall = hypercount::hall_series(20);
             // independent route for Hall's numbers
             TruncSeries egf(20);
             for (std::size_t n = 0; n <= 20; ++n) egf.coeff[n] = Rat(factorial(n));
             TruncSeries alt = theta(log_series(egf));
             for (std::size_t n = 0; n <= 20; ++n)
                 if (Rat(hall.coeff[n]) != alt.coeff[n]) {
                     d = "Hall recurrence vs log-derivative differ at n=" +
                         std::to_string(n);
                     return false;
                 }
             // conjugacy closed form (internally cross-checked against the
             // moebius-log route, exact agreement enforced)
             return check_table(cycleindex::conjugacy_series_f2(41), refvals::conj_f2,
                                d);
         }});

    criteria.push_back(
        {"criterion 7: hypergeometric = riccati = named recurrence", 30.0,
         [](std::string& d) {
             for (auto [fam, T] : {std::pair{kF23, 60ul}, {kF24, 40ul}, {kF33, 30ul},
                                   {kMaps, 20ul}}) {
                 CountReport hyper = hypercount::rooted_series(fam, T);
                 CountReport ricc = riccati::rooted_from_riccati(fam, T);
                 CountReport named = riccati::named_recurrence(fam).as_report(T);
                 if (hyper.coeff != ricc.coeff) {
                     d = fam.str() + ": hypergeometric vs riccati differ";
                     return false;
                 }
                 if (hyper.coeff != named.coeff) {
                     d = fam.str() + ": hypergeometric vs named recurrence differ";
                     return false;
                 }
                 if (hyper.support().size() < 10) {
                     d = fam.str() + ": fewer than 10 nonzero terms";
                     return false;
                 }
             }
             return true;
         }});

    criteria.push_back(
        {"criterion 8: oracle equivalence on all stated instances", 600.0,
         [](std::string& d) {
             oracle::Budget budget;
             budget.max_pairs = 4'000'000'000ULL;
             struct Case {
                 FamilySpec fam;
                 std::vector<int> darts;
             };
             const std::vector<Case> cases = {
                 {kF23, {6, 12}},
                 {kF24, {4, 8}},
                 {kF33, {3, 6}},
                 {kMaps, {2, 4, 6}},
                 {kF2, {1, 2, 3, 4}},
             };
             for (const Case& c : cases) {
                 int maxn = c.darts.back();
                 CountReport rooted = hypercount::rooted_report(c.fam, maxn);
                 CountReport conj = cycleindex::conjugacy_report(c.fam, maxn);
                 for (int n : c.darts) {
                     Int r = oracle::rooted_count(c.fam, n, budget);
                     if (r != rooted.coeff[n]) {
                         d = c.fam.str() + " n=" + std::to_string(n) + " rooted: oracle " +
                             r.get_str() + " vs series " + rooted.coeff[n].get_str();
                         return false;
                     }
                     Int q = oracle::conjugacy_count(c.fam, n, budget);
                     if (q != conj.coeff[n]) {
                         d = c.fam.str() + " n=" + std::to_string(n) +
                             " conjugacy: oracle " + q.get_str() + " vs series " +
                             conj.coeff[n].get_str();
                         return false;
                     }
                 }
             }
             return true;
         }});

    criteria.push_back(
        {"criterion 9: asymptotic ratio trend and conjugacy identity", 30.0,
         [](std::string& d) {
             CountReport rooted = hypercount::rooted_series(kF23, 60);
             auto dev = [&](std::int64_t k) {
                 return std::abs(std::exp(asympt::log_int(rooted.coeff[6 * k]) -
                                          asympt::log_rooted_estimate(kF23, k)) -
                                 1.0);
             };
             if (!(dev(10) < dev(3))) {
                 d = "deviation k=10: " + std::to_string(dev(10)) +
                     " not below k=3: " + std::to_string(dev(3));
                 return false;
             }
             for (std::int64_t k = 1; k <= 10; ++k) {
                 double lhs = asympt::log_conjugacy_estimate(kF23, k) +
                              std::log(6.0 * static_cast<double>(k));
                 double rhs = asympt::log_rooted_estimate(kF23, k);
                 // log-space absolute difference = value-space relative error
                 if (std::abs(lhs - rhs) > 1e-12) {
                     d = "conjugacy*n vs rooted off by " + std::to_string(lhs - rhs) +
                         " at k=" + std::to_string(k);
                     return false;
                 }
             }
             return true;
         }});

    criteria.push_back(
        {"criterion 10: property fuzz (exp/log, ring axioms, integrality)", 120.0,
         [](std::string& d) {
             std::mt19937 rng(20250810);
             std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
             auto random_series = [&](std::size_t T, int c0) {
                 TruncSeries s(T);
                 for (std::size_t k = 0; k <= T; ++k) {
                     Rat v(num(rng), den(rng));
                     v.canonicalize();
                     s.coeff[k] = v;
                 }
                 s.coeff[0] = c0;
                 return s;
             };
             for (int trial = 0; trial < 25; ++trial) {
                 std::size_t T = 1 + trial * 2;
                 TruncSeries g = random_series(T, 0);
                 if (log_series(exp_series(g)) != g) {
                     d = "exp/log round trip failed";
                     return false;
                 }
                 TruncSeries a = random_series(T, num(rng));
                 TruncSeries b = random_series(T, num(rng));
                 TruncSeries c = random_series(T, num(rng));
                 if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) {
                     d = "ring axioms failed";
                     return false;
                 }
             }
             // integrality assertions stay quiet on every valid family
             for (int p = 2; p <= 8; ++p)
                 for (int q = p; q <= 8; ++q) {
                     if (p * q < 6) continue;
                     FamilySpec fam = FamilySpec::make(p, q);
                     std::size_t T = 4 * static_cast<std::size_t>(
                                             numtheory::lcm(p, q));
                     try {
                         hypercount::rooted_series(fam, T);
                         riccati::rooted_from_riccati(fam, T);
                         cycleindex::conjugacy_series(fam, T);
                     } catch (const std::exception& e) {
                         d = fam.str() + ": " + e.what();
                         return false;
                     }
                 }
             for (int p = 2; p <= 8; ++p) {
                 FamilySpec fam = FamilySpec::make(p, FamilySpec::kInf);
                 try {
                     hypercount::rooted_series(fam, 4 * p);
                     riccati::rooted_from_riccati(fam, 4 * p);
                     cycleindex::conjugacy_series(fam, 4 * p);
                 } catch (const std::exception& e) {
                     d = fam.str() + ": " + e.what();
                     return false;
                 }
             }
             return true;
         }});

    for (const Criterion& c : criteria) run_criterion(c);
    std::printf("SUMMARY: %zu/%zu criteria passed\n", criteria.size() - g_failures,
                criteria.size());
    return g_failures == 0 ? 0 : 1;
}
