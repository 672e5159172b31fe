#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmc/family.hpp"

// Brute-force ground truth at small dart counts: enumerate permutation
// pairs (alpha, phi) on [n], keep the transitive ones, and count rooted
// hypermaps (transitive pairs / (n-1)!) and isomorphism classes (orbits
// under simultaneous conjugation) directly from the definitions.
namespace hmc::oracle {

// Darts are 0-indexed internally; printing converts to the 1-indexed
// convention.
struct Perm {
    std::vector<int> img;

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }

    static Perm identity(int n);
    bool is_bijection() const;
    std::vector<int> cycle_lengths() const; // ascending
    std::string cycle_str() const;          // e.g. "(1,4)(2,5)(3,6)", 1-indexed

    bool operator==(const Perm&) const = default;
};

Perm compose(const Perm& a, const Perm& b);         // x -> b(a(x)), left-to-right
Perm conjugate(const Perm& psi, const Perm& a);     // psi a psi^{-1}
bool commutes(const Perm& a, const Perm& b);

struct PermPair {
    Perm alpha;
    Perm phi;
    int n = 0;
};

// True iff <alpha, phi> has a single orbit on {0..n-1}; graph search over
// the union of the two functional graphs.
bool is_transitive(const PermPair& pair);

// All permutations of [n] whose cycles all have length L, in a fixed
// deterministic order. L = kAnyCycles (the infinite factor) streams every
// permutation. L finite with L not dividing n streams nothing.
inline constexpr int kAnyCycles = 0;
void for_each_cycle_type_perm(int n, int L, const std::function<void(const Perm&)>& fn);
Int cycle_type_perm_count(int n, int L);

struct Budget {
    // cap on the estimated number of (alpha, phi) pairs to visit
    std::uint64_t max_pairs = 100'000'000ULL;
    int threads = 0; // 0 = hardware concurrency
};

struct budget_exceeded : std::runtime_error {
    std::uint64_t estimate;
    std::uint64_t cap;
    budget_exceeded(std::uint64_t estimate_, std::uint64_t cap_);
};

// Number of (alpha, phi) pairs of the family's cycle types, before the
// transitivity filter; the quantity the budget gate compares against.
Int estimate_pairs(const FamilySpec& family, int n);

// Transitive pairs on [n]. Heavy path (both factors finite) builds phi
// cycle-by-cycle under a connectivity bound; results are memoized
// in-process since the conjugacy oracle needs the same count.
Int transitive_pair_count(const FamilySpec& family, int n, const Budget& budget = {});

// Transitive pairs / (n-1)!. A labelled connected pair has no nontrivial
// automorphism fixing a dart, so the relabelings fixing dart 0 act freely
// on transitive pairs and each rooted object is counted exactly (n-1)!
// times; the division is asserted exact at runtime as the witness.
Int rooted_count(const FamilySpec& family, int n, const Budget& budget = {});

// Orbits of simultaneous conjugation on transitive pairs. Two independent
// routes; conjugacy_count picks by size, tests assert they agree.
Int conjugacy_count_orbits(const FamilySpec& family, int n, const Budget& budget = {});
Int conjugacy_count_burnside(const FamilySpec& family, int n, const Budget& budget = {});
Int conjugacy_count(const FamilySpec& family, int n, const Budget& budget = {});

} // namespace hmc::oracle
