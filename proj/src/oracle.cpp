#include "hmc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "hmc/errors.hpp"

namespace hmc::oracle {

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i;
    return p;
}

bool Perm::is_bijection() const {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 0 || v >= size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<int> Perm::cycle_lengths() const {
    std::vector<bool> seen(img.size(), false);
    std::vector<int> lens;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int x = i; !seen[x]; x = img[x]) {
            seen[x] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

std::string Perm::cycle_str() const {
    std::vector<bool> seen(img.size(), false);
    std::ostringstream out;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        out << "(";
        bool first = true;
        for (int x = i; !seen[x]; x = img[x]) {
            seen[x] = true;
            if (!first) out << ",";
            first = false;
            out << x + 1;
        }
        out << ")";
    }
    return out.str();
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.size());
    for (int x = 0; x < a.size(); ++x) r.img[x] = b.img[a.img[x]];
    return r;
}

Perm conjugate(const Perm& psi, const Perm& a) {
    Perm r;
    r.img.resize(a.size());
    for (int x = 0; x < a.size(); ++x) r.img[psi.img[x]] = psi.img[a.img[x]];
    return r;
}

bool commutes(const Perm& a, const Perm& b) {
    for (int x = 0; x < a.size(); ++x)
        if (a.img[b.img[x]] != b.img[a.img[x]]) return false;
    return true;
}

bool is_transitive(const PermPair& pair) {
    const int n = pair.n;
    if (n <= 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {pair.alpha.img[x], pair.phi.img[x]}) {
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

namespace {

// Recursive cycle-at-a-time enumeration: each cycle is anchored at the
// smallest element not yet assigned, so every permutation with all cycles
// of length L is produced exactly once.
struct CycleTypeEnum {
    int n, L;
    std::vector<int> img;
    std::vector<bool> used;
    const std::function<void(const Perm&)>* fn;

    void run() {
        img.assign(n, -1);
        used.assign(n, false);
        rec(0);
    }

    void rec(int assigned) {
        if (assigned == n) {
            Perm p;
            p.img = img;
            (*fn)(p);
            return;
        }
        int d = 0;
        while (used[d]) ++d;
        used[d] = true;
        cycle(d, d, 1, assigned + 1);
        used[d] = false;
    }

    void cycle(int anchor, int prev, int len, int assigned) {
        if (len == L) {
            img[prev] = anchor;
            rec(assigned);
            return;
        }
        for (int x = anchor + 1; x < n; ++x) {
            if (used[x]) continue;
            used[x] = true;
            img[prev] = x;
            cycle(anchor, x, len + 1, assigned + 1);
            used[x] = false;
        }
        img[prev] = -1;
    }
};

} // namespace

void for_each_cycle_type_perm(int n, int L, const std::function<void(const Perm&)>& fn) {
    if (n < 0) throw std::domain_error("for_each_cycle_type_perm: n < 0");
    if (L == kAnyCycles) {
        Perm p = Perm::identity(n);
        do {
            fn(p);
        } while (std::next_permutation(p.img.begin(), p.img.end()));
        return;
    }
    if (L < 1 || n % L != 0) return; // empty stream
    CycleTypeEnum e;
    e.n = n;
    e.L = L;
    e.fn = &fn;
    e.run();
}

Int cycle_type_perm_count(int n, int L) {
    if (L == kAnyCycles) return factorial(n);
    if (L < 1 || n % L != 0) return 0;
    // n! / (L^{n/L} (n/L)!)
    return factorial(n) / (int_pow(Int(L), n / L) * factorial(n / L));
}

budget_exceeded::budget_exceeded(std::uint64_t estimate_, std::uint64_t cap_)
    : std::runtime_error("oracle refuses: estimated " + std::to_string(estimate_) +
                         " pairs exceeds budget " + std::to_string(cap_)),
      estimate(estimate_),
      cap(cap_) {}

Int estimate_pairs(const FamilySpec& family, int n) {
    return cycle_type_perm_count(n, family.p) * cycle_type_perm_count(n, family.q);
}

namespace {

std::uint64_t clamp_u64(const Int& v) {
    return v.fits_ulong_p() ? v.get_ui() : std::numeric_limits<std::uint64_t>::max();
}

void check_budget(const FamilySpec& family, int n, const Budget& budget) {
    Int est = estimate_pairs(family, n);
    if (est > Int(static_cast<unsigned long>(budget.max_pairs)))
        throw budget_exceeded(clamp_u64(est), budget.max_pairs);
}

constexpr int kMaxFastDarts = 32;

// Counts phi completions (all cycles length q) that make <alpha, phi>
// transitive, for one fixed alpha already merged into the union-find
// baseline. Components are merged cycle-by-cycle with rollback; a branch
// is cut as soon as the remaining cycles cannot connect what is left.
struct PhiSearch {
    int n = 0, q = 0;
    std::uint32_t unused = 0;
    int parent[kMaxFastDarts];
    int comps = 0;
    int undo[kMaxFastDarts];
    int undo_top = 0;
    std::uint64_t found = 0;

    int find(int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        undo[undo_top++] = b;
        --comps;
    }
    void rollback(int mark) {
        while (undo_top > mark) {
            int b = undo[--undo_top];
            parent[b] = b;
            ++comps;
        }
    }

    void search() {
        if (unused == 0) {
            if (comps == 1) ++found;
            return;
        }
        int free = std::popcount(unused);
        if (comps - 1 > (q - 1) * (free / q)) return;
        int d = std::countr_zero(unused);
        unused &= unused - 1;
        extend(d, 1);
        unused |= 1u << d;
    }

    // current cycle holds len darts; remaining slots can each merge one
    // component, later full cycles at most q-1 each
    void extend(int anchor, int len) {
        if (len == q) {
            search();
            return;
        }
        int slots = q - len;
        int free = std::popcount(unused);
        if (comps - 1 > slots + (q - 1) * ((free - slots) / q)) return;
        for (std::uint32_t m = unused; m; m &= m - 1) {
            int x = std::countr_zero(m);
            int mark = undo_top;
            unite(anchor, x);
            unused &= ~(1u << x);
            extend(anchor, len + 1);
            unused |= 1u << x;
            rollback(mark);
        }
    }
};

// Both factors finite: stream alphas, run the pruned phi search for each.
// The alpha stream is split across workers by index residue; exact integer
// partial sums make the total independent of scheduling.
Int transitive_pairs_finite(const FamilySpec& family, int n, const Budget& budget) {
    if (n > kMaxFastDarts)
        throw std::domain_error("oracle: n exceeds the fast-path dart limit");
    if (n % family.p != 0 || n % family.q != 0) return 0;

    int workers = budget.threads > 0 ? budget.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::uint64_t idx = 0;
            std::uint64_t local = 0;
            for_each_cycle_type_perm(n, family.p, [&](const Perm& alpha) {
                if (idx++ % workers != static_cast<std::uint64_t>(w)) return;
                PhiSearch s;
                s.n = n;
                s.q = family.q;
                s.unused = n == 32 ? ~0u : ((1u << n) - 1);
                s.comps = n;
                s.undo_top = 0;
                for (int x = 0; x < n; ++x) s.parent[x] = x;
                for (int x = 0; x < n; ++x) s.unite(x, alpha.img[x]);
                s.undo_top = 0; // alpha merges are the fixed baseline
                s.search();
                local += s.found;
            });
            partial[w] = local;
        });
    }
    for (auto& t : pool) t.join();

    Int total = 0;
    for (std::uint64_t c : partial) total += Int(static_cast<unsigned long>(c));
    return total;
}

// At least one infinite factor: sizes are tiny, plain double stream.
Int transitive_pairs_generic(const FamilySpec& family, int n) {
    Int total = 0;
    for_each_cycle_type_perm(n, family.p, [&](const Perm& alpha) {
        for_each_cycle_type_perm(n, family.q, [&](const Perm& phi) {
            PermPair pair{alpha, phi, n};
            if (is_transitive(pair)) ++total;
        });
    });
    return total;
}

std::mutex g_memo_mutex;
std::map<std::tuple<int, int, int>, Int> g_transitive_memo;

} // namespace

Int transitive_pair_count(const FamilySpec& family, int n, const Budget& budget) {
    if (n < 1) throw std::domain_error("oracle: n must be >= 1");
    check_budget(family, n, budget);
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_transitive_memo.find({family.p, family.q, n});
        if (it != g_transitive_memo.end()) return it->second;
    }
    Int count = family.both_finite() ? transitive_pairs_finite(family, n, budget)
                                     : transitive_pairs_generic(family, n);
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_transitive_memo[{family.p, family.q, n}] = count;
    return count;
}

Int rooted_count(const FamilySpec& family, int n, const Budget& budget) {
    Int pairs = transitive_pair_count(family, n, budget);
    Int relabelings = factorial(n - 1);
    if (pairs % relabelings != 0)
        throw internal_error("oracle: transitive pair count " + pairs.get_str() +
                             " not divisible by (n-1)! at n=" + std::to_string(n));
    return pairs / relabelings;
}

namespace {

std::string pair_key(const PermPair& pair) {
    std::string k;
    k.reserve(2 * pair.n);
    for (int v : pair.alpha.img) k.push_back(static_cast<char>(v));
    for (int v : pair.phi.img) k.push_back(static_cast<char>(v));
    return k;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::size_t roots() {
        std::size_t r = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++r;
        return r;
    }
};

constexpr std::uint64_t kOrbitStorageLimit = 2'000'000;

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// centralizer order of a permutation of cycle type lambda
Int centralizer_order(const std::vector<int>& lambda) {
    std::map<int, int> mult;
    for (int part : lambda) ++mult[part];
    Int z = 1;
    for (auto [len, count] : mult)
        z *= int_pow(Int(len), count) * factorial(count);
    return z;
}

Perm perm_of_type(int n, const std::vector<int>& lambda) {
    Perm psi;
    psi.img.resize(n);
    int base = 0;
    for (int part : lambda) {
        for (int i = 0; i < part; ++i)
            psi.img[base + i] = base + (i + 1) % part;
        base += part;
    }
    return psi;
}

} // namespace

Int conjugacy_count_orbits(const FamilySpec& family, int n, const Budget& budget) {
    if (n < 1) throw std::domain_error("oracle: n must be >= 1");
    check_budget(family, n, budget);
    Int est = estimate_pairs(family, n);
    if (est > Int(static_cast<unsigned long>(kOrbitStorageLimit)))
        throw budget_exceeded(clamp_u64(est), kOrbitStorageLimit);

    std::vector<PermPair> pairs;
    for_each_cycle_type_perm(n, family.p, [&](const Perm& alpha) {
        for_each_cycle_type_perm(n, family.q, [&](const Perm& phi) {
            PermPair pair{alpha, phi, n};
            if (is_transitive(pair)) pairs.push_back(pair);
        });
    });

    std::unordered_map<std::string, int> index;
    index.reserve(pairs.size() * 2);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        index.emplace(pair_key(pairs[i]), static_cast<int>(i));

    // adjacent transpositions generate S_n, so orbits of the generated
    // relation are exactly the simultaneous-conjugation orbits
    UnionFind uf(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (int t = 0; t + 1 < n; ++t) {
            Perm psi = Perm::identity(n);
            std::swap(psi.img[t], psi.img[t + 1]);
            PermPair moved{conjugate(psi, pairs[i].alpha), conjugate(psi, pairs[i].phi), n};
            auto it = index.find(pair_key(moved));
            if (it == index.end())
                throw internal_error("oracle: conjugated pair left the transitive set");
            uf.unite(static_cast<int>(i), it->second);
        }
    }
    return Int(static_cast<unsigned long>(uf.roots()));
}

Int conjugacy_count_burnside(const FamilySpec& family, int n, const Budget& budget) {
    if (n < 1) throw std::domain_error("oracle: n must be >= 1");
    check_budget(family, n, budget);

    Rat total = 0;
    for (const std::vector<int>& lambda : partitions_of(n)) {
        Int fix;
        if (lambda[0] == 1) {
            // identity: fixes every transitive pair
            fix = transitive_pair_count(family, n, budget);
        } else {
            Perm psi = perm_of_type(n, lambda);
            std::vector<Perm> alphas, phis;
            for_each_cycle_type_perm(n, family.p, [&](const Perm& a) {
                if (commutes(a, psi)) alphas.push_back(a);
            });
            if (!alphas.empty())
                for_each_cycle_type_perm(n, family.q, [&](const Perm& f) {
                    if (commutes(f, psi)) phis.push_back(f);
                });
            std::uint64_t cnt = 0;
            for (const Perm& a : alphas)
                for (const Perm& f : phis)
                    if (is_transitive({a, f, n})) ++cnt;
            fix = Int(static_cast<unsigned long>(cnt));
        }
        total += Rat(fix) / Rat(centralizer_order(lambda));
    }
    if (!is_integer(total))
        throw internal_error("oracle: Burnside average not an integer: " + total.get_str());
    return total.get_num();
}

Int conjugacy_count(const FamilySpec& family, int n, const Budget& budget) {
    check_budget(family, n, budget);
    Int est = estimate_pairs(family, n);
    if (est <= Int(static_cast<unsigned long>(kOrbitStorageLimit)))
        return conjugacy_count_orbits(family, n, budget);
    return conjugacy_count_burnside(family, n, budget);
}

} // namespace hmc::oracle
