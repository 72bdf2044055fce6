#include "lotto/designs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lotto/design_io.hpp"
#include "lotto/errors.hpp"

namespace lotto {

std::int64_t covering_number(int a) {
    if (a < 2) fail(ErrorCode::UnsupportedParameters, "covering_number requires a >= 2");
    const std::int64_t inner = (a - 1 + 1) / 2; // ceil((a-1)/2)
    return (static_cast<std::int64_t>(a) * inner + 2) / 3;
}

std::int64_t packing_number(int a) {
    if (a < 3) fail(ErrorCode::UnsupportedParameters, "packing_number requires a >= 3");
    const std::int64_t inner = (a - 1) / 2;
    std::int64_t p = static_cast<std::int64_t>(a) * inner / 3;
    if (a % 6 == 5) p -= 1;
    return p;
}

Half c_star(int a) {
    if (a < 2) fail(ErrorCode::UnsupportedParameters, "c_star requires a >= 2");
    const std::int64_t aa = a;
    if (a % 2 == 1) {
        const std::int64_t v = (aa * aa - aa + 5) / 6; // ceil((a^2-a)/6)
        return Half::whole(v);
    }
    const std::int64_t v = (2 * aa * aa - aa + 5) / 6; // ceil((2a^2-a)/6)
    return Half::halves(v);
}

TripleSystemWeight weight_of(const BlockSystem& triples) {
    if (triples.r != 3) fail(ErrorCode::ShapeError, "weight_of requires r=3");
    triples.validate();
    PairIndex idx(triples.blocks);
    TripleSystemWeight w;
    w.triple_count = static_cast<std::int64_t>(triples.blocks.size());
    for (int x = 0; x < triples.n; ++x)
        for (int y = x + 1; y < triples.n; ++y)
            if (!idx.covers(x, y)) ++w.uncovered_pair_count;
    w.weight = Half::halves(2 * w.triple_count + w.uncovered_pair_count);
    return w;
}

// ---------------------------------------------------------------------------
// Steiner triple systems: Bose for n == 3 (mod 6), Skolem for n == 1 (mod 6).

static BlockSystem sts_bose(int n) {
    const int t = (n - 3) / 6;
    const int q = 2 * t + 1;
    const int half = t + 1; // inverse of 2 mod q
    auto id = [&](int x, int lvl) { return x + lvl * q; };
    BlockSystem s;
    s.n = n;
    s.r = 3;
    for (int x = 0; x < q; ++x)
        s.blocks.push_back(make_block({id(x, 0), id(x, 1), id(x, 2)}));
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y) {
            const int m = static_cast<int>((static_cast<long long>(x + y) * half) % q);
            for (int lvl = 0; lvl < 3; ++lvl)
                s.blocks.push_back(make_block({id(x, lvl), id(y, lvl), id(m, (lvl + 1) % 3)}));
        }
    s.canonicalize();
    return s;
}

static BlockSystem sts_skolem(int n) {
    const int t = (n - 1) / 6;
    const int q = 2 * t;
    const int inf = n - 1;
    auto id = [&](int x, int lvl) { return x + lvl * q; };
    // half-idempotent commutative quasigroup on Z_q
    auto op = [&](int x, int y) {
        const int s = (x + y) % q;
        return (s % 2 == 0) ? s / 2 : t + (s - 1) / 2;
    };
    BlockSystem s;
    s.n = n;
    s.r = 3;
    for (int x = 0; x < t; ++x)
        s.blocks.push_back(make_block({id(x, 0), id(x, 1), id(x, 2)}));
    for (int x = 0; x < t; ++x)
        for (int lvl = 0; lvl < 3; ++lvl)
            s.blocks.push_back(make_block({inf, id(t + x, lvl), id(x, (lvl + 1) % 3)}));
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int lvl = 0; lvl < 3; ++lvl)
                s.blocks.push_back(make_block({id(x, lvl), id(y, lvl), id(op(x, y), (lvl + 1) % 3)}));
    s.canonicalize();
    return s;
}

bool is_steiner_triple_system(const BlockSystem& s) {
    if (s.r != 3) return false;
    if (static_cast<std::int64_t>(s.blocks.size()) !=
        static_cast<std::int64_t>(s.n) * (s.n - 1) / 6)
        return false;
    PairIndex idx(s.blocks);
    std::int64_t covered = 0;
    for (const auto& b : s.blocks) (void)b;
    // pairwise-once: count distinct covered pairs and compare against slots
    std::int64_t slots = 3 * static_cast<std::int64_t>(s.blocks.size());
    for (int x = 0; x < s.n; ++x)
        for (int y = x + 1; y < s.n; ++y)
            if (idx.covers(x, y)) ++covered;
    return covered == static_cast<std::int64_t>(s.n) * (s.n - 1) / 2 && covered == slots;
}

BlockSystem construct_sts(int n) {
    if (n < 3 || (n % 6 != 1 && n % 6 != 3))
        fail(ErrorCode::UnsupportedParameters,
             "Steiner triple systems need n == 1 or 3 (mod 6), got n=" + std::to_string(n));
    BlockSystem s = (n % 6 == 3) ? sts_bose(n) : sts_skolem(n);
    if (!is_steiner_triple_system(s))
        fail(ErrorCode::SearchExhausted, "internal: STS construction failed verification");
    return s;
}

// ---------------------------------------------------------------------------
// Steiner quadruple systems: Boolean base, bundled order 10, doubling.

bool is_steiner_quadruple_system(const BlockSystem& s) {
    if (s.r != 4) return false;
    const std::int64_t n = s.n;
    if (static_cast<std::int64_t>(s.blocks.size()) != n * (n - 1) * (n - 2) / 24) return false;
    TripleIndex idx(s.blocks);
    std::int64_t covered = 0;
    for (int x = 0; x < s.n; ++x)
        for (int y = x + 1; y < s.n; ++y)
            for (int z = y + 1; z < s.n; ++z)
                if (idx.covers(x, y, z)) ++covered;
    return covered == n * (n - 1) * (n - 2) / 6 &&
           covered == 4 * static_cast<std::int64_t>(s.blocks.size());
}

bool sqs_supported(int n) {
    if (n < 4) return false;
    int odd = n;
    int twos = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++twos;
    }
    if (odd == 1) return twos >= 2;
    if (odd == 5) return twos >= 1;
    return false;
}

static BlockSystem sqs_boolean(int n) {
    BlockSystem s;
    s.n = n;
    s.r = 4;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int d = a ^ b ^ c;
                if (d > c && d < n) s.blocks.push_back({a, b, c, d});
            }
    s.canonicalize();
    return s;
}

// round-robin one-factorization of K_m, m even: factor i pairs {m-1, i} and
// {i+j, i-j} (mod m-1)
static std::vector<std::vector<std::pair<int, int>>> one_factorization(int m) {
    std::vector<std::vector<std::pair<int, int>>> factors;
    for (int i = 0; i < m - 1; ++i) {
        std::vector<std::pair<int, int>> f;
        f.emplace_back(std::min(m - 1, i), std::max(m - 1, i));
        for (int j = 1; j <= m / 2 - 1; ++j) {
            int u = (i + j) % (m - 1);
            int v = ((i - j) % (m - 1) + (m - 1)) % (m - 1);
            f.emplace_back(std::min(u, v), std::max(u, v));
        }
        factors.push_back(std::move(f));
    }
    return factors;
}

static BlockSystem sqs_double(const BlockSystem& base) {
    const int m = base.n;
    BlockSystem s;
    s.n = 2 * m;
    s.r = 4;
    for (const auto& b : base.blocks) {
        s.blocks.push_back(b);
        s.blocks.push_back({b[0] + m, b[1] + m, b[2] + m, b[3] + m});
    }
    for (const auto& factor : one_factorization(m))
        for (const auto& [x, y] : factor)
            for (const auto& [u, v] : factor)
                s.blocks.push_back(make_block({x, y, u + m, v + m}));
    s.canonicalize();
    return s;
}

static BlockSystem sqs_bundled_10() {
    DesignFile d = read_design_file(data_dir() + "/sqs10.design");
    if (d.n != 10 || d.r != 4)
        fail(ErrorCode::InvalidIngredient, "sqs10.design has wrong shape");
    if (!is_steiner_quadruple_system(d.system))
        fail(ErrorCode::InvalidIngredient, "bundled order-10 quadruple system failed verification");
    return d.system;
}

BlockSystem construct_sqs(int n) {
    if (!sqs_supported(n))
        fail(ErrorCode::UnsupportedParameters,
             "quadruple system order " + std::to_string(n) + " not in the supported closure");
    BlockSystem s;
    int odd = n;
    while (odd % 2 == 0) odd /= 2;
    if (odd == 1) {
        s = sqs_boolean(n);
    } else if (n == 10) {
        s = sqs_bundled_10();
    } else {
        s = sqs_double(construct_sqs(n / 2));
    }
    if (!is_steiner_quadruple_system(s))
        fail(ErrorCode::SearchExhausted, "internal: SQS construction failed verification");
    return s;
}

// ---------------------------------------------------------------------------
// Exact cover of pair sets by triples (deterministic, lexicographic).

namespace {

struct PairCoverSearch {
    int a;
    std::vector<std::vector<char>> state; // 0 free, 1 covered, 2 excluded
    std::vector<Block> chosen;
    long long nodes = 0;
    long long node_limit = 200'000'000;

    explicit PairCoverSearch(int a_) : a(a_), state(a_, std::vector<char>(a_, 0)) {}

    void exclude(int x, int y) { state[x][y] = state[y][x] = 2; }

    bool first_free(int& fx, int& fy) const {
        for (int x = 0; x < a; ++x)
            for (int y = x + 1; y < a; ++y)
                if (state[x][y] == 0) {
                    fx = x;
                    fy = y;
                    return true;
                }
        return false;
    }

    bool run() {
        ++nodes;
        if (nodes > node_limit) return false;
        int x, y;
        if (!first_free(x, y)) return true;
        for (int z = 0; z < a; ++z) {
            if (z == x || z == y) continue;
            const int u = std::min(x, z), v = std::max(x, z);
            const int p = std::min(y, z), q = std::max(y, z);
            if (state[u][v] != 0 || state[p][q] != 0) continue;
            state[x][y] = state[y][x] = 1;
            state[u][v] = state[v][u] = 1;
            state[p][q] = state[q][p] = 1;
            chosen.push_back(make_block({x, y, z}));
            if (run()) return true;
            chosen.pop_back();
            state[x][y] = state[y][x] = 0;
            state[u][v] = state[v][u] = 0;
            state[p][q] = state[q][p] = 0;
        }
        return false;
    }
};

BlockSystem exact_pair_cover(int a, const std::vector<std::pair<int, int>>& leave) {
    PairCoverSearch search(a);
    for (auto [x, y] : leave) search.exclude(std::min(x, y), std::max(x, y));
    if (!search.run())
        fail(ErrorCode::SearchExhausted,
             "packing search exhausted for a=" + std::to_string(a));
    BlockSystem s;
    s.n = a;
    s.r = 3;
    s.blocks = search.chosen;
    s.canonicalize();
    return s;
}

// punctured triple system: drop one point of an STS, keeping blocks avoiding it
BlockSystem puncture_sts(int v, int point) {
    BlockSystem sts = construct_sts(v);
    BlockSystem out;
    out.n = v - 1;
    out.r = 3;
    for (const auto& b : sts.blocks)
        if (std::find(b.begin(), b.end(), point) == b.end()) out.blocks.push_back(b);
    // relabel so indices stay contiguous when an interior point is removed
    if (point != v - 1) {
        std::vector<int> perm(v);
        int next = 0;
        for (int i = 0; i < v; ++i) perm[i] = (i == point) ? -1 : next++;
        for (auto& b : out.blocks)
            for (auto& x : b) x = perm[x];
    }
    out.canonicalize();
    return out;
}

} // namespace

std::vector<std::pair<int, int>> leave_of(const BlockSystem& triples) {
    PairIndex idx(triples.blocks);
    std::vector<std::pair<int, int>> leave;
    for (int x = 0; x < triples.n; ++x)
        for (int y = x + 1; y < triples.n; ++y)
            if (!idx.covers(x, y)) leave.emplace_back(x, y);
    return leave;
}

bool is_covering(const BlockSystem& s) {
    if (s.r != 3) return false;
    return leave_of(s).empty();
}

bool is_optimal_covering(const BlockSystem& s) {
    return is_covering(s) &&
           static_cast<std::int64_t>(s.blocks.size()) == covering_number(s.n);
}

bool is_packing(const BlockSystem& s) {
    if (s.r != 3) return false;
    std::int64_t slots = 3 * static_cast<std::int64_t>(s.blocks.size());
    PairIndex idx(s.blocks);
    std::int64_t covered = 0;
    for (int x = 0; x < s.n; ++x)
        for (int y = x + 1; y < s.n; ++y)
            if (idx.covers(x, y)) ++covered;
    return covered == slots;
}

BlockSystem construct_max_packing(int a, int parallelism) {
    (void)parallelism; // accepted for interface stability; search is deterministic
    if (a < 3) fail(ErrorCode::UnsupportedParameters, "packing requires a >= 3");
    switch (a % 6) {
        case 1:
        case 3:
            return construct_sts(a);
        case 0:
        case 2:
            return puncture_sts(a + 1, a); // leave: perfect matching
        case 4:
            return construct_packing_with_leave(a, LeaveKind::K13PlusMatching);
        default: { // a == 5 (mod 6): leave is a 4-cycle
            std::vector<std::pair<int, int>> cyc{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
            return exact_pair_cover(a, cyc);
        }
    }
}

static std::vector<std::pair<int, int>> matching_from(int first, int a) {
    std::vector<std::pair<int, int>> m;
    for (int x = first; x + 1 < a; x += 2) m.emplace_back(x, x + 1);
    return m;
}

// map a constructed leave onto a requested one of the same shape
static BlockSystem align_leave(const BlockSystem& packing,
                               const std::vector<std::pair<int, int>>& have,
                               const std::vector<std::pair<int, int>>& want) {
    if (have.size() != want.size())
        fail(ErrorCode::PreconditionFailed, "target leave has wrong size");
    std::vector<int> perm(packing.n, -1);
    std::vector<char> used(packing.n, 0);
    for (std::size_t i = 0; i < have.size(); ++i) {
        perm[have[i].first] = want[i].first;
        perm[have[i].second] = want[i].second;
        used[want[i].first] = used[want[i].second] = 1;
    }
    int next = 0;
    for (int x = 0; x < packing.n; ++x) {
        if (perm[x] >= 0) continue;
        while (used[next]) ++next;
        perm[x] = next;
        used[next] = 1;
    }
    return relabel(packing, perm);
}

BlockSystem construct_packing_with_leave(int a, LeaveKind kind,
                                         const std::vector<std::pair<int, int>>* target_leave,
                                         int parallelism) {
    (void)parallelism;
    if (a < 3 || (kind != LeaveKind::Any && a % 2 != 0))
        fail(ErrorCode::UnsupportedParameters, "leave-constrained packings need even a");
    BlockSystem out;
    std::vector<std::pair<int, int>> leave;
    switch (kind) {
        case LeaveKind::PerfectMatching: {
            if (a % 12 != 0)
                fail(ErrorCode::UnsupportedParameters,
                     "perfect-matching leave needs a == 0 (mod 12)");
            leave = matching_from(0, a);
            out = exact_pair_cover(a, leave);
            break;
        }
        case LeaveKind::K13PlusMatching: {
            if (a % 6 != 4)
                fail(ErrorCode::UnsupportedParameters,
                     "K_{1,3}-plus-matching leave needs a == 4 (mod 6)");
            leave = {{0, 1}, {0, 2}, {0, 3}};
            for (auto p : matching_from(4, a)) leave.push_back(p);
            out = exact_pair_cover(a, leave);
            break;
        }
        case LeaveKind::NearOnePairShort: {
            if (a % 12 != 4)
                fail(ErrorCode::UnsupportedParameters,
                     "near-matching leave needs a == 4 (mod 12)");
            out = construct_packing_with_leave(a, LeaveKind::K13PlusMatching);
            out.blocks.push_back(make_block({0, 1, 2})); // closes two star edges
            out.canonicalize();
            leave = {{0, 3}};
            for (auto p : matching_from(4, a)) leave.push_back(p);
            break;
        }
        case LeaveKind::Any:
            out = construct_max_packing(a);
            leave = leave_of(out);
            break;
    }
    if (target_leave != nullptr) {
        auto actual = leave_of(out);
        out = align_leave(out, actual, *target_leave);
        actual = leave_of(out);
        std::vector<std::pair<int, int>> want = *target_leave;
        for (auto& p : want)
            if (p.first > p.second) std::swap(p.first, p.second);
        std::sort(want.begin(), want.end());
        if (actual != want)
            fail(ErrorCode::SearchExhausted, "leave alignment failed");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Optimal coverings.

bool optimal_covering_supported(int a) {
    if (a < 3) return false;
    if (a % 6 == 0) return a == 6 || a == 12;
    return true;
}

static BlockSystem bundled_covering_mod0(int a);

BlockSystem construct_optimal_covering(int a, int parallelism) {
    (void)parallelism;
    if (a < 3) fail(ErrorCode::UnsupportedParameters, "coverings require a >= 3");
    BlockSystem s;
    switch (a % 6) {
        case 1:
        case 3:
            s = construct_sts(a);
            break;
        case 5: {
            std::vector<std::pair<int, int>> cyc{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
            s = exact_pair_cover(a, cyc);
            s.blocks.push_back(make_block({0, 1, 2}));
            s.blocks.push_back(make_block({0, 2, 3}));
            s.canonicalize();
            break;
        }
        case 2:
        case 4: {
            // triple system on the first a-1 points plus a star at the last
            s = construct_sts(a - 1);
            s.n = a;
            const int p = a - 1;
            int x = 0;
            for (; x + 1 < a - 1; x += 2) s.blocks.push_back(make_block({x, x + 1, p}));
            if (x < a - 1) s.blocks.push_back(make_block({x, 0 == x ? 1 : 0, p}));
            s.canonicalize();
            break;
        }
        case 0:
            s = bundled_covering_mod0(a);
            break;
    }
    if (!is_covering(s) ||
        static_cast<std::int64_t>(s.blocks.size()) != covering_number(a))
        fail(ErrorCode::SearchExhausted, "covering construction failed verification");
    return s;
}

std::int64_t mu_value(int a) {
    if (a < 3) fail(ErrorCode::UnsupportedParameters, "mu requires a >= 3");
    if (a == 6) return 5;
    if (a == 7) return 6;
    return a - 2;
}

std::int64_t lambda_value(int a) {
    if (a < 6 || a % 6 != 0)
        fail(ErrorCode::UnsupportedParameters, "lambda is only defined for a == 0 (mod 6)");
    return a - 3;
}

// defined in ingredients.cpp (bundled covering families)
BlockSystem bundled_covering_family_member(int a, int index);

static BlockSystem bundled_covering_mod0(int a) {
    if (a != 6 && a != 12)
        fail(ErrorCode::UnsupportedParameters,
             "no optimal covering route for a=" + std::to_string(a));
    return bundled_covering_family_member(a, 0);
}

} // namespace lotto
