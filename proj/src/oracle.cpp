#include "lotto/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <thread>

#include "lotto/errors.hpp"

namespace lotto {

namespace {

std::vector<Block> subsets_of_size(int n, int k) {
    std::vector<Block> out;
    Block cur(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x < n; ++x) {
            cur[depth] = x;
            self(self, x + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

void index_instance(CoverInstance& inst) {
    inst.covered_by.assign(inst.targets.size(), {});
    inst.max_cover = 1;
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
        for (int t : inst.covers[c]) inst.covered_by[t].push_back(static_cast<int>(c));
        inst.max_cover = std::max(inst.max_cover, static_cast<int>(inst.covers[c].size()));
    }
    for (std::size_t t = 0; t < inst.targets.size(); ++t)
        if (inst.covered_by[t].empty())
            fail(ErrorCode::UnsupportedParameters,
                 "infeasible cover instance: target " + block_to_string(inst.targets[t]) +
                     " is uncoverable");
}

bool subset_of(const Block& small, const Block& big) {
    std::size_t i = 0, j = 0;
    while (i < small.size() && j < big.size()) {
        if (small[i] == big[j]) {
            ++i;
            ++j;
        } else if (small[i] > big[j]) {
            ++j;
        } else {
            return false;
        }
    }
    return i == small.size();
}

int intersection_size(const Block& x, const Block& y) {
    std::size_t i = 0, j = 0;
    int cnt = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            ++cnt;
            ++i;
            ++j;
        } else if (x[i] < y[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return cnt;
}

struct Searcher {
    const CoverInstance& inst;
    long long node_limit;
    std::chrono::steady_clock::time_point deadline;
    std::vector<int> cover_count; // per target
    std::vector<int> chosen;
    int uncovered;
    std::vector<int> best;        // candidate ids of the incumbent
    long long best_size;          // strict bound: explore sizes < best_size,
                                  // plus == when no witness recorded yet
    bool have_witness = false;
    long long nodes = 0;
    bool timed_out = false;

    Searcher(const CoverInstance& i, long long limit,
             std::chrono::steady_clock::time_point dl, long long ub)
        : inst(i), node_limit(limit), deadline(dl),
          cover_count(i.targets.size(), 0),
          uncovered(static_cast<int>(i.targets.size())), best_size(ub) {}

    int first_uncovered() const {
        for (std::size_t t = 0; t < cover_count.size(); ++t)
            if (cover_count[t] == 0) return static_cast<int>(t);
        return -1;
    }

    void take(int c) {
        for (int t : inst.covers[c])
            if (cover_count[t]++ == 0) --uncovered;
        chosen.push_back(c);
    }

    void drop(int c) {
        for (int t : inst.covers[c])
            if (--cover_count[t] == 0) ++uncovered;
        chosen.pop_back();
    }

    std::int64_t bound() const {
        return (uncovered + inst.max_cover - 1) / inst.max_cover;
    }

    void run() {
        ++nodes;
        if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
            timed_out = true;
        if (nodes > node_limit) timed_out = true;
        if (timed_out) return;
        if (uncovered == 0) {
            if (static_cast<long long>(chosen.size()) < best_size ||
                (!have_witness && static_cast<long long>(chosen.size()) <= best_size)) {
                best_size = static_cast<long long>(chosen.size());
                best = chosen;
                have_witness = true;
            }
            return;
        }
        const long long projected = static_cast<long long>(chosen.size()) + bound();
        if (projected > best_size || (have_witness && projected == best_size)) return;
        const int t = first_uncovered();
        for (int c : inst.covered_by[t]) {
            take(c);
            run();
            drop(c);
            if (timed_out) return;
        }
    }
};

// deterministic greedy cover: most new targets first, ties to the smaller id
std::vector<int> greedy_cover(const CoverInstance& inst) {
    std::vector<int> count(inst.targets.size(), 0);
    std::size_t uncovered = inst.targets.size();
    std::vector<int> picked;
    while (uncovered > 0) {
        int best_c = -1;
        int best_gain = 0;
        for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
            int gain = 0;
            for (int t : inst.covers[c])
                if (count[t] == 0) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_c = static_cast<int>(c);
            }
        }
        if (best_c < 0) break;
        for (int t : inst.covers[best_c])
            if (count[t]++ == 0) --uncovered;
        picked.push_back(best_c);
    }
    return picked;
}

} // namespace

CoverInstance build_f_instance(int a, int b) {
    CoverInstance inst;
    inst.n = a + b;
    const int n = a + b;
    for (int x = 0; x < a; ++x)
        for (int y = x + 1; y < a; ++y)
            for (int z = y + 1; z < n; ++z) inst.targets.push_back({x, y, z});
    for (const auto& q : subsets_of_size(n, 4)) {
        int in_a = 0;
        for (int x : q)
            if (x < a) ++in_a;
        if (in_a >= 2) inst.candidates.push_back(q);
    }
    inst.covers.resize(inst.candidates.size());
    // targets are lexicographic triples; match by subset test
    for (std::size_t c = 0; c < inst.candidates.size(); ++c)
        for (std::size_t t = 0; t < inst.targets.size(); ++t)
            if (subset_of(inst.targets[t], inst.candidates[c]))
                inst.covers[c].push_back(static_cast<int>(t));
    index_instance(inst);
    return inst;
}

CoverInstance build_lottery_instance(int n) {
    CoverInstance inst;
    inst.n = n;
    inst.targets = subsets_of_size(n, 4);
    inst.candidates = inst.targets;
    inst.covers.resize(inst.candidates.size());
    for (std::size_t c = 0; c < inst.candidates.size(); ++c)
        for (std::size_t t = 0; t < inst.targets.size(); ++t)
            if (intersection_size(inst.candidates[c], inst.targets[t]) >= 3)
                inst.covers[c].push_back(static_cast<int>(t));
    index_instance(inst);
    return inst;
}

CoverInstance build_pair_cover_instance(int a) {
    CoverInstance inst;
    inst.n = a;
    inst.targets = subsets_of_size(a, 2);
    inst.candidates = subsets_of_size(a, 3);
    inst.covers.resize(inst.candidates.size());
    for (std::size_t c = 0; c < inst.candidates.size(); ++c)
        for (std::size_t t = 0; t < inst.targets.size(); ++t)
            if (subset_of(inst.targets[t], inst.candidates[c]))
                inst.covers[c].push_back(static_cast<int>(t));
    index_instance(inst);
    return inst;
}

OracleResult exact_min_cover(const CoverInstance& inst, const OracleBudget& budget) {
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.millis);
    long long seed_size = static_cast<long long>(inst.targets.size()) + 1;
    std::vector<int> seed_ids;
    if (budget.seed_witness) {
        for (const auto& blk : *budget.seed_witness) {
            auto it = std::lower_bound(inst.candidates.begin(), inst.candidates.end(), blk);
            if (it == inst.candidates.end() || *it != blk)
                fail(ErrorCode::PreconditionFailed, "seed witness block is not a candidate");
            seed_ids.push_back(static_cast<int>(it - inst.candidates.begin()));
        }
        seed_size = static_cast<long long>(seed_ids.size());
    }

    OracleResult res;
    if (inst.targets.empty()) {
        res.optimum = 0;
        res.bound_used = "empty";
        return res;
    }

    const std::vector<int> greedy = greedy_cover(inst);
    std::vector<int> incumbent_ids = seed_ids;
    long long incumbent = seed_size;
    if (static_cast<long long>(greedy.size()) < incumbent) {
        incumbent = static_cast<long long>(greedy.size());
        incumbent_ids = greedy;
    }

    // Root split on the candidates covering the first target. Branches are
    // independent (no shared incumbent) so the reduced result cannot depend
    // on the thread count.
    const auto& roots = inst.covered_by[0];
    struct BranchOut {
        long long size = -1;
        std::vector<int> ids;
        long long nodes = 0;
        bool timed_out = false;
    };
    const int threads = std::max(1, budget.threads);
    std::vector<BranchOut> outs(roots.size());
    std::atomic<std::size_t> next{0};
    const long long per_branch_nodes =
        std::max<long long>(1, budget.node_limit / std::max<std::size_t>(1, roots.size()));
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= roots.size()) return;
            Searcher s(inst, per_branch_nodes, deadline, seed_size);
            s.take(roots[i]);
            s.run();
            outs[i].nodes = s.nodes;
            outs[i].timed_out = s.timed_out;
            if (s.have_witness) {
                outs[i].size = s.best_size;
                outs[i].ids = s.best;
            }
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    bool timed_out = false;
    long long best = -1;
    std::vector<int> best_ids;
    for (const auto& o : outs) {
        timed_out = timed_out || o.timed_out;
        res.nodes += o.nodes;
        if (o.size >= 0 && (best < 0 || o.size < best)) {
            best = o.size;
            best_ids = o.ids;
        }
    }
    if (best < 0 && budget.seed_witness) {
        best = seed_size;
        best_ids = seed_ids;
    }
    res.bound_used = "ceil(uncovered/max-cover)";
    const std::int64_t root_lb =
        (static_cast<std::int64_t>(inst.targets.size()) + inst.max_cover - 1) / inst.max_cover;
    if (timed_out) {
        res.status = OracleStatus::TimeoutWithBounds;
        res.lower = root_lb;
        res.upper = best >= 0 ? best : static_cast<long long>(inst.targets.size());
        res.optimum = res.upper;
    } else {
        res.status = OracleStatus::Optimal;
        if (best < 0) fail(ErrorCode::SearchExhausted, "no cover found on a feasible instance");
        res.optimum = best;
        res.lower = res.upper = best;
    }
    for (int id : best_ids) res.witness.push_back(inst.candidates[id]);
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

OracleResult exact_f_oracle(int a, int b, const OracleBudget& budget) {
    return exact_min_cover(build_f_instance(a, b), budget);
}

OracleResult exact_L_oracle(int n, const OracleBudget& budget) {
    return exact_min_cover(build_lottery_instance(n), budget);
}

} // namespace lotto
