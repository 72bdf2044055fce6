#include "lotto/absystems.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lotto/design_io.hpp"

#include "lotto/designs.hpp"
#include "lotto/errors.hpp"

namespace lotto {

namespace {

ABInstance finish(int a, int b, std::vector<Block> blocks, std::int64_t expected_size,
                  const char* what) {
    ABInstance inst;
    inst.a = a;
    inst.b = b;
    inst.system.n = a + b;
    inst.system.r = 4;
    inst.system.blocks = std::move(blocks);
    inst.system.canonicalize();
    inst.system.validate();
    if (expected_size >= 0 &&
        static_cast<std::int64_t>(inst.system.blocks.size()) != expected_size)
        fail(ErrorCode::SearchExhausted,
             std::string(what) + ": block count " + std::to_string(inst.system.blocks.size()) +
                 " does not match the closed form " + std::to_string(expected_size));
    if (auto bad = verify_ab(inst))
        fail(ErrorCode::SearchExhausted,
             std::string(what) + ": uncovered triple " + block_to_string(*bad));
    return inst;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

// ceil((2a^2-a)/6)
std::int64_t two_cstar(int a) { return c_star(a).twice == 0 ? 0 : (Half(2) * c_star(a)).as_int(); }

bool packing_constructible(int a) {
    if (a < 3) return false;
    int m = a % 6;
    if (m == 0 || m == 1 || m == 2 || m == 3) return true;
    return a <= 17; // leave-constrained searches stay desk-scale
}

bool plus_chain_materializable(int a, int plus1, int plus2) {
    if (plus1 > 0 && !optimal_covering_supported(a)) return false;
    if (plus2 > 0 && !packing_constructible(a)) return false;
    return true;
}

} // namespace

std::optional<Block> verify_ab(const ABInstance& inst) {
    if (inst.system.n != inst.a + inst.b || inst.system.r != 4)
        fail(ErrorCode::ShapeError, "instance shape mismatch");
    inst.system.validate();
    TripleIndex idx(inst.system.blocks);
    const int n = inst.system.n;
    for (int x = 0; x < inst.a; ++x)
        for (int y = x + 1; y < inst.a; ++y)
            for (int z = y + 1; z < n; ++z)
                if (!idx.covers(x, y, z)) return Block{x, y, z};
    return std::nullopt;
}

LowerBound lower_bound_f(int a, int b) {
    if (a < 2 || b < 1)
        fail(ErrorCode::UnsupportedParameters, "lower_bound_f requires a >= 2, b >= 1");
    LowerBound lb;
    const Half w = static_cast<std::int64_t>(b) * c_star(a);
    lb.value = w.ceil_int();
    lb.provenance = {"Thm2.3"};
    if ((a % 6 == 0 || a % 6 == 2) && b % 2 == 1) {
        const std::int64_t v2 =
            (static_cast<std::int64_t>(b - 1) * c_star(a)).as_int() + covering_number(a);
        if (v2 >= lb.value) {
            lb.value = v2;
            lb.provenance = {"Thm2.5"};
        }
    }
    return lb;
}

// ---------------------------------------------------------------------------
// constructions

ABInstance construct_mu(int a, int b, const IngredientRecord* family) {
    if (a < 3) fail(ErrorCode::UnsupportedParameters, "mu route requires a >= 3");
    if (b < mu_value(a))
        fail(ErrorCode::PreconditionFailed,
             "mu route requires b >= " + std::to_string(mu_value(a)));
    const IngredientRecord* fam = family;
    if (fam == nullptr) fam = &bundled_covering_family(a);
    if (!fam->verified || !fam->facts.union_covers_all)
        fail(ErrorCode::InvalidIngredient, "covering family must be verified and cover all triples");
    const int count = static_cast<int>(fam->systems.size());
    if (b < count)
        fail(ErrorCode::PreconditionFailed,
             "family has " + std::to_string(count) + " members; need b >= that many");
    std::vector<Block> blocks;
    for (int i = 0; i < b; ++i) {
        const BlockSystem& cov = fam->systems[i % count];
        for (const auto& t : cov.blocks) {
            Block q = t;
            q.push_back(a + i);
            blocks.push_back(std::move(q));
        }
    }
    return finish(a, b, std::move(blocks), static_cast<std::int64_t>(b) * covering_number(a),
                  "mu construction");
}

ABInstance construct_lambda(int a, int b, const IngredientRecord* family) {
    if (a % 6 != 0 || a < 6)
        fail(ErrorCode::UnsupportedParameters, "lambda route requires a == 0 (mod 6)");
    if (b < 1 || b > lambda_value(a))
        fail(ErrorCode::PreconditionFailed,
             "lambda route requires 1 <= b <= " + std::to_string(lambda_value(a)));
    const IngredientRecord* fam = family;
    if (fam == nullptr) fam = &bundled_disjoint_coverings(a);
    if (!fam->verified || !fam->facts.pairwise_disjoint)
        fail(ErrorCode::InvalidIngredient, "need verified pairwise-disjoint optimal coverings");
    if (static_cast<int>(fam->systems.size()) < b)
        fail(ErrorCode::MissingIngredient, "family too small for requested b");
    std::vector<Block> blocks;
    std::set<Block> used;
    for (int i = 0; i < b; ++i)
        for (const auto& t : fam->systems[i].blocks) {
            Block q = t;
            q.push_back(a + i);
            blocks.push_back(std::move(q));
            used.insert(t);
        }
    // leftover triples of A covered by quadruples inside A, greedily
    std::vector<Block> leftovers;
    for (int x = 0; x < a; ++x)
        for (int y = x + 1; y < a; ++y)
            for (int z = y + 1; z < a; ++z)
                if (!used.count(Block{x, y, z})) leftovers.push_back({x, y, z});
    std::set<Block> open(leftovers.begin(), leftovers.end());
    for (const auto& t : leftovers) {
        if (!open.count(t)) continue;
        int best_x = -1;
        std::size_t best_gain = 0;
        for (int x = 0; x < a; ++x) {
            if (std::find(t.begin(), t.end(), x) != t.end()) continue;
            Block q = t;
            q.push_back(x);
            std::sort(q.begin(), q.end());
            std::size_t gain = 0;
            for (int i = 0; i < 4; ++i)
                for (int u = i + 1; u < 4; ++u)
                    for (int v = u + 1; v < 4; ++v)
                        if (open.count(Block{q[i], q[u], q[v]})) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_x = x;
            }
        }
        Block q = t;
        q.push_back(best_x);
        std::sort(q.begin(), q.end());
        for (int i = 0; i < 4; ++i)
            for (int u = i + 1; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v)
                    open.erase(Block{q[i], q[u], q[v]});
        blocks.push_back(std::move(q));
    }
    ABInstance inst = finish(a, b, std::move(blocks), -1, "lambda construction");
    if (static_cast<std::int64_t>(inst.system.blocks.size()) > binom(a, 3))
        fail(ErrorCode::SearchExhausted, "lambda construction exceeded its bound");
    return inst;
}

ABInstance extend_b_plus_1(const ABInstance& inst) {
    if (auto bad = verify_ab(inst))
        fail(ErrorCode::PreconditionFailed, "input instance invalid at " + block_to_string(*bad));
    BlockSystem cov = construct_optimal_covering(inst.a);
    std::vector<Block> blocks = inst.system.blocks;
    const int y = inst.a + inst.b;
    for (const auto& t : cov.blocks) {
        Block q = t;
        q.push_back(y);
        blocks.push_back(std::move(q));
    }
    return finish(inst.a, inst.b + 1, std::move(blocks),
                  static_cast<std::int64_t>(inst.system.blocks.size()) + covering_number(inst.a),
                  "+1 extension");
}

ABInstance extend_b_plus_2(const ABInstance& inst) {
    if (auto bad = verify_ab(inst))
        fail(ErrorCode::PreconditionFailed, "input instance invalid at " + block_to_string(*bad));
    BlockSystem packing = construct_max_packing(inst.a);
    const auto leave = leave_of(packing);
    std::vector<Block> blocks = inst.system.blocks;
    const int y1 = inst.a + inst.b, y2 = y1 + 1;
    for (const auto& t : packing.blocks)
        for (int y : {y1, y2}) {
            Block q = t;
            q.push_back(y);
            blocks.push_back(std::move(q));
        }
    for (const auto& [u, v] : leave) blocks.push_back(make_block({u, v, y1, y2}));
    return finish(inst.a, inst.b + 2, std::move(blocks),
                  static_cast<std::int64_t>(inst.system.blocks.size()) + two_cstar(inst.a),
                  "+2 extension");
}

ABInstance construct_doubling(int a) {
    if (a % 12 != 2 && a % 12 != 6)
        fail(ErrorCode::UnsupportedParameters, "doubling requires a == 2 or 6 (mod 12)");
    const int n = a / 2;
    BlockSystem sqs = construct_sqs(n + 1); // on points 0..n
    std::vector<Block> blocks;
    auto even_tuples = [] {
        std::vector<std::array<int, 4>> res;
        for (int m = 0; m < 16; ++m) {
            std::array<int, 4> t{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1};
            if ((t[0] + t[1] + t[2] + t[3]) % 2 == 0) res.push_back(t);
        }
        return res;
    }();
    for (const auto& q : sqs.blocks) {
        if (q.back() == n) {
            const int z[3] = {q[0], q[1], q[2]};
            for (const auto& t : even_tuples)
                for (int k = 0; k < 3; ++k)
                    blocks.push_back(make_block({z[0] + t[0] * n, z[1] + t[1] * n,
                                                 z[2] + t[2] * n, 2 * n + z[k] + t[3] * n}));
            static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (const auto& p : perms)
                blocks.push_back(make_block(
                    {z[p[0]], z[p[1]] + n, 2 * n + z[p[2]], 3 * n + z[p[2]]}));
        } else {
            const int z[4] = {q[0], q[1], q[2], q[3]};
            for (const auto& t : even_tuples) {
                // all four ways of sending one coordinate to the B side
                for (int drop = 3; drop >= 0; --drop) {
                    Block blk;
                    for (int k = 0; k < 4; ++k) {
                        const int val = z[k] + t[k] * n;
                        blk.push_back(k == drop ? 2 * n + val : val);
                    }
                    std::sort(blk.begin(), blk.end());
                    blocks.push_back(std::move(blk));
                }
            }
        }
    }
    for (int i = 0; i < n; ++i)
        blocks.push_back(make_block({i, i + n, 2 * n + i, 3 * n + i}));
    const std::int64_t aa = a;
    return finish(a, a, std::move(blocks), (2 * aa * aa * aa - aa * aa) / 12, "doubling");
}

ABInstance pair_completion(const BlockSystem& partial, int a, int b) {
    partial.validate();
    if (partial.n != a + b)
        fail(ErrorCode::ShapeError, "partial system must live on a+b elements");
    TripleIndex idx(partial.blocks);
    for (int x = 0; x < a; ++x)
        for (int y = x + 1; y < a; ++y)
            for (int z = y + 1; z < a; ++z)
                if (!idx.covers(x, y, z))
                    fail(ErrorCode::PreconditionFailed,
                         "uncovered triple inside A: " + block_to_string(Block{x, y, z}));
    std::vector<Block> blocks = partial.blocks;
    std::int64_t added = 0, expected = 0;
    for (int x = 0; x < a; ++x)
        for (int y = x + 1; y < a; ++y) {
            std::vector<int> u;
            for (int z = a; z < a + b; ++z)
                if (!idx.covers(x, y, z)) u.push_back(z);
            expected += ceil_div(static_cast<std::int64_t>(u.size()), 2);
            std::size_t i = 0;
            for (; i + 1 < u.size(); i += 2) {
                blocks.push_back(make_block({x, y, u[i], u[i + 1]}));
                ++added;
            }
            if (i < u.size()) {
                int z = 0;
                while (z == x || z == y || z == u[i]) ++z;
                if (z >= a + b)
                    fail(ErrorCode::SearchExhausted, "no filler element available");
                blocks.push_back(make_block({x, y, u[i], z}));
                ++added;
            }
        }
    if (added != expected)
        fail(ErrorCode::SearchExhausted, "pair completion count mismatch");
    return finish(a, b, std::move(blocks),
                  static_cast<std::int64_t>(partial.blocks.size()) + expected,
                  "pair completion");
}

ABInstance construct_0_4_mod12(int a) {
    const bool mod0 = a % 12 == 0, mod4 = a % 12 == 4;
    if (!(mod4 || (mod0 && a > 12)))
        fail(ErrorCode::UnsupportedParameters,
             "route requires a == 4 (mod 12), or a == 0 (mod 12) with a > 12");
    const int n = a / 2;
    const IngredientRecord& lts = bundled_large_set_sts(n + 1); // on points 0..n
    std::vector<Block> blocks;
    for (int j = 0; j < n - 1; ++j) {
        const BlockSystem& sys = lts.systems[j];
        const int uj = 2 * n + j, vj = 2 * n + (n - 1) + j;
        for (const auto& t : sys.blocks) {
            if (t.back() == n) {
                const int z1 = t[0], z2 = t[1];
                blocks.push_back(make_block({z1, z1 + n, z2, uj}));
                blocks.push_back(make_block({z1, z1 + n, z2 + n, uj}));
                blocks.push_back(make_block({z2, z2 + n, z1, vj}));
                blocks.push_back(make_block({z2, z2 + n, z1 + n, vj}));
            } else {
                for (int m = 0; m < 8; ++m) {
                    const int i1 = m & 1, i2 = (m >> 1) & 1, i3 = (m >> 2) & 1;
                    const int i4 = (i1 + i2 + i3) % 2;
                    blocks.push_back(make_block({t[0] + i1 * n, t[1] + i2 * n, t[2] + i3 * n,
                                                 i4 == 0 ? uj : vj}));
                }
            }
        }
    }
    // leave-aligned triple system lifted by the last B element
    std::vector<std::pair<int, int>> target;
    for (int i = 0; i < (mod0 ? n : n - 1); ++i) target.emplace_back(i, i + n);
    BlockSystem packed = construct_packing_with_leave(
        a, mod0 ? LeaveKind::PerfectMatching : LeaveKind::NearOnePairShort, &target);
    const int w = 4 * n - 2;
    for (const auto& t : packed.blocks) {
        Block q = t;
        q.push_back(w);
        blocks.push_back(std::move(q));
    }
    BlockSystem partial;
    partial.n = 2 * a - 1;
    partial.r = 4;
    partial.blocks = std::move(blocks);
    partial.canonicalize();
    const std::int64_t aa = a;
    const std::int64_t expected =
        mod0 ? (4 * aa * aa * aa - 5 * aa * aa) / 24 : (4 * aa * aa * aa - 5 * aa * aa + 16) / 24;
    ABInstance inst = pair_completion(partial, a, a - 1);
    if (static_cast<std::int64_t>(inst.system.blocks.size()) != expected)
        fail(ErrorCode::SearchExhausted, "size does not match the closed form");
    return inst;
}

std::pair<ABInstance, Block> construct_partial_2_4_mod6(int a) {
    if ((a % 6 != 2 && a % 6 != 4) || a == 8 || a < 4)
        fail(ErrorCode::UnsupportedParameters,
             "route requires a == 2 or 4 (mod 6), a != 8");
    const int bb = a - 3;
    const IngredientRecord& fam = bundled_covering_family(a - 1);
    const int count = static_cast<int>(fam.systems.size());
    if (count > bb)
        fail(ErrorCode::MissingIngredient, "covering family too large for b = a-3");
    std::vector<Block> blocks;
    for (int i = 0; i < bb; ++i)
        for (const auto& t : fam.systems[i % count].blocks) {
            Block q = t;
            q.push_back(a + i);
            blocks.push_back(std::move(q));
        }
    // blocks through the last A-element, cyclic over indices 1..a-3
    auto wrap = [&](int m) { return (m - 1 + 10 * bb) % bb; }; // 1-indexed -> 0-indexed
    for (int i = 1; i <= bb; ++i) {
        const int y = a + i - 1;
        blocks.push_back(make_block({y, a - 1, a - 2, i - 1}));
        blocks.push_back(make_block({y, a - 1, a - 3, i - 1}));
        for (int j = 1; j <= (a - 4) / 2; ++j)
            blocks.push_back(make_block({y, a - 1, wrap(i + j), wrap(i - j)}));
    }
    ABInstance inst;
    inst.a = a;
    inst.b = bb;
    inst.system.n = a + bb;
    inst.system.r = 4;
    inst.system.blocks = std::move(blocks);
    inst.system.canonicalize();
    const std::int64_t aa = a;
    const std::int64_t expected = (aa - 3) * (aa * aa + 2) / 6;
    if (static_cast<std::int64_t>(inst.system.blocks.size()) != expected)
        fail(ErrorCode::SearchExhausted, "partial system size mismatch");
    // exactly one uncovered qualifying triple, and it is the last A-triple
    const Block missing{a - 3, a - 2, a - 1};
    TripleIndex idx(inst.system.blocks);
    for (int x = 0; x < a; ++x)
        for (int y = x + 1; y < a; ++y)
            for (int z = y + 1; z < inst.system.n; ++z)
                if (!idx.covers(x, y, z) && Block{x, y, z} != missing)
                    fail(ErrorCode::SearchExhausted,
                         "unexpected uncovered triple " + block_to_string(Block{x, y, z}));
    if (idx.covers(missing[0], missing[1], missing[2]))
        fail(ErrorCode::SearchExhausted, "expected one uncovered triple");
    return {std::move(inst), missing};
}

ABInstance construct_2_4_mod6(int a, int j) {
    if (j < 1) fail(ErrorCode::UnsupportedParameters, "j >= 1 required");
    auto [partial, missing] = construct_partial_2_4_mod6(a);
    BlockSystem packing = construct_max_packing(a);
    // permute labels so one packing triple equals the missing one
    const Block& src = packing.blocks.front();
    std::vector<int> perm(a, -1);
    std::vector<char> used(a, 0);
    for (int k = 0; k < 3; ++k) {
        perm[src[k]] = missing[k];
        used[missing[k]] = 1;
    }
    int next = 0;
    for (int x = 0; x < a; ++x) {
        if (perm[x] >= 0) continue;
        while (used[next]) ++next;
        perm[x] = next;
        used[next] = 1;
    }
    packing = relabel(packing, perm);
    const auto leave = leave_of(packing);
    std::vector<Block> blocks = partial.system.blocks;
    const int b = a - 3 + 2 * j;
    for (int k = 0; k < 2 * j; ++k) {
        const int y = a + (a - 3) + k;
        for (const auto& t : packing.blocks) {
            Block q = t;
            q.push_back(y);
            blocks.push_back(std::move(q));
        }
    }
    for (int k = 0; k < j; ++k) {
        const int y1 = a + (a - 3) + 2 * k, y2 = y1 + 1;
        for (const auto& [u, v] : leave) blocks.push_back(make_block({u, v, y1, y2}));
    }
    const std::int64_t aa = a;
    const std::int64_t expected = (aa - 3) * (aa * aa + 2) / 6 + j * two_cstar(a);
    return finish(a, b, std::move(blocks), expected, "a-3+2j construction");
}

ABInstance construct_cyclic(int a) {
    if (a < 3) fail(ErrorCode::UnsupportedParameters, "cyclic route requires a >= 3");
    std::vector<Block> blocks;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) {
            for (int k = j + 1; k < a; ++k)
                blocks.push_back(make_block({i, j, k, a + (i + j + k) % a}));
            blocks.push_back(make_block({i, j, a + (2 * i + j) % a, a + (i + 2 * j) % a}));
        }
    return finish(a, a, std::move(blocks), binom(a + 1, 3), "cyclic construction");
}

ABInstance construct_6t(int a, int j, const IngredientRecord* family) {
    if (a % 6 != 0 || a < 12)
        fail(ErrorCode::UnsupportedParameters, "route requires a == 0 (mod 6), a >= 12");
    if (j < 1) fail(ErrorCode::UnsupportedParameters, "j >= 1 required");
    if (family == nullptr && a != 12)
        fail(ErrorCode::MissingIngredient,
             "no bundled covering family with aligned leave for a=" + std::to_string(a));
    const IngredientRecord& covs =
        family != nullptr ? *family : bundled_disjoint_coverings(12);
    const IngredientRecord& sts = bundled_aligned_sts13();
    if (static_cast<int>(covs.systems.size()) != a - 3)
        fail(ErrorCode::InvalidIngredient, "need a-3 coverings");
    // union must miss exactly the aligned triples {3i,3i+1,3i+2}
    std::set<Block> aligned;
    for (int i = 0; i < a / 3; ++i) aligned.insert({3 * i, 3 * i + 1, 3 * i + 2});
    std::set<Block> missing(covs.facts.missing_triples.begin(),
                            covs.facts.missing_triples.end());
    if (missing != aligned)
        fail(ErrorCode::InvalidIngredient, "family union must miss exactly the aligned triples");
    const BlockSystem& s = sts.systems.front(); // on points 0..a, extra point = a
    if (s.n != a + 1) fail(ErrorCode::InvalidIngredient, "triple system must be on a+1 points");
    TripleIndex sidx(s.blocks);
    for (const auto& t : aligned)
        if (!sidx.covers(t[0], t[1], t[2]))
            fail(ErrorCode::InvalidIngredient, "triple system must contain the aligned triples");
    std::vector<Block> s_avoid, s_through;
    for (const auto& t : s.blocks) {
        if (t.back() == a)
            s_through.push_back({t[0], t[1]});
        else
            s_avoid.push_back(t);
    }
    std::vector<Block> blocks;
    for (int i = 0; i < a - 3; ++i)
        for (const auto& t : covs.systems[i].blocks) {
            Block q = t;
            q.push_back(a + i);
            blocks.push_back(std::move(q));
        }
    for (int k = 0; k < 2 * j; ++k) {
        const int y = a + (a - 3) + k;
        for (const auto& t : s_avoid) {
            Block q = t;
            q.push_back(y);
            blocks.push_back(std::move(q));
        }
    }
    for (int k = 0; k < j; ++k) {
        const int y1 = a + (a - 3) + 2 * k, y2 = y1 + 1;
        for (const auto& p : s_through) blocks.push_back(make_block({p[0], p[1], y1, y2}));
    }
    const std::int64_t aa = a;
    const std::int64_t expected = (aa - 3) * aa * aa / 6 + j * (2 * aa * aa - aa) / 6;
    return finish(a, a - 3 + 2 * j, std::move(blocks), expected, "aligned-covering construction");
}

ABInstance construct_large_b(int a) {
    if (a < 2 || a % 2 != 0)
        fail(ErrorCode::UnsupportedParameters, "route requires even a");
    if (a == 2) return construct_pairs(2, 2);
    if (a == 6) return extend_b_plus_2(extend_b_plus_2(construct_doubling(6)));
    if (a % 6 == 4)
        fail(ErrorCode::MissingIngredient,
             "no covering-family route for a == 4 (mod 6); a-1 maximum packings cannot "
             "contain every triple");
    const IngredientRecord& lts = bundled_large_set_sts(a + 1);
    std::vector<Block> blocks;
    const int x = a; // punctured point
    std::map<std::pair<int, int>, int> uncovered_in; // pair -> #punctured systems missing it
    for (int i = 0; i < a - 1; ++i) {
        const int y1 = a + 2 * i, y2 = y1 + 1;
        for (const auto& t : lts.systems[i].blocks) {
            if (t.back() == x) {
                blocks.push_back(make_block({t[0], t[1], y1, y2}));
                uncovered_in[{t[0], t[1]}] += 1;
            } else {
                for (int y : {y1, y2}) {
                    Block q = t;
                    q.push_back(y);
                    blocks.push_back(std::move(q));
                }
            }
        }
    }
    // each pair's uncovered y-set has size 2 * (#systems missing it): even, so
    // the per-system pair blocks complete coverage with no odd fillers
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) {
            auto it = uncovered_in.find({u, v});
            const int c = it == uncovered_in.end() ? 0 : it->second;
            if ((2 * c) % 2 != 0 || c != 1)
                fail(ErrorCode::SearchExhausted,
                     "pair gap multiplicity is not the large-set value");
        }
    const std::int64_t aa = a;
    return finish(a, 2 * a - 2, std::move(blocks), (aa - 1) * ((2 * aa * aa - aa + 5) / 6),
                  "punctured-family construction");
}

ABInstance construct_pairs(int a, int b) {
    if (a > 2 || a < 0 || b < 1)
        fail(ErrorCode::UnsupportedParameters, "pair filling applies to a <= 2");
    BlockSystem empty;
    empty.n = a + b;
    empty.r = 4;
    return pair_completion(empty, a, b);
}

// ---------------------------------------------------------------------------
// bounds and dispatch

std::optional<std::pair<std::int64_t, std::string>> theorem_value(int a, int b) {
    if (a < 2 || b < 1) return std::nullopt;
    const std::int64_t aa = a, bb = b;
    if (a % 2 == 1 && a >= 3 && b >= a - 2) {
        const std::int64_t per = ceil_div(aa * aa - aa, 6);
        if (a == 7 && b == 5)
            return std::make_pair(bb * per, std::string("Thm5.2table"));
        return std::make_pair(bb * per, std::string("Thm4.1"));
    }
    if ((a % 12 == 2 || a % 12 == 6) && b >= a) {
        const std::int64_t unit = (2 * aa * aa - aa) / 6; // integral here
        if (b % 2 == 0) return std::make_pair(bb * unit / 2, std::string("Thm4.2"));
        return std::make_pair((bb - 1) * unit / 2 + covering_number(a), std::string("Thm4.2"));
    }
    if (a % 2 == 0 && b >= 2 * a - 2) {
        const std::int64_t unit = ceil_div(2 * aa * aa - aa, 6);
        if (b % 2 == 0) return std::make_pair(bb / 2 * unit, std::string("Thm4.3"));
        return std::make_pair((bb - 1) / 2 * unit + covering_number(a), std::string("Thm4.3"));
    }
    return std::nullopt;
}

namespace {

void push_plan(std::vector<UpperPlan>& plans, int a, int b, UpperPlan base,
               std::int64_t base_size, bool base_mat) {
    const int delta = b - base.base_b;
    if (delta < 0) return;
    base.plus2 = delta / 2;
    base.plus1 = delta % 2;
    base.size = base_size + base.plus1 * covering_number(a) +
                static_cast<std::int64_t>(base.plus2) * two_cstar(a);
    base.materializable =
        base_mat && plus_chain_materializable(a, base.plus1, base.plus2);
    if (base.plus2 > 0) base.provenance.push_back("Prop3.6");
    if (base.plus1 > 0) base.provenance.push_back("Prop3.5");
    plans.push_back(std::move(base));
}

} // namespace

std::vector<UpperPlan> upper_plans(int a, int b) {
    std::vector<UpperPlan> plans;
    if (b < 1) return plans;
    if (a <= 2) {
        if (a == 2 && a + b < 4) return plans; // no quadruple fits on 3 points
        UpperPlan p;
        p.base = "pairs";
        p.base_b = b;
        p.provenance = {"Lemma3.8"};
        p.size = a < 2 ? 0 : ceil_div(b, 2);
        p.materializable = true;
        plans.push_back(p);
        return plans;
    }
    const std::int64_t aa = a;
    // mu: b0 >= mu(a)
    for (int b0 = static_cast<int>(mu_value(a)); b0 <= b; ++b0) {
        UpperPlan p;
        p.base = "mu";
        p.base_b = b0;
        p.provenance = {"Prop3.3"};
        push_plan(plans, a, b, p, static_cast<std::int64_t>(b0) * covering_number(a),
                  have_bundled_covering_family(a));
    }
    // lambda (base size is independent of b0; two bases cover both parities)
    if (a % 6 == 0) {
        const int lam = static_cast<int>(lambda_value(a));
        for (int b0 = std::min(b, lam); b0 >= 1 && b0 >= std::min(b, lam) - 1; --b0) {
            UpperPlan p;
            p.base = "lambda";
            p.base_b = b0;
            p.provenance = {"Prop3.4"};
            push_plan(plans, a, b, p, binom(a, 3), have_bundled_disjoint_coverings(a));
        }
    }
    // doubling
    if ((a % 12 == 2 || a % 12 == 6) && a <= b) {
        UpperPlan p;
        p.base = "doubling";
        p.base_b = a;
        p.provenance = {"Prop3.7"};
        push_plan(plans, a, b, p, (2 * aa * aa * aa - aa * aa) / 12, sqs_supported(a / 2 + 1));
    }
    // cyclic
    if (a <= b) {
        UpperPlan p;
        p.base = "cyclic";
        p.base_b = a;
        p.provenance = {"Prop3.13"};
        push_plan(plans, a, b, p, binom(a + 1, 3), true);
    }
    // a-1 route
    if (((a % 12 == 0 && a > 12) || a % 12 == 4) && a - 1 <= b) {
        UpperPlan p;
        p.base = "mod12";
        p.base_b = a - 1;
        p.provenance = {"Prop3.10"};
        const std::int64_t size = a % 12 == 0 ? (4 * aa * aa * aa - 5 * aa * aa) / 24
                                              : (4 * aa * aa * aa - 5 * aa * aa + 16) / 24;
        push_plan(plans, a, b, p, size,
                  have_bundled_large_set(a / 2 + 1) && packing_constructible(a) && a <= 24);
    }
    // a-3+2j routes
    if ((a % 6 == 2 || a % 6 == 4) && a != 8) {
        for (int j = 1; a - 3 + 2 * j <= b; ++j) {
            UpperPlan p;
            p.base = "mod6";
            p.base_b = a - 3 + 2 * j;
            p.j = j;
            p.provenance = {"Prop3.12"};
            push_plan(plans, a, b, p, (aa - 3) * (aa * aa + 2) / 6 + j * two_cstar(a),
                      have_bundled_covering_family(a - 1) && packing_constructible(a));
        }
    }
    if (a % 6 == 0 && a >= 12) {
        for (int j = 1; a - 3 + 2 * j <= b; ++j) {
            UpperPlan p;
            p.base = "6t";
            p.base_b = a - 3 + 2 * j;
            p.j = j;
            p.provenance = {"Prop3.14"};
            push_plan(plans, a, b, p, (aa - 3) * aa * aa / 6 + j * (2 * aa * aa - aa) / 6,
                      a == 12 && have_bundled_disjoint_coverings(12) &&
                          file_exists(data_dir() + "/sts13_aligned.design"));
        }
    }
    // b = 2a-2 route
    if (a % 2 == 0 && (a % 6 == 0 || a % 6 == 2) && 2 * a - 2 <= b) {
        UpperPlan p;
        p.base = "large-b";
        p.base_b = 2 * a - 2;
        p.provenance = {"Prop3.15"};
        const bool mat = a == 6 ? sqs_supported(4) : have_bundled_large_set(a + 1);
        push_plan(plans, a, b, p, (aa - 1) * ceil_div(2 * aa * aa - aa, 6), mat);
    }
    std::sort(plans.begin(), plans.end(), [](const UpperPlan& x, const UpperPlan& y) {
        if (x.size != y.size) return x.size < y.size;
        if (x.materializable != y.materializable) return x.materializable;
        if (x.steps() != y.steps()) return x.steps() < y.steps();
        return x.base < y.base;
    });
    return plans;
}

std::string format_provenance(const std::vector<std::string>& prov) {
    std::string s;
    for (std::size_t i = 0; i < prov.size(); ++i) {
        if (i) s += "+";
        s += prov[i];
    }
    return s;
}

ABBoundReport exact_f(int a, int b) {
    ABBoundReport rep;
    rep.a = a;
    rep.b = b;
    if (a <= 1) {
        rep.lower = 0;
        rep.upper = 0;
        rep.exact = true;
        rep.lower_provenance = {"empty"};
        rep.upper_provenance = {"empty"};
        return rep;
    }
    if (b < 1) {
        rep.lower = 0;
        return rep; // covering A alone is outside this dispatcher
    }
    LowerBound lb = lower_bound_f(a, b);
    rep.lower = lb.value;
    rep.lower_provenance = lb.provenance;
    auto plans = upper_plans(a, b);
    auto thm = theorem_value(a, b);
    if (thm) {
        rep.upper = thm->first;
        rep.upper_provenance = {thm->second};
        rep.exact = true;
        if (rep.lower < thm->first) {
            rep.lower = thm->first;
            rep.lower_provenance = {thm->second};
        }
        for (const auto& p : plans)
            if (p.materializable && p.size == thm->first) {
                rep.recipe = p;
                rep.upper_provenance = p.provenance;
                break;
            }
        return rep;
    }
    if (!plans.empty()) {
        rep.upper = plans.front().size;
        rep.upper_provenance = plans.front().provenance;
        rep.recipe = plans.front();
        for (const auto& p : plans) {
            if (p.size != plans.front().size) break;
            if (p.materializable) {
                rep.recipe = p;
                rep.upper_provenance = p.provenance;
                break;
            }
        }
        rep.exact = (rep.upper && *rep.upper == rep.lower);
    }
    return rep;
}

ABInstance construct_by_plan(int a, int b, const UpperPlan& plan) {
    ABInstance inst;
    if (plan.base == "mu")
        inst = construct_mu(a, plan.base_b);
    else if (plan.base == "lambda")
        inst = construct_lambda(a, plan.base_b);
    else if (plan.base == "doubling")
        inst = construct_doubling(a);
    else if (plan.base == "cyclic")
        inst = construct_cyclic(a);
    else if (plan.base == "mod12")
        inst = construct_0_4_mod12(a);
    else if (plan.base == "mod6")
        inst = construct_2_4_mod6(a, plan.j);
    else if (plan.base == "6t")
        inst = construct_6t(a, plan.j);
    else if (plan.base == "large-b")
        inst = construct_large_b(a);
    else if (plan.base == "pairs")
        inst = construct_pairs(a, plan.base_b);
    else
        fail(ErrorCode::UnsupportedParameters, "unknown recipe " + plan.base);
    for (int k = 0; k < plan.plus2; ++k) inst = extend_b_plus_2(inst);
    for (int k = 0; k < plan.plus1; ++k) inst = extend_b_plus_1(inst);
    if (inst.b != b)
        fail(ErrorCode::SearchExhausted, "plan does not reach the requested b");
    if (static_cast<std::int64_t>(inst.system.blocks.size()) != plan.size)
        fail(ErrorCode::SearchExhausted, "plan size mismatch");
    return inst;
}

std::optional<UpperPlan> best_materializable_plan(int a, int b) {
    for (const auto& p : upper_plans(a, b))
        if (p.materializable) return p;
    return std::nullopt;
}

ABInstance construct_auto(int a, int b) {
    auto plan = best_materializable_plan(a, b);
    if (!plan)
        fail(ErrorCode::UnsupportedParameters,
             "no materializable recipe for (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return construct_by_plan(a, b, *plan);
}

} // namespace lotto
