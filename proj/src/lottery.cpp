#include "lotto/lottery.hpp"

#include <algorithm>
#include <unordered_set>

#include "lotto/designs.hpp"
#include "lotto/errors.hpp"

namespace lotto {

namespace {

std::uint64_t quad_key(int x, int y, int z, int w) {
    return (((static_cast<std::uint64_t>(x) * 2048 + y) * 2048 + z) * 2048 + w);
}

} // namespace

std::optional<Block> verify_lottery(const LotterySystem& sys) {
    sys.system.validate();
    const int n = sys.n;
    // mark every 4-subset meeting a block in >= 3 elements
    std::unordered_set<std::uint64_t> hit;
    hit.reserve(sys.system.blocks.size() * (4 * n));
    for (const auto& bl : sys.system.blocks) {
        hit.insert(quad_key(bl[0], bl[1], bl[2], bl[3]));
        for (int drop = 0; drop < 4; ++drop) {
            Block t;
            for (int i = 0; i < 4; ++i)
                if (i != drop) t.push_back(bl[i]);
            for (int e = 0; e < n; ++e) {
                if (std::find(bl.begin(), bl.end(), e) != bl.end()) continue;
                Block k = t;
                k.push_back(e);
                std::sort(k.begin(), k.end());
                hit.insert(quad_key(k[0], k[1], k[2], k[3]));
            }
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                for (int w = z + 1; w < n; ++w)
                    if (!hit.count(quad_key(x, y, z, w))) return Block{x, y, z, w};
    return std::nullopt;
}

namespace {

LotterySystem assemble_from(int a, int b, int c, const ABInstance& q1,
                            const ABInstance& q2, const ABInstance& q3) {
    const int n = a + b + c;
    LotterySystem sys;
    sys.n = n;
    sys.system.n = n;
    sys.system.r = 4;
    sys.partition = {a, b, c};
    auto add = [&](const ABInstance& q, auto&& map) {
        for (const auto& bl : q.system.blocks) {
            Block nb;
            for (int x : bl) nb.push_back(map(x));
            std::sort(nb.begin(), nb.end());
            sys.system.blocks.push_back(std::move(nb));
        }
    };
    add(q1, [&](int x) { return x; });                                // A->[0,a), B->[a,a+b)
    add(q2, [&](int x) { return a + x; });                            // A->[a,a+b), B->[a+b,n)
    add(q3, [&](int x) { return x < c ? a + b + x : x - c; });        // A->[a+b,n), B->[0,a)
    const std::size_t total =
        q1.system.blocks.size() + q2.system.blocks.size() + q3.system.blocks.size();
    sys.system.canonicalize();
    if (sys.system.blocks.size() != total)
        fail(ErrorCode::SearchExhausted, "assembled parts share a block");
    if (auto bad = verify_lottery(sys))
        fail(ErrorCode::SearchExhausted,
             "assembled system misses " + block_to_string(*bad));
    return sys;
}

} // namespace

LotterySystem assemble(int a, int b, int c) {
    return assemble_from(a, b, c, construct_auto(a, b), construct_auto(b, c),
                         construct_auto(c, a));
}

LotterySystem assemble(const PartitionPlan& plan) {
    const auto [a, b, c] = plan.parts;
    if (!plan.recipes[0] || !plan.recipes[1] || !plan.recipes[2])
        fail(ErrorCode::MissingIngredient, "plan lacks a recipe for some pair");
    return assemble_from(a, b, c, construct_by_plan(a, b, *plan.recipes[0]),
                         construct_by_plan(b, c, *plan.recipes[1]),
                         construct_by_plan(c, a, *plan.recipes[2]));
}

const std::vector<ResidueRule>& residue_rules() {
    static const std::vector<ResidueRule> rules = {
        {18, 1, 4, -12, 48, 176, 37, {1, 1, -1}},
        {18, 3, 4, -12, 0, 0, 3, {1, 1, 1}},
        {18, 5, 4, -12, 0, 16, 5, {3, 1, 1}},
        {18, 7, 4, -12, 0, 80, 7, {3, 3, 1}},
        {18, 9, 4, -12, 0, 0, 9, {3, 3, 3}},
        {18, 11, 4, -12, 48, -80, 11, {5, 3, 3}},
        {18, 13, 4, -12, 96, -16, 13, {5, 5, 3}},
        {18, 15, 4, -12, 48, 144, 15, {7, 5, 3}},
        {18, 17, 4, -12, 96, 112, 35, {7, 5, 5}},
        {36, 0, 4, -9, 48, 0, 72, {1, -1, 0}},
        {36, 2, 4, -9, -12, 28, 74, {1, 1, 0}},
        {36, 4, 4, -9, -12, 152, 76, {3, 1, 0}},
        {36, 6, 4, -10, 12, 72, 6, {3, 1, 2}},
        {36, 8, 4, -10, 4, 72, 8, {3, 3, 2}},
        {36, 10, 4, -9, 0, 140, 10, {3, 3, 4}},
        {36, 12, 4, -9, 36, 216, 12, {3, 5, 4}},
        {36, 14, 4, -9, 84, 196, 14, {5, 5, 4}},
        {36, 16, 4, -9, 36, 248, 16, {7, 5, 4}},
        {36, 18, 4, -10, 60, 0, 18, {7, 5, 6}},
        {36, 20, 4, -10, 4, 0, 20, {7, 7, 6}},
        {36, 22, 4, -10, 8, 88, 22, {9, 7, 6}},
        {36, 24, 4, -8, 0, -144, 60, {7, 9, 8}},
        {36, 26, 4, -8, -16, 104, 26, {9, 9, 8}},
        {36, 28, 4, -8, 16, -120, 28, {9, 9, 10}},
        {36, 30, 4, -8, 36, 72, 30, {9, 9, 12}},
        {36, 32, 4, -8, 68, 224, 32, {9, 11, 12}},
        {36, 34, 4, -8, 4, 504, 34, {9, 13, 12}},
    };
    return rules;
}

namespace {

const ResidueRule& rule_for(int n) {
    const int modulus = (n % 2 == 1) ? 18 : 36;
    const int residue = n % modulus;
    for (const auto& r : residue_rules())
        if (r.modulus == modulus && r.residue == residue) return r;
    fail(ErrorCode::UnsupportedParameters, "no residue rule for n=" + std::to_string(n));
}

std::string residue_name(const ResidueRule& r) {
    return "n==" + std::to_string(r.residue) + " (mod " + std::to_string(r.modulus) + ")";
}

} // namespace

std::optional<std::int64_t> residue_formula(int n) {
    const ResidueRule& r = rule_for(n);
    if (n < r.min_n) return std::nullopt;
    const std::int64_t nn = n;
    const std::int64_t num = r.c3 * nn * nn * nn + r.c2 * nn * nn + r.c1 * nn + r.c0;
    if (num % 216 != 0)
        fail(ErrorCode::SearchExhausted, "residue formula not integral at n=" + std::to_string(n));
    return num / 216;
}

std::array<int, 3> residue_partition(int n) {
    const ResidueRule& r = rule_for(n);
    const int k = (n - r.residue) / r.modulus;
    const int unit = r.modulus / 3;
    return {unit * k + r.part_offsets[0], unit * k + r.part_offsets[1],
            unit * k + r.part_offsets[2]};
}

PartitionPlan partition_search(int n, bool require_materializable) {
    if (n < 9)
        fail(ErrorCode::UnsupportedParameters, "partition search needs n >= 9 (parts >= 3)");
    PartitionPlan best;
    bool found = false;
    std::string skipped;
    for (int a = 3; a <= n - 6; ++a)
        for (int b = 3; b <= n - a - 3; ++b) {
            const int c = n - a - b;
            const std::array<std::pair<int, int>, 3> legs{
                std::make_pair(a, b), std::make_pair(b, c), std::make_pair(c, a)};
            PartitionPlan plan;
            plan.parts = {a, b, c};
            bool ok = true;
            bool mat = true;
            for (int i = 0; i < 3 && ok; ++i) {
                const auto [x, y] = legs[i];
                if (require_materializable) {
                    auto p = best_materializable_plan(x, y);
                    if (!p) {
                        ok = false;
                        break;
                    }
                    plan.recipes[i] = p;
                    plan.pair_values[i] = p->size;
                } else {
                    ABBoundReport rep = exact_f(x, y);
                    if (!rep.upper) {
                        ok = false;
                        break;
                    }
                    plan.pair_values[i] = *rep.upper;
                    if (rep.recipe && rep.recipe->materializable &&
                        rep.recipe->size == *rep.upper)
                        plan.recipes[i] = rep.recipe;
                    else
                        mat = false;
                }
            }
            if (!ok) {
                skipped += (skipped.empty() ? "" : "; ") + std::to_string(a) + "+" +
                           std::to_string(b) + "+" + std::to_string(c) +
                           ": no bound for some pair";
                continue;
            }
            plan.predicted = plan.pair_values[0] + plan.pair_values[1] + plan.pair_values[2];
            plan.materializable = require_materializable ? true : mat;
            if (!found || plan.predicted < best.predicted) {
                best = plan;
                found = true;
            }
        }
    if (!found)
        fail(ErrorCode::MissingIngredient, "no feasible partition for n=" + std::to_string(n));
    best.note = skipped.empty() ? "" : "skipped: " + skipped;
    return best;
}

LBound bound_L(int n) {
    if (n < 4) fail(ErrorCode::UnsupportedParameters, "bound_L requires n >= 4");
    LBound out;
    if (n == 4) { // a single quadruple meets every 4-subset
        out.value = 1;
        out.residue = "n=4";
        out.method = "trivial";
        return out;
    }
    const ResidueRule& r = rule_for(n);
    if (auto v = residue_formula(n)) {
        out.value = *v;
        out.residue = residue_name(r);
        out.method = "Thm 5.2";
        return out;
    }
    if (n < 9)
        fail(ErrorCode::UnsupportedParameters,
             "no fallback below partition scale for n=" + std::to_string(n));
    PartitionPlan plan = partition_search(n);
    out.value = plan.predicted;
    out.residue = residue_name(r);
    out.method = "partition search (side condition excludes the closed form)";
    return out;
}

const std::vector<PolyRow>& poly_rows() {
    static const std::vector<PolyRow> rows = {
        {"f(6t-1,6t+1)", 6, -1, 1, 36, -12, 3, 1, 1, true},
        {"f(6t+1,6t-1)", 6, 1, -1, 36, 0, -1, 0, 2, true},
        {"f(6t+1,6t)", 6, 1, 0, 36, 6, 0, 0, 0, true},
        {"f(6t+1,6t+1)", 6, 1, 1, 36, 12, 1, 0, 0, true},
        {"f(6t+1,6t+3)", 6, 1, 3, 36, 24, 3, 0, 0, true},
        {"f(6t+3,6t+1)", 6, 3, 1, 36, 36, 11, 1, 0, true},
        {"f(6t+3,6t+2)", 6, 3, 2, 36, 42, 16, 2, 0, true},
        {"f(6t+3,6t+3)", 6, 3, 3, 36, 48, 21, 3, 0, true},
        {"f(6t+3,6t+4)", 6, 3, 4, 36, 54, 26, 4, 0, true},
        {"f(6t+3,6t+5)", 6, 3, 5, 36, 60, 31, 5, 0, true},
        {"f(6t+3,6t+6)", 6, 3, 6, 36, 66, 36, 6, 0, true},
        {"f(6t+3,6t+7)", 6, 3, 7, 36, 72, 41, 7, 0, true},
        {"f(6t+5,6t+3)", 6, 5, 3, 36, 72, 51, 12, 0, true},
        {"f(6t+5,6t+5)", 6, 5, 5, 36, 84, 69, 20, 0, true},
        {"f(6t+5,6t+6)", 6, 5, 6, 36, 90, 78, 24, 0, true},
        {"f(6t+5,6t+7)", 6, 5, 7, 36, 96, 87, 28, 0, true},
        {"f(6t+7,6t+5)", 6, 7, 5, 36, 108, 107, 35, 0, true},
        {"f(6t+7,6t+6)", 6, 7, 6, 36, 114, 120, 42, 0, true},
        {"f(12s,12s+1)", 12, 0, 1, 288, 18, -2, 0, 2, false},
        {"f(12s,12s+3)", 12, 0, 3, 288, 66, -4, 0, 2, false},
        {"f(12s+4,12s+3)", 12, 4, 3, 288, 258, 76, 8, 0, false},
        {"f(12s+4,12s+5)", 12, 4, 5, 288, 306, 106, 13, 0, false},
        {"f(12s+4,12s+7)", 12, 4, 7, 288, 354, 136, 18, 0, false},
        {"f(12s+2,12s+3)", 12, 2, 3, 288, 156, 28, 2, 0, true},
        {"f(12s+6,12s+7)", 12, 6, 7, 288, 444, 228, 39, 0, true},
        {"f(12s+6,12s+9)", 12, 6, 9, 288, 492, 274, 50, 0, true},
        {"f(12s+8,12s+7)", 12, 8, 7, 288, 552, 354, 75, 1, false},
        {"f(12s+10,12s+9)", 12, 10, 9, 288, 696, 562, 151, 0, false},
        {"f(12s+8,12s+9)", 12, 8, 9, 288, 600, 414, 95, 0, false},
        {"f(12s+12,12s+9)", 12, 12, 9, 288, 792, 724, 220, 0, false},
    };
    return rows;
}

std::int64_t polynomial_table(const std::string& family, std::int64_t t) {
    for (const auto& row : poly_rows()) {
        if (row.name != family) continue;
        if (t < row.min_t)
            fail(ErrorCode::UnsupportedParameters,
                 family + " holds only from " + std::to_string(row.min_t));
        return row.c3 * t * t * t + row.c2 * t * t + row.c1 * t + row.c0;
    }
    fail(ErrorCode::UnsupportedParameters, "unknown polynomial family " + family);
}

} // namespace lotto
