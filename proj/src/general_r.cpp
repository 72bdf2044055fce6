#include "lotto/general_r.hpp"

#include <algorithm>
#include <unordered_set>

#include "lotto/designs.hpp"
#include "lotto/errors.hpp"

namespace lotto {

std::optional<Block> verify_r(const RSystemInstance& inst) {
    if (inst.system.n != inst.a + inst.b || inst.system.r != inst.r || inst.r < 4)
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

int t_opt(int r) {
    if (r < 4) fail(ErrorCode::UnsupportedParameters, "t(r) needs r >= 4");
    const int m = r / 3;
    switch (r % 3) {
        case 0: return 2 * m;
        case 1: return 2 * m + 1;
        default: return 2 * m + 1; // the tie is broken toward the smaller t
    }
}

std::int64_t lower_bound_fr(int a, int b, int r) {
    if (a < 2 || b < 1 || r < 4)
        fail(ErrorCode::UnsupportedParameters, "lower_bound_fr needs a >= 2, b >= 1, r >= 4");
    const int t = t_opt(r);
    const std::int64_t num = static_cast<std::int64_t>(b) * binom(a, 2);
    const std::int64_t den = static_cast<std::int64_t>(r - t) * binom(t, 2);
    return (num + den - 1) / den;
}

RSystemInstance construct_f5(const IngredientRecord* s35) {
    const IngredientRecord& rec = s35 != nullptr ? *s35 : bundled_s35();
    if (!rec.verified || rec.kind != IngredientKind::SteinerS35)
        fail(ErrorCode::InvalidIngredient, "need a verified S(3,5,a+1)");
    const BlockSystem& s = rec.systems.front();
    const int a = s.n - 1; // element a of the base system is replaced per step
    RSystemInstance inst;
    inst.a = a;
    inst.b = a;
    inst.r = 5;
    inst.system.n = 2 * a;
    inst.system.r = 5;
    for (int i = 0; i < a; ++i) {
        for (const auto& bl : s.blocks) {
            if (std::find(bl.begin(), bl.end(), i) == bl.end()) continue;
            Block nb;
            bool had_last = false;
            for (int x : bl) {
                if (x == i) continue;
                if (x == a) {
                    had_last = true;
                    nb.push_back(i);
                } else {
                    nb.push_back(x);
                }
            }
            (void)had_last;
            nb.push_back(a + i); // y_i
            std::sort(nb.begin(), nb.end());
            inst.system.blocks.push_back(std::move(nb));
        }
    }
    inst.system.canonicalize();
    const std::int64_t aa = a;
    if (static_cast<std::int64_t>(inst.system.blocks.size()) != aa * aa * (aa - 1) / 12)
        fail(ErrorCode::SearchExhausted, "size does not match a^2(a-1)/12");
    if (auto bad = verify_r(inst))
        fail(ErrorCode::SearchExhausted, "uncovered triple " + block_to_string(*bad));
    return inst;
}

RSystemInstance construct_f6(int b, const IngredientRecord* resolution) {
    const IngredientRecord& rec =
        resolution != nullptr ? *resolution : bundled_resolvable_sqs16();
    if (!rec.verified || rec.kind != IngredientKind::ResolvableSQS)
        fail(ErrorCode::InvalidIngredient, "need a verified 2-resolution");
    const int a = rec.systems.front().n;
    if (b % 2 != 0)
        fail(ErrorCode::PreconditionFailed, "b must be even");
    if (b < a - 2)
        fail(ErrorCode::PreconditionFailed, "b must be at least a-2");
    const int classes = static_cast<int>(rec.systems.size());
    RSystemInstance inst;
    inst.a = a;
    inst.b = b;
    inst.r = 6;
    inst.system.n = a + b;
    inst.system.r = 6;
    for (int j = 0; j < b / 2; ++j) {
        const BlockSystem& cls = rec.systems[j % classes];
        const int y1 = a + 2 * j, y2 = y1 + 1;
        for (const auto& bl : cls.blocks) {
            Block nb = bl;
            nb.push_back(y1);
            nb.push_back(y2);
            inst.system.blocks.push_back(std::move(nb));
        }
    }
    inst.system.canonicalize();
    const std::int64_t aa = a;
    if (static_cast<std::int64_t>(inst.system.blocks.size()) != b / 2 * (aa * (aa - 1) / 12))
        fail(ErrorCode::SearchExhausted, "size does not match b*a(a-1)/24");
    if (auto bad = verify_r(inst))
        fail(ErrorCode::SearchExhausted, "uncovered triple " + block_to_string(*bad));
    return inst;
}

std::optional<Block> verify_lottery_r(const BlockSystem& system) {
    system.validate();
    const int n = system.n;
    auto meets3 = [&](const Block& k) {
        for (const auto& bl : system.blocks) {
            int cnt = 0;
            std::size_t i = 0, j = 0;
            while (i < bl.size() && j < 4) {
                if (bl[i] == k[j]) {
                    ++cnt;
                    ++i;
                    ++j;
                } else if (bl[i] < k[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
            if (cnt >= 3) return true;
        }
        return false;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                for (int w = z + 1; w < n; ++w) {
                    Block k{x, y, z, w};
                    if (!meets3(k)) return k;
                }
    return std::nullopt;
}

RBound bound_L_r(int a, int b, int c, int r) {
    auto leg = [&](int x, int y) -> RSystemInstance {
        if (r == 5) {
            RSystemInstance inst = construct_f5();
            if (inst.a != x || inst.b != y)
                fail(ErrorCode::MissingIngredient,
                     "no size-5 system for (" + std::to_string(x) + "," + std::to_string(y) + ")");
            return inst;
        }
        if (r == 6) return construct_f6(y);
        fail(ErrorCode::UnsupportedParameters, "r must be 5 or 6 here");
    };
    RSystemInstance q1 = leg(a, b), q2 = leg(b, c), q3 = leg(c, a);
    RBound out;
    out.value = static_cast<std::int64_t>(q1.system.blocks.size()) +
                q2.system.blocks.size() + q3.system.blocks.size();
    RLotterySystem sys;
    sys.n = a + b + c;
    sys.r = r;
    sys.system.n = sys.n;
    sys.system.r = r;
    auto add = [&](const RSystemInstance& q, int a_to, int b_to, int asz) {
        for (const auto& bl : q.system.blocks) {
            Block nb;
            for (int x : bl) nb.push_back(x < asz ? a_to + x : b_to + (x - asz));
            std::sort(nb.begin(), nb.end());
            sys.system.blocks.push_back(std::move(nb));
        }
    };
    add(q1, 0, a, a);
    add(q2, a, a + b, b);
    add(q3, a + b, 0, c);
    sys.system.canonicalize();
    sys.first_failure = verify_lottery_r(sys.system);
    if (sys.first_failure)
        fail(ErrorCode::SearchExhausted,
             "assembled system misses " + block_to_string(*sys.first_failure));
    out.witness = std::move(sys);
    return out;
}

} // namespace lotto
