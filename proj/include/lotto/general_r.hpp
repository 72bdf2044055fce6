#ifndef LOTTO_GENERAL_R_HPP
#define LOTTO_GENERAL_R_HPP

#include <cstdint>
#include <optional>

#include "lotto/block_system.hpp"
#include "lotto/ingredients.hpp"

namespace lotto {

// (A,B)-system with blocks of size r >= 4; same coverage contract as r = 4.
struct RSystemInstance {
    int a = 0;
    int b = 0;
    int r = 4;
    BlockSystem system;
};

std::optional<Block> verify_r(const RSystemInstance& inst);

// intersection size with A that maximizes covered A-pair-with-B triples
int t_opt(int r);

// ceil(b*C(a,2) / ((r - t(r)) * C(t(r),2)))
std::int64_t lower_bound_fr(int a, int b, int r);

// blocks of size 5 from an S(3,5,a+1); b = a
RSystemInstance construct_f5(const IngredientRecord* s35 = nullptr);

// blocks of size 6 from a 2-resolvable S(3,4,a); even b >= a-2
RSystemInstance construct_f6(int b, const IngredientRecord* resolution = nullptr);

struct RLotterySystem {
    int n = 0;
    int r = 4;
    BlockSystem system;
    std::optional<Block> first_failure; // set by verification
};

// L(a+b+c, r, 3, 4) <= f_r(a,b) + f_r(b,c) + f_r(c,a); assembles and verifies
// when all three legs exist
struct RBound {
    std::int64_t value = 0;
    std::optional<RLotterySystem> witness;
};

RBound bound_L_r(int a, int b, int c, int r);

std::optional<Block> verify_lottery_r(const BlockSystem& system);

} // namespace lotto

#endif
