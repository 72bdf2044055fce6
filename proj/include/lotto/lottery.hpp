#ifndef LOTTO_LOTTERY_HPP
#define LOTTO_LOTTERY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lotto/absystems.hpp"
#include "lotto/block_system.hpp"

namespace lotto {

// System of quadruples on [n] s.t. every 4-subset meets some block in >= 3
// elements.
struct LotterySystem {
    int n = 0;
    BlockSystem system; // r = 4
    std::optional<std::array<int, 3>> partition;
};

// nullopt when valid; otherwise the lexicographically first failing 4-subset
std::optional<Block> verify_lottery(const LotterySystem& sys);

struct PartitionPlan {
    std::array<int, 3> parts{0, 0, 0};
    std::array<std::optional<UpperPlan>, 3> recipes; // (a,b), (b,c), (c,a)
    std::array<std::int64_t, 3> pair_values{0, 0, 0};
    std::int64_t predicted = 0;
    bool materializable = false;
    std::string note;
};

// union of three pairwise systems placed on disjoint ranges of [n]
LotterySystem assemble(int a, int b, int c);
LotterySystem assemble(const PartitionPlan& plan);

struct LBound {
    std::int64_t value = 0;
    std::string residue;   // e.g. "n==3 (mod 18)"
    std::string method;    // "closed form" or "partition search"
};

// closed-form bound by residue class; falls back to partition search when the
// class's side condition excludes n
LBound bound_L(int n);

// best ordered three-part split, parts >= 3, scored by formula-level pair
// values; ties broken lexicographically
PartitionPlan partition_search(int n, bool require_materializable = false);

// rows of the residue table: {modulus, residue, c3..c0, min_n}
struct ResidueRule {
    int modulus;
    int residue;
    std::int64_t c3, c2, c1, c0; // (c3 n^3 + c2 n^2 + c1 n + c0) / 216
    int min_n;                   // smallest n the rule may be applied to
    std::array<int, 3> part_offsets; // paper partition: parts = (n + o)/3-ish, see impl
};

const std::vector<ResidueRule>& residue_rules();
std::optional<std::int64_t> residue_formula(int n); // nullopt outside side conditions
std::array<int, 3> residue_partition(int n);        // the table's partition for n

// polynomial rows used to certify f-values along arithmetic progressions
struct PolyRow {
    std::string name;    // e.g. "f(6t+3,6t+2)"
    int stride;          // 6 or 12
    int a_off, b_off;    // a = stride*t + a_off, b = stride*t + b_off
    std::int64_t c3, c2, c1, c0;
    int min_t;
    bool exact;          // equality row vs upper-bound row
};

const std::vector<PolyRow>& poly_rows();
std::int64_t polynomial_table(const std::string& family, std::int64_t t);

} // namespace lotto

#endif
