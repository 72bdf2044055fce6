#ifndef LOTTO_ORACLE_HPP
#define LOTTO_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lotto/block_system.hpp"

namespace lotto {

// Generic minimum-cover instance: candidates (blocks) x targets they cover.
struct CoverInstance {
    int n = 0; // ground size, for reporting
    std::vector<Block> candidates;
    std::vector<Block> targets;                 // for reporting only
    std::vector<std::vector<int>> covers;       // candidate -> target ids
    std::vector<std::vector<int>> covered_by;   // target id -> candidate ids
    int max_cover = 1;                          // max targets per candidate
};

enum class OracleStatus { Optimal, TimeoutWithBounds };

struct OracleResult {
    OracleStatus status = OracleStatus::Optimal;
    std::int64_t optimum = 0;              // exact when Optimal
    std::int64_t lower = 0, upper = 0;     // bounds when TimeoutWithBounds
    std::vector<Block> witness;
    long long nodes = 0;
    std::string bound_used;
};

struct OracleBudget {
    long long node_limit = 10'000'000;
    long long millis = 60'000;
    int threads = 1;
    std::optional<std::vector<Block>> seed_witness;
};

// all triples with >= 2 elements of A, covered by quadruples with >= 2
// A-elements (blocks with fewer cover no target)
CoverInstance build_f_instance(int a, int b);
// all 4-subsets of [n]; candidate covers target when they share >= 3 elements
CoverInstance build_lottery_instance(int n);
// all pairs of [a] covered by triples (minimum covering numbers)
CoverInstance build_pair_cover_instance(int a);

// deterministic branch and bound; result independent of the thread count
OracleResult exact_min_cover(const CoverInstance& inst, const OracleBudget& budget = {});

OracleResult exact_f_oracle(int a, int b, const OracleBudget& budget = {});
OracleResult exact_L_oracle(int n, const OracleBudget& budget = {});

} // namespace lotto

#endif
