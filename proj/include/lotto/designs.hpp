#ifndef LOTTO_DESIGNS_HPP
#define LOTTO_DESIGNS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lotto/block_system.hpp"
#include "lotto/rational.hpp"

namespace lotto {

// C(a,3,2) = ceil(a/3 * ceil((a-1)/2)), a >= 2
std::int64_t covering_number(int a);

// largest packing of triples on a points, a >= 3
std::int64_t packing_number(int a);

// minimum weight of a triple system on a points (triples + half the
// uncovered pairs), a >= 2
Half c_star(int a);

struct TripleSystemWeight {
    std::int64_t triple_count = 0;
    std::int64_t uncovered_pair_count = 0;
    Half weight;
};

TripleSystemWeight weight_of(const BlockSystem& triples);

// Steiner triple system, n == 1 or 3 (mod 6)
BlockSystem construct_sts(int n);

// Steiner quadruple system for n in the closure of {4,8,10} under doubling
BlockSystem construct_sqs(int n);
bool sqs_supported(int n);

// optimal (a,3,2)-covering; a >= 3. Composed from triple-system
// constructions wherever a closed route exists; bundled or search otherwise.
BlockSystem construct_optimal_covering(int a, int parallelism = 1);
bool optimal_covering_supported(int a);

enum class LeaveKind { PerfectMatching, NearOnePairShort, K13PlusMatching, Any };

// Triple system whose uncovered-pair graph has the requested shape. When
// target_leave is given (same shape), labels are permuted so the leave equals
// it exactly.
BlockSystem construct_packing_with_leave(
    int a, LeaveKind kind,
    const std::vector<std::pair<int, int>>* target_leave = nullptr,
    int parallelism = 1);

// maximum packing of triples on a points (leave shape unspecified)
BlockSystem construct_max_packing(int a, int parallelism = 1);

// uncovered pairs of a triple system on its ground set, lexicographic
std::vector<std::pair<int, int>> leave_of(const BlockSystem& triples);

std::int64_t mu_value(int a);     // systems needed so every triple appears
std::int64_t lambda_value(int a); // max disjoint optimal coverings, a == 0 mod 6

// verification predicates used across the library
bool is_steiner_triple_system(const BlockSystem& s);
bool is_steiner_quadruple_system(const BlockSystem& s);
bool is_covering(const BlockSystem& s);         // every pair covered
bool is_optimal_covering(const BlockSystem& s); // covering of size C(a)
bool is_packing(const BlockSystem& s);          // every pair at most once

} // namespace lotto

#endif
