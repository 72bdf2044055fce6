#ifndef LOTTO_ABSYSTEMS_HPP
#define LOTTO_ABSYSTEMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lotto/block_system.hpp"
#include "lotto/ingredients.hpp"
#include "lotto/rational.hpp"

namespace lotto {

// Quadruple system on A (elements 0..a-1) and B (elements a..a+b-1) covering
// every triple with at least two A-elements.
struct ABInstance {
    int a = 0;
    int b = 0;
    BlockSystem system; // n = a + b, r = 4
};

// nullopt when valid; otherwise the lexicographically first uncovered triple
std::optional<Block> verify_ab(const ABInstance& inst);

struct LowerBound {
    std::int64_t value = 0;
    std::vector<std::string> provenance;
};

LowerBound lower_bound_f(int a, int b);

// One way of reaching (a,b): a base construction plus extension steps.
struct UpperPlan {
    std::string base;      // mu, lambda, doubling, cyclic, mod12, mod6, 6t, large-b, pairs, value-only
    int base_b = 0;
    int j = 0;             // parameter of mod6/6t
    int plus1 = 0;
    int plus2 = 0;
    std::int64_t size = 0;
    bool materializable = false;
    std::vector<std::string> provenance;
    int steps() const { return 1 + plus1 + plus2; }
};

struct ABBoundReport {
    int a = 0, b = 0;
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
    bool exact = false;
    std::vector<std::string> lower_provenance;
    std::vector<std::string> upper_provenance;
    std::optional<UpperPlan> recipe;
};

// constructions
ABInstance construct_mu(int a, int b, const IngredientRecord* family = nullptr);
ABInstance construct_lambda(int a, int b, const IngredientRecord* family = nullptr);
ABInstance extend_b_plus_1(const ABInstance& inst);
ABInstance extend_b_plus_2(const ABInstance& inst);
ABInstance construct_doubling(int a);
ABInstance pair_completion(const BlockSystem& partial, int a, int b);
ABInstance construct_0_4_mod12(int a);
std::pair<ABInstance, Block> construct_partial_2_4_mod6(int a);
ABInstance construct_2_4_mod6(int a, int j);
ABInstance construct_cyclic(int a);
ABInstance construct_6t(int a, int j, const IngredientRecord* family = nullptr);
ABInstance construct_large_b(int a);
ABInstance construct_pairs(int a, int b); // a <= 2

// closed-form value when one of the exact theorems applies
std::optional<std::pair<std::int64_t, std::string>> theorem_value(int a, int b);

// all applicable upper-bound plans (closed-form sizes; cheapest extensions)
std::vector<UpperPlan> upper_plans(int a, int b);

ABBoundReport exact_f(int a, int b);

ABInstance construct_by_plan(int a, int b, const UpperPlan& plan);
// cheapest materializable plan, constructed and verified
ABInstance construct_auto(int a, int b);
// cheapest materializable plan if any
std::optional<UpperPlan> best_materializable_plan(int a, int b);

std::string format_provenance(const std::vector<std::string>& prov);

} // namespace lotto

#endif
