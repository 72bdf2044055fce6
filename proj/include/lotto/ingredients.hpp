#ifndef LOTTO_INGREDIENTS_HPP
#define LOTTO_INGREDIENTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lotto/block_system.hpp"

namespace lotto {

enum class IngredientKind {
    STS,
    SQS,
    OptimalCovering,
    OptimalPacking,
    PackingWithLeave,
    LargeSetSTS,
    DisjointCoveringFamily,
    SteinerS35,
    ResolvableSQS,
};

std::string kind_name(IngredientKind k);
std::optional<IngredientKind> kind_from_name(const std::string& name);

enum class Provenance { Generated, Bundled, UserSupplied };

// Facts established by verification; constructions check the ones they need.
struct FamilyFacts {
    bool pairwise_disjoint = false;
    bool union_covers_all = false;               // all triples of the ground set
    std::vector<Block> missing_triples;          // when union coverage fails
};

struct IngredientRecord {
    IngredientKind kind = IngredientKind::STS;
    std::map<std::string, int> parameters;       // kind-specific (n, a, count, ...)
    std::vector<BlockSystem> systems;
    Provenance provenance = Provenance::Generated;
    bool verified = false;
    FamilyFacts facts;
};

// Runs the kind-specific checks; sets verified and facts on success, throws
// InvalidIngredient naming the first violated condition otherwise.
void verify_record(IngredientRecord& rec);

// Parse a family/design file into a record (kind inferred or overridden),
// then verify. Never trusts file contents.
IngredientRecord load_family(IngredientKind kind, const std::string& path);

// Bundled ingredient access (cached). Throws MissingIngredient when the
// repository does not ship the requested data.
const IngredientRecord& bundled_large_set_sts(int n);
const IngredientRecord& bundled_covering_family(int a); // mu-style families
const IngredientRecord& bundled_disjoint_coverings(int a); // lambda-style
const IngredientRecord& bundled_aligned_sts13();
const IngredientRecord& bundled_resolvable_sqs16();
const IngredientRecord& bundled_s35();

bool have_bundled_covering_family(int a);
bool have_bundled_disjoint_coverings(int a);
bool have_bundled_large_set(int n);

} // namespace lotto

#endif
