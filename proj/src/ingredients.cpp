#include "lotto/ingredients.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include <json.hpp>

#include "lotto/design_io.hpp"
#include "lotto/designs.hpp"
#include "lotto/errors.hpp"

namespace lotto {

std::string kind_name(IngredientKind k) {
    switch (k) {
        case IngredientKind::STS: return "sts";
        case IngredientKind::SQS: return "sqs";
        case IngredientKind::OptimalCovering: return "covering";
        case IngredientKind::OptimalPacking: return "packing";
        case IngredientKind::PackingWithLeave: return "packing_with_leave";
        case IngredientKind::LargeSetSTS: return "large_set_sts";
        case IngredientKind::DisjointCoveringFamily: return "covering_family";
        case IngredientKind::SteinerS35: return "steiner_s35";
        case IngredientKind::ResolvableSQS: return "resolvable_sqs";
    }
    return "?";
}

std::optional<IngredientKind> kind_from_name(const std::string& name) {
    static const std::map<std::string, IngredientKind> m = {
        {"sts", IngredientKind::STS},
        {"sqs", IngredientKind::SQS},
        {"covering", IngredientKind::OptimalCovering},
        {"packing", IngredientKind::OptimalPacking},
        {"packing_with_leave", IngredientKind::PackingWithLeave},
        {"large_set_sts", IngredientKind::LargeSetSTS},
        {"covering_family", IngredientKind::DisjointCoveringFamily},
        {"steiner_s35", IngredientKind::SteinerS35},
        {"resolvable_sqs", IngredientKind::ResolvableSQS},
    };
    auto it = m.find(name);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

namespace {

std::vector<Block> all_triples(int n) {
    std::vector<Block> res;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) res.push_back({x, y, z});
    return res;
}

void check(bool cond, const std::string& what) {
    if (!cond) fail(ErrorCode::InvalidIngredient, what);
}

void compute_family_facts(IngredientRecord& rec) {
    std::set<Block> seen;
    bool disjoint = true;
    for (const auto& s : rec.systems)
        for (const auto& b : s.blocks)
            if (!seen.insert(b).second) disjoint = false;
    rec.facts.pairwise_disjoint = disjoint;
    rec.facts.missing_triples.clear();
    const int n = rec.systems.empty() ? 0 : rec.systems.front().n;
    for (const auto& t : all_triples(n))
        if (!seen.count(t)) rec.facts.missing_triples.push_back(t);
    rec.facts.union_covers_all = rec.facts.missing_triples.empty();
}

} // namespace

void verify_record(IngredientRecord& rec) {
    rec.verified = false;
    check(!rec.systems.empty(), "record holds no systems");
    for (const auto& s : rec.systems) s.validate();
    const BlockSystem& first = rec.systems.front();
    switch (rec.kind) {
        case IngredientKind::STS:
            check(rec.systems.size() == 1, "sts record must hold one system");
            check(is_steiner_triple_system(first), "not a Steiner triple system");
            break;
        case IngredientKind::SQS:
            check(rec.systems.size() == 1, "sqs record must hold one system");
            check(is_steiner_quadruple_system(first), "not a Steiner quadruple system");
            break;
        case IngredientKind::OptimalCovering:
            check(rec.systems.size() == 1, "covering record must hold one system");
            check(is_covering(first), "pairs left uncovered");
            check(static_cast<std::int64_t>(first.blocks.size()) == covering_number(first.n),
                  "covering is not of minimum size");
            break;
        case IngredientKind::OptimalPacking:
            check(rec.systems.size() == 1, "packing record must hold one system");
            check(is_packing(first), "pair covered twice");
            check(static_cast<std::int64_t>(first.blocks.size()) == packing_number(first.n),
                  "packing is not of maximum size");
            break;
        case IngredientKind::PackingWithLeave:
            check(rec.systems.size() == 1, "packing record must hold one system");
            // shape-specific checks happen at the call sites that request leaves
            break;
        case IngredientKind::LargeSetSTS: {
            const int n = first.n;
            check(static_cast<int>(rec.systems.size()) == n - 2,
                  "a large set on " + std::to_string(n) + " points needs " +
                      std::to_string(n - 2) + " systems");
            for (const auto& s : rec.systems) {
                check(s.n == n, "mixed ground-set sizes");
                check(is_steiner_triple_system(s), "member is not a Steiner triple system");
            }
            compute_family_facts(rec);
            check(rec.facts.pairwise_disjoint, "members share a block");
            check(rec.facts.union_covers_all, "union does not contain every triple");
            break;
        }
        case IngredientKind::DisjointCoveringFamily: {
            const int n = first.n;
            for (const auto& s : rec.systems) {
                check(s.n == n, "mixed ground-set sizes");
                check(is_covering(s), "member leaves a pair uncovered");
                check(static_cast<std::int64_t>(s.blocks.size()) == covering_number(n),
                      "member covering is not optimal");
            }
            compute_family_facts(rec);
            break;
        }
        case IngredientKind::SteinerS35: {
            check(rec.systems.size() == 1, "S(3,5,v) record must hold one system");
            check(first.r == 5, "blocks must have size 5");
            TripleIndex idx(first.blocks);
            std::int64_t covered = 0;
            for (int x = 0; x < first.n; ++x)
                for (int y = x + 1; y < first.n; ++y)
                    for (int z = y + 1; z < first.n; ++z)
                        if (idx.covers(x, y, z)) ++covered;
            const std::int64_t v = first.n;
            check(covered == v * (v - 1) * (v - 2) / 6, "triple left uncovered");
            check(covered == 10 * static_cast<std::int64_t>(first.blocks.size()),
                  "triple covered twice");
            break;
        }
        case IngredientKind::ResolvableSQS: {
            const int a = first.n;
            check(a % 12 == 4, "2-resolvable orders are 4 (mod 12)");
            check(static_cast<int>(rec.systems.size()) == (a - 2) / 2,
                  "resolution needs (a-2)/2 classes");
            std::set<Block> allb;
            for (const auto& s : rec.systems) {
                check(s.n == a && s.r == 4, "bad class shape");
                // each class: every pair exactly once
                PairIndex idx(s.blocks);
                std::int64_t covered = 0;
                for (int x = 0; x < a; ++x)
                    for (int y = x + 1; y < a; ++y)
                        if (idx.covers(x, y)) ++covered;
                check(covered == static_cast<std::int64_t>(a) * (a - 1) / 2 &&
                          covered == 6 * static_cast<std::int64_t>(s.blocks.size()),
                      "class is not an S(2,4,a)");
                for (const auto& b : s.blocks)
                    check(allb.insert(b).second, "classes share a block");
            }
            // union must be a Steiner quadruple system
            BlockSystem un;
            un.n = a;
            un.r = 4;
            un.blocks.assign(allb.begin(), allb.end());
            un.canonicalize();
            check(is_steiner_quadruple_system(un), "union is not an S(3,4,a)");
            break;
        }
    }
    rec.verified = true;
}

IngredientRecord load_family(IngredientKind kind, const std::string& path) {
    IngredientRecord rec;
    rec.kind = kind;
    rec.provenance = Provenance::UserSupplied;
    const std::string content = read_file(path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json" &&
        content.find("\"systems\"") != std::string::npos) {
        nlohmann::json j = nlohmann::json::parse(content);
        if (j.contains("kind")) {
            auto k = kind_from_name(j["kind"].get<std::string>());
            if (k) rec.kind = *k;
        }
        if (j.contains("params"))
            for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
                rec.parameters[it.key()] = it.value().get<int>();
        if (j.contains("provenance") && j["provenance"] == "bundled")
            rec.provenance = Provenance::Bundled;
        int n = rec.parameters.count("n") ? rec.parameters["n"]
                                          : rec.parameters.count("a") ? rec.parameters["a"] : 0;
        for (const auto& sys : j.at("systems")) {
            BlockSystem s;
            s.blocks = sys.get<std::vector<Block>>();
            int maxel = -1;
            std::size_t rr = 0;
            for (const auto& b : s.blocks) {
                rr = std::max(rr, b.size());
                for (int x : b) maxel = std::max(maxel, x);
            }
            s.r = static_cast<int>(rr);
            s.n = std::max(n, maxel + 1);
            s.canonicalize();
            rec.systems.push_back(std::move(s));
        }
    } else {
        DesignFile d = read_design_file(path);
        auto k = kind_from_name(d.kind);
        if (k) rec.kind = *k;
        rec.provenance = d.provenance == "bundled" ? Provenance::Bundled : rec.provenance;
        rec.systems.push_back(d.system);
        for (const auto& [key, value] : d.fields) rec.parameters[key] = value;
        rec.parameters["n"] = d.n;
    }
    verify_record(rec);
    return rec;
}

namespace {

std::mutex cache_mutex;

const IngredientRecord& cached(const std::string& file, IngredientKind kind,
                               const char* what) {
    static std::map<std::string, IngredientRecord> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(file);
    if (it != cache.end()) return it->second;
    const std::string path = data_dir() + "/" + file;
    if (!file_exists(path))
        fail(ErrorCode::MissingIngredient,
             std::string(what) + ": no bundled data file " + file);
    IngredientRecord rec = load_family(kind, path);
    rec.provenance = Provenance::Bundled;
    return cache.emplace(file, std::move(rec)).first->second;
}

IngredientRecord make_trivial_large_set_3() {
    IngredientRecord rec;
    rec.kind = IngredientKind::LargeSetSTS;
    rec.parameters = {{"n", 3}, {"count", 1}};
    BlockSystem s;
    s.n = 3;
    s.r = 3;
    s.blocks = {{0, 1, 2}};
    rec.systems.push_back(s);
    rec.provenance = Provenance::Generated;
    verify_record(rec);
    return rec;
}

IngredientRecord make_mu4() {
    IngredientRecord rec;
    rec.kind = IngredientKind::DisjointCoveringFamily;
    rec.parameters = {{"a", 4}, {"count", 2}};
    BlockSystem s1, s2;
    s1.n = s2.n = 4;
    s1.r = s2.r = 3;
    s1.blocks = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    s2.blocks = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    rec.systems = {s1, s2};
    verify_record(rec);
    return rec;
}

IngredientRecord make_mu3() {
    IngredientRecord rec;
    rec.kind = IngredientKind::DisjointCoveringFamily;
    rec.parameters = {{"a", 3}, {"count", 1}};
    BlockSystem s;
    s.n = 3;
    s.r = 3;
    s.blocks = {{0, 1, 2}};
    rec.systems = {s};
    verify_record(rec);
    return rec;
}

IngredientRecord make_s35() {
    IngredientRecord rec;
    rec.kind = IngredientKind::SteinerS35;
    rec.parameters = {{"n", 5}};
    BlockSystem s;
    s.n = 5;
    s.r = 5;
    s.blocks = {{0, 1, 2, 3, 4}};
    rec.systems = {s};
    verify_record(rec);
    return rec;
}

} // namespace

const IngredientRecord& bundled_large_set_sts(int n) {
    if (n == 3) {
        static const IngredientRecord rec = make_trivial_large_set_3();
        return rec;
    }
    if (n == 9) return cached("lts9.json", IngredientKind::LargeSetSTS, "large set, order 9");
    if (n == 13) return cached("lts13.json", IngredientKind::LargeSetSTS, "large set, order 13");
    if (n == 15) return cached("lts15.json", IngredientKind::LargeSetSTS, "large set, order 15");
    fail(ErrorCode::MissingIngredient,
         "no bundled large set of triple systems on " + std::to_string(n) + " points");
}

bool have_bundled_large_set(int n) {
    if (n == 3) return true;
    if (n == 9 || n == 13 || n == 15)
        return file_exists(data_dir() + "/lts" + std::to_string(n) + ".json");
    return false;
}

const IngredientRecord& bundled_covering_family(int a) {
    switch (a) {
        case 3: {
            static const IngredientRecord rec = make_mu3();
            return rec;
        }
        case 4: {
            static const IngredientRecord rec = make_mu4();
            return rec;
        }
        case 5: return cached("mu5.json", IngredientKind::DisjointCoveringFamily, "coverings a=5");
        case 6: return cached("mu6.json", IngredientKind::DisjointCoveringFamily, "coverings a=6");
        case 7: return cached("mu7.json", IngredientKind::DisjointCoveringFamily, "coverings a=7");
        case 8: return cached("mu8.json", IngredientKind::DisjointCoveringFamily, "coverings a=8");
        case 9: return bundled_large_set_sts(9);
        case 10: return cached("mu10.json", IngredientKind::DisjointCoveringFamily, "coverings a=10");
        case 11: return cached("mu11.json", IngredientKind::DisjointCoveringFamily, "coverings a=11");
        case 12: {
            // nine disjoint coverings plus one containing their missing triples
            static const IngredientRecord rec = [] {
                IngredientRecord r = bundled_disjoint_coverings(12);
                const std::string path = data_dir() + "/mu12_extra.design";
                if (!file_exists(path))
                    fail(ErrorCode::MissingIngredient, "coverings a=12: no mu12_extra.design");
                DesignFile extra = read_design_file(path);
                r.systems.push_back(extra.system);
                r.parameters["count"] = static_cast<int>(r.systems.size());
                verify_record(r);
                return r;
            }();
            return rec;
        }
        case 13: return bundled_large_set_sts(13);
        case 15: return bundled_large_set_sts(15);
        default: break;
    }
    fail(ErrorCode::MissingIngredient,
         "no bundled covering family for a=" + std::to_string(a));
}

bool have_bundled_covering_family(int a) {
    switch (a) {
        case 3:
        case 4: return true;
        case 5:
        case 6:
        case 7:
        case 8:
        case 10:
        case 11: return file_exists(data_dir() + "/mu" + std::to_string(a) + ".json");
        case 9:
        case 13:
        case 15: return have_bundled_large_set(a);
        case 12: return file_exists(data_dir() + "/etzion12.json") &&
                        file_exists(data_dir() + "/mu12_extra.design");
        default: return false;
    }
}

const IngredientRecord& bundled_disjoint_coverings(int a) {
    if (a == 6)
        return cached("lambda6.json", IngredientKind::DisjointCoveringFamily,
                      "disjoint coverings a=6");
    if (a == 12)
        return cached("etzion12.json", IngredientKind::DisjointCoveringFamily,
                      "disjoint coverings a=12");
    fail(ErrorCode::MissingIngredient,
         "no bundled disjoint covering family for a=" + std::to_string(a));
}

bool have_bundled_disjoint_coverings(int a) {
    if (a == 6) return file_exists(data_dir() + "/lambda6.json");
    if (a == 12) return file_exists(data_dir() + "/etzion12.json");
    return false;
}

const IngredientRecord& bundled_aligned_sts13() {
    return cached("sts13_aligned.design", IngredientKind::STS, "aligned order-13 triple system");
}

const IngredientRecord& bundled_resolvable_sqs16() {
    return cached("resolution16.json", IngredientKind::ResolvableSQS, "resolution a=16");
}

const IngredientRecord& bundled_s35() {
    static const IngredientRecord rec = make_s35();
    return rec;
}

// referenced from designs.cpp for optimal coverings at a == 0 (mod 6)
BlockSystem bundled_covering_family_member(int a, int index) {
    const IngredientRecord& rec = bundled_disjoint_coverings(a);
    return rec.systems.at(index);
}

} // namespace lotto
