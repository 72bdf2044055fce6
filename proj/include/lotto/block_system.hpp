#ifndef LOTTO_BLOCK_SYSTEM_HPP
#define LOTTO_BLOCK_SYSTEM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lotto/errors.hpp"

namespace lotto {

// A block is a strictly increasing list of element indices.
using Block = std::vector<int>;

inline Block make_block(std::initializer_list<int> xs) {
    Block b(xs);
    std::sort(b.begin(), b.end());
    return b;
}

struct BlockSystem {
    int n = 0; // ground-set size
    int r = 0; // block size
    std::vector<Block> blocks;
    bool multiset = false; // duplicates allowed only when set

    std::size_t size() const { return blocks.size(); }

    // sorts each block, orders blocks lexicographically, drops duplicates
    // unless multiset is set
    void canonicalize();

    // checks block sizes, element ranges, strict monotonicity, duplicates
    void validate() const;
};

// encodes a sorted triple as a single key (elements < 2^20)
inline std::uint64_t triple_key(int x, int y, int z) {
    return (static_cast<std::uint64_t>(x) << 40) |
           (static_cast<std::uint64_t>(y) << 20) |
           static_cast<std::uint64_t>(z);
}

inline std::uint64_t pair_key(int x, int y) {
    return (static_cast<std::uint64_t>(x) << 20) | static_cast<std::uint64_t>(y);
}

// Coverage index: which triples are inside some block of a system.
class TripleIndex {
public:
    explicit TripleIndex(const std::vector<Block>& blocks);
    bool covers(int x, int y, int z) const { // requires x < y < z
        return set_.count(triple_key(x, y, z)) != 0;
    }

private:
    std::unordered_set<std::uint64_t> set_;
};

// Pair coverage index (for triple systems).
class PairIndex {
public:
    explicit PairIndex(const std::vector<Block>& blocks);
    bool covers(int x, int y) const { // requires x < y
        return set_.count(pair_key(x, y)) != 0;
    }

private:
    std::unordered_set<std::uint64_t> set_;
};

std::int64_t binom(std::int64_t n, int k);

// deterministic permutation applier: block elements mapped through perm,
// system re-canonicalized
BlockSystem relabel(const BlockSystem& s, const std::vector<int>& perm);

std::string block_to_string(const Block& b);

} // namespace lotto

#endif
