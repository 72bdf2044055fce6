#include "lotto/block_system.hpp"

#include <sstream>

namespace lotto {

void BlockSystem::canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    if (!multiset)
        blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
}

void BlockSystem::validate() const {
    for (const auto& b : blocks) {
        if (static_cast<int>(b.size()) != r)
            fail(ErrorCode::ShapeError, "block of size " + std::to_string(b.size()) +
                                            " in a system with r=" + std::to_string(r));
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= n)
                fail(ErrorCode::ShapeError,
                     "element " + std::to_string(b[i]) + " out of range [0," +
                         std::to_string(n) + ")");
            if (i > 0 && b[i] <= b[i - 1])
                fail(ErrorCode::ShapeError, "block not strictly increasing: " + block_to_string(b));
        }
    }
    if (!multiset) {
        auto sorted = blocks;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorCode::ShapeError, "duplicate blocks in a non-multiset system");
    }
}

TripleIndex::TripleIndex(const std::vector<Block>& blocks) {
    set_.reserve(blocks.size() * 4);
    for (const auto& b : blocks) {
        const int m = static_cast<int>(b.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k)
                    set_.insert(triple_key(b[i], b[j], b[k]));
    }
}

PairIndex::PairIndex(const std::vector<Block>& blocks) {
    set_.reserve(blocks.size() * 3);
    for (const auto& b : blocks) {
        const int m = static_cast<int>(b.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                set_.insert(pair_key(b[i], b[j]));
    }
}

std::int64_t binom(std::int64_t n, int k) {
    if (k < 0 || n < k) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BlockSystem relabel(const BlockSystem& s, const std::vector<int>& perm) {
    BlockSystem out;
    out.n = s.n;
    out.r = s.r;
    out.multiset = s.multiset;
    out.blocks.reserve(s.blocks.size());
    for (const auto& b : s.blocks) {
        Block nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(perm[x]);
        std::sort(nb.begin(), nb.end());
        out.blocks.push_back(std::move(nb));
    }
    out.canonicalize();
    return out;
}

std::string block_to_string(const Block& b) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) os << ',';
        os << b[i];
    }
    os << '}';
    return os.str();
}

} // namespace lotto
