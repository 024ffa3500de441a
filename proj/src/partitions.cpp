#include "freeprob/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace freeprob {

namespace {

void require_in_cap(int n) {
    if (n < 1 || n > kEnumerationCap) {
        throw std::invalid_argument("non-crossing enumeration: n must satisfy 1 <= n <= " +
                                    std::to_string(kEnumerationCap));
    }
}

// DFS over restricted-growth strings, pruning any prefix that already
// crosses. Appending element i to block b (with current maximum m) keeps the
// prefix non-crossing iff every element strictly between m and i lies in a
// block entirely contained in that gap, i.e. no such block reaches below m.
struct NcEnumerator {
    int n;
    const std::function<void(std::span<const std::uint8_t>)>& visit;
    std::vector<std::uint8_t> rgs;
    std::vector<int> block_min, block_max;

    NcEnumerator(int n_, const std::function<void(std::span<const std::uint8_t>)>& v)
        : n(n_), visit(v), rgs(static_cast<size_t>(n_)) {
        block_min.reserve(static_cast<size_t>(n_));
        block_max.reserve(static_cast<size_t>(n_));
    }

    bool extension_crosses(int b, int i) const {
        const int m = block_max[static_cast<size_t>(b)];
        for (int p = m + 1; p < i; ++p) {
            if (block_min[rgs[static_cast<size_t>(p)]] <= m) {
                return true;
            }
        }
        return false;
    }

    void run(int i) {
        if (i == n) {
            visit(std::span<const std::uint8_t>(rgs.data(), rgs.size()));
            return;
        }
        const int open = static_cast<int>(block_min.size());
        for (int b = 0; b < open; ++b) {
            if (extension_crosses(b, i)) {
                continue;
            }
            rgs[static_cast<size_t>(i)] = static_cast<std::uint8_t>(b);
            const int saved = block_max[static_cast<size_t>(b)];
            block_max[static_cast<size_t>(b)] = i;
            run(i + 1);
            block_max[static_cast<size_t>(b)] = saved;
        }
        // A fresh singleton block can never create a crossing.
        rgs[static_cast<size_t>(i)] = static_cast<std::uint8_t>(open);
        block_min.push_back(i);
        block_max.push_back(i);
        run(i + 1);
        block_min.pop_back();
        block_max.pop_back();
    }
};

}  // namespace

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    if (n < 1) {
        throw std::invalid_argument("SetPartition: n must be >= 1");
    }
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    size_t total = 0;
    for (auto& block : blocks) {
        if (block.empty()) {
            throw std::invalid_argument("SetPartition: empty block");
        }
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > n) {
                throw std::invalid_argument("SetPartition: element out of range");
            }
            if (seen[static_cast<size_t>(e)]) {
                throw std::invalid_argument("SetPartition: duplicate element");
            }
            seen[static_cast<size_t>(e)] = true;
            ++total;
        }
    }
    if (total != static_cast<size_t>(n)) {
        throw std::invalid_argument("SetPartition: blocks do not cover {1,...,n}");
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SetPartition p;
    p.n = n;
    p.blocks = std::move(blocks);
    return p;
}

SetPartition SetPartition::from_rgs(std::span<const std::uint8_t> rgs) {
    if (rgs.empty()) {
        throw std::invalid_argument("SetPartition: empty restricted-growth string");
    }
    std::vector<std::vector<int>> blocks;
    for (size_t i = 0; i < rgs.size(); ++i) {
        const size_t b = rgs[i];
        if (b > blocks.size()) {
            throw std::invalid_argument("SetPartition: malformed restricted-growth string");
        }
        if (b == blocks.size()) {
            blocks.emplace_back();
        }
        blocks[b].push_back(static_cast<int>(i) + 1);
    }
    SetPartition p;
    p.n = static_cast<int>(rgs.size());
    p.blocks = std::move(blocks);
    return p;
}

std::vector<std::uint8_t> SetPartition::to_rgs() const {
    std::vector<std::uint8_t> rgs(static_cast<size_t>(n));
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (int e : blocks[b]) {
            rgs[static_cast<size_t>(e - 1)] = static_cast<std::uint8_t>(b);
        }
    }
    return rgs;
}

bool is_noncrossing(const SetPartition& p) {
    const auto rgs = p.to_rgs();
    const size_t nblocks = p.blocks.size();
    std::vector<int> block_min(nblocks, -1), block_max(nblocks, -1);
    // Replay the elements left to right; the first completed crossing is
    // caught at its largest element.
    for (int i = 0; i < p.n; ++i) {
        const size_t b = rgs[static_cast<size_t>(i)];
        if (block_min[b] < 0) {
            block_min[b] = i;
        } else {
            const int m = block_max[b];
            for (int q = m + 1; q < i; ++q) {
                if (block_min[rgs[static_cast<size_t>(q)]] <= m) {
                    return false;
                }
            }
        }
        block_max[b] = i;
    }
    return true;
}

void for_each_nc(int n, const std::function<void(std::span<const std::uint8_t>)>& visit) {
    require_in_cap(n);
    NcEnumerator e(n, visit);
    e.run(0);
}

std::vector<SetPartition> enumerate_nc(int n) {
    std::vector<SetPartition> out;
    for_each_nc(n, [&](std::span<const std::uint8_t> rgs) {
        out.push_back(SetPartition::from_rgs(rgs));
    });
    return out;
}

std::uint64_t count_nc(int n) {
    std::uint64_t count = 0;
    for_each_nc(n, [&](std::span<const std::uint8_t>) { ++count; });
    return count;
}

const NcRgsTable& nc_rgs_table(int n) {
    static std::mutex mutex;
    static std::map<int, NcRgsTable> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        NcRgsTable table;
        table.n = n;
        for_each_nc(n, [&](std::span<const std::uint8_t> rgs) {
            table.flat.insert(table.flat.end(), rgs.begin(), rgs.end());
            ++table.count;
        });
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second;
}

}  // namespace freeprob
