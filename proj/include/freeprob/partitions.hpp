#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace freeprob {

/// Hard cap for exhaustive enumeration; NC(14) already has 2,674,440 members.
inline constexpr int kEnumerationCap = 14;

/// Partition of {1,...,n} in canonical form: each block sorted ascending,
/// blocks ordered by their minimum element.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    /// Canonicalizes and validates: blocks must be disjoint, nonempty, and
    /// cover {1,...,n} exactly.
    static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

    /// From a restricted-growth string: rgs[i] is the 0-based block index of
    /// element i+1, block indices numbered by first appearance.
    static SetPartition from_rgs(std::span<const std::uint8_t> rgs);

    std::vector<std::uint8_t> to_rgs() const;

    bool operator==(const SetPartition&) const = default;
};

/// True iff no two blocks interleave as i1 < j1 < i2 < j2.
bool is_noncrossing(const SetPartition& p);

/// Visits every non-crossing partition of {1,...,n} exactly once, in
/// lexicographic order of the restricted-growth string. 1 <= n <= cap.
void for_each_nc(int n, const std::function<void(std::span<const std::uint8_t>)>& visit);

/// Materialized NC(n), canonical forms, deterministic order.
std::vector<SetPartition> enumerate_nc(int n);

std::uint64_t count_nc(int n);

/// Flat table of NC(n) restricted-growth strings (row stride n), cached per n.
/// Shared by the cumulant engine's exhaustive sums; safe for concurrent use.
struct NcRgsTable {
    int n = 0;
    std::size_t count = 0;
    std::vector<std::uint8_t> flat;  // count rows of length n

    std::span<const std::uint8_t> row(std::size_t i) const {
        return {flat.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
    }
};

const NcRgsTable& nc_rgs_table(int n);

}  // namespace freeprob
