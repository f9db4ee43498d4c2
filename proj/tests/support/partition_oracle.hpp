#pragma once

#include <cstdint>
#include <vector>

namespace degen_test {

// Brute-force set-partition census. Enumerates every partition of
// {0, ..., total-1} by restricted-growth strings and returns counts[b] =
// number of partitions into exactly b nonempty blocks, subject to the side
// condition that the first `distinct_first` elements land in pairwise
// distinct blocks. distinct_first = 0 gives the classical census.
std::vector<std::int64_t> partition_block_census(int total, int distinct_first);

// Classical Stirling-set count via the census above.
std::int64_t set_partition_count(int n, int k);

// Count of partitions of {0, ..., n+r-1} into k+r blocks where the first r
// elements occupy pairwise distinct blocks.
std::int64_t r_partition_count(int n, int k, int r);

}  // namespace degen_test
