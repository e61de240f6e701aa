#pragma once

#include <vector>

namespace geostring {

// Partition of a permutation of [L] into monotone subsequences; each part
// lists the positions (0-based indices into sigma) in increasing order.
struct MonotonePartition {
    std::vector<std::vector<int>> parts;
    std::vector<bool> increasing;  // per part, under sigma
};

// Smallest z with z(z+1)/2 >= ceil(L/3)*3... see monotone_partition_bound.
// The asserted bound is ceil(sqrt(6m + 1/4) - 1/2) for L = 3m (L rounded up
// to a multiple of 3).
int monotone_partition_bound(int length);

// Greedy longest-monotone peeling (longest monotone subsequence by dynamic
// programming, removed repeatedly), with patience covers and an exact
// set-cover DP as fallbacks when the greedy result exceeds the bound.
MonotonePartition monotone_partition(const std::vector<int>& sigma);

bool monotone_partition_valid(const std::vector<int>& sigma, const MonotonePartition& mp);

}  // namespace geostring
