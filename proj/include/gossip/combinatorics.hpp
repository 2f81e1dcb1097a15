#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gossip/errors.hpp"

namespace gossip {

// C(n, k) in exact 64-bit arithmetic; throws ResourceError on overflow.
long long binomial(int n, int k);

// a / b with an exactness check; throws ConsistencyError when b does not divide a.
long long exact_div(long long a, long long b, const char* what);

// Visit all k-subsets of {1..n} in lexicographic order.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& visit);

// In-place lexicographic successor of a k-subset of {1..n}; false when exhausted.
bool next_combination(std::vector<int>& comb, int n);

// Largest w with w*w*den <= num (integer floor of sqrt(num/den)); num, den >= 0, den > 0.
int floor_sqrt_ratio(long long num, long long den);

} // namespace gossip
