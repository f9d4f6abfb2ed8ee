#pragma once

#include <cstdint>
#include <vector>

#include "fracdec/rational.hpp"

namespace fracdec {

// C(n,k) in uint64; n <= 64 stays exact (C(64,32) < 2^64).
// Convention throughout: C(n,k) = 0 for k < 0 or k > n.
std::uint64_t binom(long n, long k);

// Arbitrary-precision binomial, same convention.
Int binom_z(unsigned long n, long k);

// Colexicographic rank of a sorted k-subset: rank(S) = sum C(S[i], i+1).
std::uint64_t colex_rank(const std::vector<int>& set);

// Inverse of colex_rank for k-subsets of {0..n-1}.
std::vector<int> colex_unrank(std::uint64_t rank, int n, int k);

// Visit all k-subsets of {0..n-1} in colex order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        visit(const_cast<const std::vector<int>&>(s));
        // colex successor: bump the lowest index that can move
        int i = 0;
        while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n)) ++i;
        if (i == k) return;
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j;
    }
}

}  // namespace fracdec
