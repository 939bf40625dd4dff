#pragma once

#include "borderstat/bigint.hpp"
#include "borderstat/core.hpp"

namespace borderstat::fw {

// The word of length n realizing a given period set with the maximum
// possible number of distinct letters, unique up to letter renaming.
// Positions carry class labels assigned in order of first occurrence.
struct FWWord {
    int n = 0;
    std::vector<int> classes;  // size n, labels in [0, class_count)
    int class_count = 0;       // the alphabet size c(P, n)
};

// c(P, n) via the recursion
//   c(P, n) = 1                      if m = 1
//           = n                      if m >= n
//           = c(Q, n - m)            if 2m <= n
//           = c(Q, n - m) + 2m - n   if m < n < 2m
// with m = min P and Q the canonical form of (P - m) \ {0} union {m}
// relative to the new length n - m. Memoized.
int c_recursive(const PeriodSet& periods);

// Maximal-alphabet word by positional equivalence closure: positions i
// and i+p are identified for every p in P with p < n. Independent of
// c_recursive; the two must agree on class_count.
FWWord fw_word(const PeriodSet& periods);

// |G(P, n)| = alphabet^{c(P, n)}: every word with periods P is a
// letter-to-letter coding of the maximal-alphabet word.
BigCount g_count(int alphabet, const PeriodSet& periods);

}  // namespace borderstat::fw
