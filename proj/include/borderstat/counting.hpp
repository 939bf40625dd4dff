#pragma once

#include "borderstat/bigint.hpp"
#include "borderstat/core.hpp"

namespace borderstat::counting {

// |F(P, n)|: words whose period set contains P and whose least period is
// min P. The trivial member n of a canonical P is inert: for P = {n}
// this counts the unbordered words.
//
// Dispatch: a divisor-sum (Moebius) formula whenever
// min P <= floor(n/2) + 1, otherwise the subtraction recurrence. Both
// paths are memoized on (alphabet, P, n).
BigCount f_count(int alphabet, const PeriodSet& periods);

// Single top-level step of each strategy, recursing through f_count.
// Exposed so tests can cross-check the two routes on keys where both
// preconditions hold.
BigCount f_count_via_moebius(int alphabet, const PeriodSet& periods);
BigCount f_count_via_recurrence(int alphabet, const PeriodSet& periods);

// u_n, the number of unbordered words:
//   u_1 = l, u_2 = l(l-1),
//   u_n = l u_{n-1}            (n >= 3 odd)
//   u_n = l u_{n-1} - u_{n/2}  (n >= 4 even)
BigCount unbordered_count(int alphabet, int n);

// v_n, the number of words with maximum border length exactly one:
//   v_1 = 0, v_2 = l,
//   v_n = l v_{n-1} - v_{(n+1)/2}  (n >= 3 odd)
//   v_n = l^2 v_{n-2} - v_{n/2}    (n >= 4 even)
// The even case is equivalent to l v_{n-1} + (l-1) v_{n/2}.
BigCount border_one_count(int alphabet, int n);

// Exact distribution of the maximum border length r over all words of
// length n: counts[r] = |F({n-r, n}, n)|, with the fast u/v recurrences
// used for r = 0 and r = n-1.
struct ExactDistribution {
    int alphabet = 0;
    int n = 0;
    std::vector<BigCount> counts;  // index r in [0, n-1]

    BigCount total() const;
    Rational probability(int r) const;  // counts[r] / alphabet^n
};

ExactDistribution exact_distribution(int alphabet, int n, int jobs = 1);

// Expected maximum border length sum_r r * counts[r] / alphabet^n as an
// exact rational.
Rational alpha_n(int alphabet, int n, int jobs = 1);

}  // namespace borderstat::counting
