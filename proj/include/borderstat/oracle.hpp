#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "borderstat/bigint.hpp"
#include "borderstat/core.hpp"

namespace borderstat::oracle {

// Default cap on alphabet^n for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 26;

// Exact counts of words with maximum border length exactly r, obtained
// by brute force. Ground truth for the recurrence implementations.
struct DistributionTable {
    int alphabet = 0;
    int n = 0;
    std::vector<BigCount> counts;  // index r in [0, n-1]

    BigCount total() const;
};

// Visits every word of length n over the given alphabet in lexicographic
// order. Throws budget_error if alphabet^n exceeds the budget.
void for_each_word(int alphabet, int n,
                   const std::function<void(const std::vector<int>&)>& visit,
                   std::uint64_t budget = kDefaultEnumBudget);

// Tabulates the maximum border length of every word of length n.
// With jobs > 1 the index range is partitioned across threads; partial
// tables are summed in partition order, so the result is identical to
// the sequential run.
DistributionTable enumerate_distribution(int alphabet, int n,
                                         std::uint64_t budget = kDefaultEnumBudget,
                                         int jobs = 1);

// |G(P, n)|: words having every member of P as a period.
BigCount count_with_periods(int alphabet, const PeriodSet& periods,
                            std::uint64_t budget = kDefaultEnumBudget);

// |F({p, n}, n)|: words whose least period is exactly p.
BigCount count_least_period(int alphabet, int p, int n,
                            std::uint64_t budget = kDefaultEnumBudget);

}  // namespace borderstat::oracle
