#include "borderstat/oracle.hpp"

#include <stdexcept>
#include <thread>

#include "borderstat/errors.hpp"

namespace borderstat::oracle {

namespace {

// alphabet^n if it fits the budget, else budget_error.
std::uint64_t checked_total(int alphabet, int n, std::uint64_t budget) {
    if (alphabet < 1) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
    if (n < 1) {
        throw std::invalid_argument("word length must be at least 1");
    }
    const auto base = static_cast<std::uint64_t>(alphabet);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / base) {
            throw budget_error("enumeration budget exceeded");
        }
        total *= base;
    }
    if (total > budget) {
        throw budget_error("enumeration budget exceeded");
    }
    return total;
}

// Word at a given lexicographic index (first position most significant).
std::vector<int> word_at_index(int alphabet, int n, std::uint64_t index) {
    std::vector<int> w(n, 0);
    const auto base = static_cast<std::uint64_t>(alphabet);
    for (int i = n - 1; i >= 0; --i) {
        w[i] = static_cast<int>(index % base);
        index /= base;
    }
    return w;
}

// Advances to the lexicographic successor; the caller guarantees one exists.
void advance(std::vector<int>& w, int alphabet) {
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        if (++w[i] < alphabet) {
            return;
        }
        w[i] = 0;
    }
}

int max_border_of(const std::vector<int>& s, std::vector<int>& pi) {
    const int n = static_cast<int>(s.size());
    pi[0] = 0;
    for (int i = 1; i < n; ++i) {
        int k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) {
            k = pi[k - 1];
        }
        if (s[i] == s[k]) {
            ++k;
        }
        pi[i] = k;
    }
    return pi[n - 1];
}

// Tabulates maximum border lengths for the index range [start, start+count).
std::vector<std::uint64_t> count_chunk(int alphabet, int n, std::uint64_t start,
                                       std::uint64_t count) {
    std::vector<std::uint64_t> counts(n, 0);
    std::vector<int> w = word_at_index(alphabet, n, start);
    std::vector<int> pi(n, 0);
    for (std::uint64_t k = 0; k < count; ++k) {
        ++counts[max_border_of(w, pi)];
        if (k + 1 < count) {
            advance(w, alphabet);
        }
    }
    return counts;
}

}  // namespace

BigCount DistributionTable::total() const {
    BigCount sum = 0;
    for (const BigCount& c : counts) {
        sum += c;
    }
    return sum;
}

void for_each_word(int alphabet, int n,
                   const std::function<void(const std::vector<int>&)>& visit,
                   std::uint64_t budget) {
    const std::uint64_t total = checked_total(alphabet, n, budget);
    std::vector<int> w(n, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        visit(w);
        if (k + 1 < total) {
            advance(w, alphabet);
        }
    }
}

DistributionTable enumerate_distribution(int alphabet, int n,
                                         std::uint64_t budget, int jobs) {
    const std::uint64_t total = checked_total(alphabet, n, budget);
    if (jobs < 1) {
        jobs = 1;
    }
    if (static_cast<std::uint64_t>(jobs) > total) {
        jobs = static_cast<int>(total);
    }

    std::vector<std::vector<std::uint64_t>> partial(jobs);
    if (jobs == 1) {
        partial[0] = count_chunk(alphabet, n, 0, total);
    } else {
        const std::uint64_t chunk = total / jobs;
        const std::uint64_t rem = total % jobs;
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        std::uint64_t start = 0;
        for (int j = 0; j < jobs; ++j) {
            const std::uint64_t count = chunk + (static_cast<std::uint64_t>(j) < rem ? 1 : 0);
            workers.emplace_back([&partial, j, alphabet, n, start, count] {
                partial[j] = count_chunk(alphabet, n, start, count);
            });
            start += count;
        }
        for (auto& t : workers) {
            t.join();
        }
    }

    DistributionTable table{alphabet, n, std::vector<BigCount>(n, BigCount(0))};
    for (const auto& local : partial) {
        for (int r = 0; r < n; ++r) {
            table.counts[r] += local[r];
        }
    }
    return table;
}

BigCount count_with_periods(int alphabet, const PeriodSet& periods,
                            std::uint64_t budget) {
    const int n = periods.length();
    std::uint64_t matches = 0;
    for_each_word(alphabet, n,
                  [&](const std::vector<int>& w) {
                      for (int p : periods.periods()) {
                          for (int i = 0; i + p < n; ++i) {
                              if (w[i] != w[i + p]) {
                                  return;
                              }
                          }
                      }
                      ++matches;
                  },
                  budget);
    return BigCount(static_cast<unsigned long>(matches));
}

BigCount count_least_period(int alphabet, int p, int n, std::uint64_t budget) {
    if (p < 1 || p > n) {
        throw std::invalid_argument("least period must lie in [1, n]");
    }
    DistributionTable table = enumerate_distribution(alphabet, n, budget);
    return table.counts[n - p];
}

}  // namespace borderstat::oracle
