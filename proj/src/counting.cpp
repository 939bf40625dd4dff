#include "borderstat/counting.hpp"

#include <future>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "borderstat/fw.hpp"

namespace borderstat::counting {

namespace {

std::vector<int> divisors(int m) {
    std::vector<int> small;
    std::vector<int> large;
    for (int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) {
                large.push_back(m / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int moebius(int m) {
    int mu = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    if (m > 1) {
        mu = -mu;
    }
    return mu;
}

// Memo key: alphabet size plus the canonical period list (whose last
// member is the word length).
using Key = std::pair<int, std::vector<int>>;

std::map<Key, BigCount> f_cache;
std::shared_mutex f_mutex;

bool moebius_applies(const PeriodSet& ps) {
    return ps.min_period() <= ps.length() / 2 + 1;
}

BigCount moebius_step(int alphabet, const PeriodSet& ps) {
    // Any word with period m and a smaller least period p satisfies
    // p + m - 1 <= n, so the periodicity lemma forces p | m. Summing the
    // divisor lattice with Moebius weights isolates least period m.
    const int m = ps.min_period();
    BigCount acc = 0;
    for (int d : divisors(m)) {
        const int mu = moebius(m / d);
        if (mu == 0) {
            continue;
        }
        const BigCount g = fw::g_count(alphabet, ps.with(d));
        if (mu > 0) {
            acc += g;
        } else {
            acc -= g;
        }
    }
    return acc;
}

BigCount recurrence_step(int alphabet, const PeriodSet& ps) {
    // Start from all words with periods P and subtract, for each
    // p in [ceil(m/2), m-1], the words whose actual least period is p.
    // Smaller p cannot occur: period p combined with p < m/2 would give
    // the excluded period 2p < m.
    const int n = ps.length();
    const int m = ps.min_period();
    BigCount acc = fw::g_count(alphabet, ps);
    for (int p = (m + 1) / 2; p <= m - 1; ++p) {
        std::vector<int> shifted;
        shifted.reserve(ps.periods().size() + 1);
        for (int q : ps.periods()) {
            shifted.push_back(q - p);
        }
        if (p < (n + 1) / 2) {
            // Dropping the last p positions is a bijection onto the
            // shorter least-period-p words.
            shifted.push_back(p);
            acc -= f_count(alphabet, PeriodSet::canonical(n - p, std::move(shifted)));
        } else {
            // Here words factor as v u v with |v| = n - p free of small
            // periods and u an arbitrary middle of length 2p - n.
            BigCount h = f_count(alphabet, PeriodSet::canonical(n - p, std::move(shifted)));
            h *= pow_big(static_cast<unsigned long>(alphabet),
                         static_cast<unsigned long>(2 * p - n));
            acc -= h;
        }
    }
    return acc;
}

}  // namespace

BigCount f_count(int alphabet, const PeriodSet& ps) {
    if (alphabet < 1) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
    const Key key{alphabet, ps.periods()};
    {
        std::shared_lock lock(f_mutex);
        auto it = f_cache.find(key);
        if (it != f_cache.end()) {
            return it->second;
        }
    }
    BigCount value = moebius_applies(ps) ? moebius_step(alphabet, ps)
                                         : recurrence_step(alphabet, ps);
    {
        std::unique_lock lock(f_mutex);
        f_cache.emplace(key, value);
    }
    return value;
}

BigCount f_count_via_moebius(int alphabet, const PeriodSet& ps) {
    if (!moebius_applies(ps)) {
        throw std::invalid_argument(
            "divisor-sum formula requires min P <= floor(n/2) + 1");
    }
    return moebius_step(alphabet, ps);
}

BigCount f_count_via_recurrence(int alphabet, const PeriodSet& ps) {
    return recurrence_step(alphabet, ps);
}

BigCount unbordered_count(int alphabet, int n) {
    if (alphabet < 1 || n < 1) {
        throw std::invalid_argument("need alphabet >= 1 and n >= 1");
    }
    const BigCount l(alphabet);
    std::vector<BigCount> u(n + 1);
    u[1] = l;
    if (n >= 2) {
        u[2] = l * (l - 1);
    }
    for (int k = 3; k <= n; ++k) {
        u[k] = l * u[k - 1];
        if (k % 2 == 0) {
            u[k] -= u[k / 2];
        }
    }
    return u[n];
}

BigCount border_one_count(int alphabet, int n) {
    if (alphabet < 1 || n < 1) {
        throw std::invalid_argument("need alphabet >= 1 and n >= 1");
    }
    const BigCount l(alphabet);
    std::vector<BigCount> v(n + 1);
    v[1] = 0;
    if (n >= 2) {
        v[2] = l;
    }
    for (int k = 3; k <= n; ++k) {
        if (k % 2 == 1) {
            v[k] = l * v[k - 1] - v[(k + 1) / 2];
        } else {
            v[k] = l * l * v[k - 2] - v[k / 2];
        }
    }
    return v[n];
}

BigCount ExactDistribution::total() const {
    BigCount sum = 0;
    for (const BigCount& c : counts) {
        sum += c;
    }
    return sum;
}

Rational ExactDistribution::probability(int r) const {
    return make_ratio(counts.at(r),
                      pow_big(static_cast<unsigned long>(alphabet),
                              static_cast<unsigned long>(n)));
}

ExactDistribution exact_distribution(int alphabet, int n, int jobs) {
    if (alphabet < 1 || n < 1) {
        throw std::invalid_argument("need alphabet >= 1 and n >= 1");
    }
    ExactDistribution dist{alphabet, n, std::vector<BigCount>(n, BigCount(0))};
    dist.counts[0] = unbordered_count(alphabet, n);
    if (n >= 2) {
        dist.counts[n - 1] = border_one_count(alphabet, n);
    }

    auto fill = [&](int r) {
        dist.counts[r] =
            f_count(alphabet, PeriodSet::canonical(n, {n - r}));
    };
    if (jobs <= 1) {
        for (int r = 1; r <= n - 2; ++r) {
            fill(r);
        }
    } else {
        std::vector<std::future<void>> pending;
        for (int r = 1; r <= n - 2; ++r) {
            pending.push_back(std::async(std::launch::async, fill, r));
            if (static_cast<int>(pending.size()) >= jobs) {
                for (auto& f : pending) {
                    f.get();
                }
                pending.clear();
            }
        }
        for (auto& f : pending) {
            f.get();
        }
    }
    return dist;
}

Rational alpha_n(int alphabet, int n, int jobs) {
    ExactDistribution dist = exact_distribution(alphabet, n, jobs);
    BigCount weighted = 0;
    for (int r = 1; r < n; ++r) {
        weighted += r * dist.counts[r];
    }
    return make_ratio(weighted, pow_big(static_cast<unsigned long>(alphabet),
                                        static_cast<unsigned long>(n)));
}

}  // namespace borderstat::counting
