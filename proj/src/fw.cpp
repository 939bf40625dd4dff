#include "borderstat/fw.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace borderstat::fw {

namespace {

struct Dsu {
    std::vector<int> parent;
    std::vector<int> size;

    explicit Dsu(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // path halving
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (size[a] < size[b]) {
            std::swap(a, b);
        }
        parent[b] = a;
        size[a] += size[b];
    }
};

// Write-once memo; concurrent inserts of equal values are harmless.
std::map<std::vector<int>, int> c_cache;
std::mutex c_mutex;

int c_recursive_impl(const PeriodSet& ps) {
    const int n = ps.length();
    const int m = ps.min_period();
    if (m == 1) {
        return 1;
    }
    if (m >= n) {
        return n;
    }
    // Q = (P - m) \ {0} union {m}, canonicalized to the new length n - m:
    // residues below 1 disappear, members beyond n - m are inert.
    std::vector<int> shifted;
    shifted.reserve(ps.periods().size() + 1);
    for (int p : ps.periods()) {
        if (p - m >= 1) {
            shifted.push_back(p - m);
        }
    }
    shifted.push_back(m);
    const int rest = c_recursive(PeriodSet::canonical(n - m, std::move(shifted)));
    return 2 * m <= n ? rest : rest + 2 * m - n;
}

}  // namespace

int c_recursive(const PeriodSet& ps) {
    {
        std::lock_guard lock(c_mutex);
        auto it = c_cache.find(ps.periods());
        if (it != c_cache.end()) {
            return it->second;
        }
    }
    const int value = c_recursive_impl(ps);
    {
        std::lock_guard lock(c_mutex);
        c_cache.emplace(ps.periods(), value);
    }
    return value;
}

FWWord fw_word(const PeriodSet& ps) {
    const int n = ps.length();
    Dsu dsu(n);
    for (int p : ps.periods()) {
        if (p >= n) {
            continue;
        }
        for (int i = 0; i + p < n; ++i) {
            dsu.unite(i, i + p);
        }
    }
    FWWord out{n, std::vector<int>(n, -1), 0};
    std::vector<int> label(n, -1);
    for (int i = 0; i < n; ++i) {
        const int root = dsu.find(i);
        if (label[root] < 0) {
            label[root] = out.class_count++;
        }
        out.classes[i] = label[root];
    }
    return out;
}

BigCount g_count(int alphabet, const PeriodSet& ps) {
    if (alphabet < 1) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
    return pow_big(static_cast<unsigned long>(alphabet),
                   static_cast<unsigned long>(c_recursive(ps)));
}

}  // namespace borderstat::fw
