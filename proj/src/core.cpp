#include "borderstat/core.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace borderstat {

Word::Word(int alphabet, std::vector<int> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    if (alphabet_ < 1) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
    for (int a : letters_) {
        if (a < 0 || a >= alphabet_) {
            throw std::invalid_argument("letter index out of range");
        }
    }
}

Word Word::from_ascii(std::string_view text) {
    std::array<int, 256> index;
    index.fill(-1);
    int next = 0;
    std::vector<int> letters;
    letters.reserve(text.size());
    for (unsigned char ch : text) {
        if (index[ch] < 0) {
            index[ch] = next++;
        }
        letters.push_back(index[ch]);
    }
    return Word(std::max(next, 1), std::move(letters));
}

PeriodSet PeriodSet::canonical(int n, std::vector<int> periods) {
    if (n < 1) {
        throw std::invalid_argument("word length must be at least 1");
    }
    for (int p : periods) {
        if (p < 1) {
            throw std::invalid_argument("periods must be positive");
        }
    }
    // Members beyond n hold for every word, so they carry no constraint.
    std::erase_if(periods, [n](int p) { return p > n; });
    periods.push_back(n);
    std::sort(periods.begin(), periods.end());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
    return PeriodSet(n, std::move(periods));
}

bool PeriodSet::contains(int p) const {
    return std::binary_search(periods_.begin(), periods_.end(), p);
}

PeriodSet PeriodSet::with(int p) const {
    std::vector<int> added = periods_;
    added.push_back(p);
    return canonical(n_, std::move(added));
}

BorderSet PeriodSet::to_borders() const {
    std::vector<int> borders;
    borders.reserve(periods_.size());
    for (auto it = periods_.rbegin(); it != periods_.rend(); ++it) {
        borders.push_back(n_ - *it);
    }
    return BorderSet::canonical(n_, std::move(borders));
}

BorderSet BorderSet::canonical(int n, std::vector<int> borders) {
    if (n < 1) {
        throw std::invalid_argument("word length must be at least 1");
    }
    for (int r : borders) {
        if (r < 0 || r >= n) {
            throw std::invalid_argument("border length out of range");
        }
    }
    borders.push_back(0);
    std::sort(borders.begin(), borders.end());
    borders.erase(std::unique(borders.begin(), borders.end()), borders.end());
    return BorderSet(n, std::move(borders));
}

PeriodSet BorderSet::to_periods() const {
    std::vector<int> periods;
    periods.reserve(borders_.size());
    for (auto it = borders_.rbegin(); it != borders_.rend(); ++it) {
        periods.push_back(n_ - *it);
    }
    return PeriodSet::canonical(n_, std::move(periods));
}

namespace {

// Longest proper border of every prefix (the KMP failure function).
std::vector<int> failure_function(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> pi(n, 0);
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
    return pi;
}

void require_nonempty(const Word& w) {
    if (w.length() == 0) {
        throw std::invalid_argument("empty word has no border structure");
    }
}

}  // namespace

BorderSet border_lengths(const Word& w) {
    require_nonempty(w);
    const int n = w.length();
    std::vector<int> pi = failure_function(w.letters());
    // Every border of the word is reached by chaining the failure links
    // from the full-length entry.
    std::vector<int> borders;
    for (int r = pi[n - 1]; r > 0; r = pi[r - 1]) {
        borders.push_back(r);
    }
    return BorderSet::canonical(n, std::move(borders));
}

PeriodSet period_lengths(const Word& w) {
    return border_lengths(w).to_periods();
}

int max_border(const Word& w) {
    require_nonempty(w);
    return failure_function(w.letters()).back();
}

int least_period(const Word& w) {
    return w.length() - max_border(w);
}

bool is_unbordered(const Word& w) {
    return max_border(w) == 0;
}

}  // namespace borderstat
