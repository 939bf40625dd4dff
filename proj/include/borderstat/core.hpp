#pragma once

#include <string_view>
#include <vector>

namespace borderstat {

// A word over the alphabet {0, ..., alphabet-1}. Letters are integer
// indices, not characters; any display mapping is the caller's concern.
class Word {
public:
    Word(int alphabet, std::vector<int> letters);

    // Maps each distinct character to a fresh index in order of first
    // occurrence ("alfalfa" -> 0 1 2 0 1 2 0). Convenient for tests and
    // display-oriented input.
    static Word from_ascii(std::string_view text);

    int alphabet() const { return alphabet_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const { return letters_; }

private:
    int alphabet_;
    std::vector<int> letters_;
};

class BorderSet;

// Canonical set of claimed periods of a length-n word: sorted, all
// members in [1, n], and n itself always present (border length 0).
class PeriodSet {
public:
    // Sorts, removes duplicates, drops members > n (trivially satisfied)
    // and inserts n. Throws std::invalid_argument on n < 1 or p < 1.
    static PeriodSet canonical(int n, std::vector<int> periods = {});

    int length() const { return n_; }
    const std::vector<int>& periods() const { return periods_; }
    int min_period() const { return periods_.front(); }
    bool contains(int p) const;

    // Canonical form of this set with one more claimed period.
    PeriodSet with(int p) const;

    BorderSet to_borders() const;

    bool operator==(const PeriodSet& other) const = default;

private:
    PeriodSet(int n, std::vector<int> periods)
        : n_(n), periods_(std::move(periods)) {}

    int n_ = 0;
    std::vector<int> periods_;
};

// Dual view: border lengths, sorted, all members in [0, n-1], with 0
// always present. borders == { n - p : p in periods } for the dual set.
class BorderSet {
public:
    static BorderSet canonical(int n, std::vector<int> borders = {});

    int length() const { return n_; }
    const std::vector<int>& borders() const { return borders_; }
    int max_border() const { return borders_.back(); }

    PeriodSet to_periods() const;

    bool operator==(const BorderSet& other) const = default;

private:
    BorderSet(int n, std::vector<int> borders)
        : n_(n), borders_(std::move(borders)) {}

    int n_ = 0;
    std::vector<int> borders_;
};

// All r in [0, n-1] such that the length-r prefix equals the length-r
// suffix; 0 is always included. Failure-function based, O(n).
// Rejects the empty word.
BorderSet border_lengths(const Word& w);

// All p in [1, n] with w[i] == w[i+p] wherever defined; equals
// { n - r : r in border_lengths(w) }. Rejects the empty word.
PeriodSet period_lengths(const Word& w);

int least_period(const Word& w);
int max_border(const Word& w);
bool is_unbordered(const Word& w);

}  // namespace borderstat
