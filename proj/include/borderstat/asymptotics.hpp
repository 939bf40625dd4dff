#pragma once

#include <vector>

#include "borderstat/bigint.hpp"
#include "borderstat/decimal.hpp"

namespace borderstat::asymptotics {

// Compute budgets for the finite-length evaluations behind the limit
// constants. Exceeding them raises precision_error.
struct Budget {
    int max_n = 512;  // largest finite length n*
    int max_r = 512;  // largest border length kept in the alpha sum
};

// One term of the iterated functional-equation expansion
//   L(1/l^{2^k - 1}) = b_k - c_k * L(1/l^{2^{k+1} - 1}),
// so L(1/l) = sum_{k>=1} (-1)^{k+1} b_k prod_{i<k} c_i.
struct SeriesTerm {
    int index = 0;
    Rational b;
    Rational c;
};

// Expansion data for the generating functions behind lambda(0) and
// lambda(1); exposed so tests can pin individual coefficients.
std::vector<SeriesTerm> l0_series_terms(int alphabet, int count);
std::vector<SeriesTerm> l1_series_terms(int alphabet, int count);

// Signed expansion terms (-1)^{k+1} b_k prod_{i<k} c_i, k = 1..count.
std::vector<Rational> l0_expansion(int alphabet, int count);
std::vector<Rational> l1_expansion(int alphabet, int count);

// Rigorous bound on |lambda(r) - lambda(r, n)|, any r. Consecutive
// lengths differ by at most l^-floor(k/2); summing over k >= n, each
// exponent value j >= floor(n/2) occurs at most twice, so the tail is
// at most 2 * l^-floor(n/2) * l/(l-1).
Rational finite_length_tail(int alphabet, int n);

// Rigorous bound on sum_{r > r_max} r * lambda(r). Since
// lambda(r, n) <= l^-r, the tail is at most
// sum_{r>R} r x^r = x^{R+1} ((R+1) - R x) / (1-x)^2 with x = 1/l.
Rational border_weight_tail(int alphabet, int r_max);

// Asymptotic probability that a word is unbordered: 1 - L0(1/l),
// evaluated by alternating series with the remainder bounded by the
// first omitted term. err covers the truncation.
ErrDecimal lambda0_limit(int alphabet, int digits);

// Asymptotic probability of maximum border length one: 1/l - L1(1/l).
ErrDecimal lambda1_limit(int alphabet, int digits);

// Asymptotic probability of maximum border length exactly r, via the
// exact counting recurrences at a finite length n* chosen so that
// finite_length_tail(alphabet, n*) < 10^-digits / 2.
ErrDecimal lambda_r_limit(int alphabet, int r, int digits,
                          const Budget& budget = {}, int jobs = 1);

// Asymptotic expected maximum border length sum_r r * lambda(r),
// evaluated as sum_{r<=R} r * lambda(r, n*) with explicit error terms
// for the finite length and for the dropped r > R tail.
ErrDecimal alpha_limit(int alphabet, int digits,
                       const Budget& budget = {}, int jobs = 1);

}  // namespace borderstat::asymptotics
