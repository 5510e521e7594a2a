#pragma once

// Reference computations that share no code with the library. Tests compare
// library results against these, and frozen literals in the tests were
// produced by them.

#include <gmpxx.h>

#include <random>
#include <vector>

namespace oracle {

// [n] at v = v0 straight from (v^{2n} - v^{-2n}) / (v^2 - v^{-2}).
mpq_class q_int_at(int n, const mpq_class &v0);
// [n]! / ([k]! [n-k]!) at v = v0 from the factorial definition.
mpq_class q_binomial_at(int n, int k, const mpq_class &v0);

// A letter z_var^{exp}; exponents are in whatever unit the caller uses.
struct Letter {
    int var;
    int exp;
};

struct NormalForm {
    std::vector<int> exps; // per variable
    long phase = 0;        // sum of omega_ab e f over the swaps performed
};

// Sorts the word into ascending variable order by adjacent swaps, using
// z_a^e z_b^f = q^{omega_ab e f} z_b^f z_a^e, and merges equal neighbours.
NormalForm normal_order(const std::vector<int> &omega, int nvars, std::vector<Letter> word);

// Random skew-symmetric matrix with entries in {-2, 0, 2}.
std::vector<int> random_even_omega(int nvars, std::mt19937 &rng);

// (-1)^{n+1} n x (1+x)^{-(m+n)} 2F1(1-m, 1-n; 2; -x) for n = 1: x / (1+x)^{m+1}.
double hyper_rhs_n1(int m, double x);
// n = 2, m = 2: (x^2 - 2x) / (1+x)^4.
double hyper_rhs_n2_m2(double x);

} // namespace oracle
