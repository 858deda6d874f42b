#pragma once

#include <map>
#include <string>
#include <vector>

#include "chainforge/weights.hpp"

namespace chainforge {

// Summation objects attached to one (n, k) pair, with shared memo tables.
//
// Sign conventions: the alternating sums S, S' and the recursive U and F are
// evaluated with the kernel binom(i+d-1, d) for the figurate factor, which
// agrees with figurate() at every i >= 1 and fills in the d = 0, i = 0 term
// as 1. Generalized binomials (negative upper index) appear throughout; a
// negative lower index is always 0.
class ClosedForms {
public:
    ClosedForms(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }

    // S(d,a,c) = sum_{i>=a} P_d(i) * C(n; i, c) * (-1)^(i-a), and its closed
    // form C(n,c) * C(n-c-d-1, n-a-c). S' is the transposed version summing
    // over the twos slot.
    BigInt s_sum(int d, int a, int c) const;
    BigInt s_closed(int d, int a, int c) const;
    BigInt sp_sum(int d, int a, int c) const;
    BigInt sp_closed(int d, int a, int c) const;

    // Whether S(d,a,c) > S(d,a+1,c-1). Strict throughout the d = 0 row
    // (away from the origin); the degree-raised rows touch equality on the
    // a = c + d edge, which the corresponding checker treats as allowed.
    bool s_diff_positive(int d, int a, int c) const;

    // Recursively defined U over type pairs, mirrored for a < c, zero
    // outside the simplex. Coincides with the group weights on outer types.
    const BigInt& u_type(int a, int c);

    // The layer version used by the d = 1 table: signed partial sums of
    // binomial differences by residue class mod (k+1).
    const BigInt& u_layer(int m);

    // The double sum F_k(n, B, C): over all integers c congruent to C
    // mod (k+1), with l = (C-c)/(k+1),
    //   sum_{0<=i<=B} C(n,c+i) * C(l+B-i, B-i) * C(c+l+i, i) * (-1)^(B-i).
    // The inner kernel is the analytic continuation that keeps the negative-l
    // tail alive; it matches the l >= 0 form C(l+B-i, l) * C(c+l+i, c+l).
    const BigInt& f_sum(int B, int C);

    // Layer sums by residue class: B(n, m) = sum_{i = m mod k+1} C(n, i).
    BigInt layer_mod_sum(int m) const;
    // Doubled distance from n/2 of the residue class's closest layer.
    int layer_mod_distance(int m) const;

private:
    int n_;
    int k_;
    std::vector<std::vector<BigInt>> mult_;  // mult_[x][c] = C(n; x, c)
    std::map<std::pair<int, int>, BigInt> u_cache_;
    std::map<std::pair<int, int>, BigInt> f_cache_;
    std::map<int, BigInt> u1_cache_;

    const BigInt& mult(long long x, long long c) const;
    BigInt u_type_raw(int a, int c);
};

// Alternating weight sums over a table column/row with figurate kernel.
Rational r_eval(const WeightTable& table, int d, int a, int c);
Rational rp_eval(const WeightTable& table, int d, int a, int c);

BigInt layer_mod_sum(int n, int k, int m);

struct LayerModComparison {
    int ordering = 0;          // sign of B(n,m) - B(n,m')
    int distance_ordering = 0; // sign of dist(m') - dist(m)
    bool criterion_match = false;
};

// The bigger residue-class sum is the one whose class comes closer to the
// middle; stated for k >= 2 (mod-2 classes tie while distances differ).
LayerModComparison layer_mod_compare(int n, int k, int m, int m2);

struct PropertyReport {
    std::string lemma;
    int n = 0;
    int k = 0;
    std::string status;  // "pass" | "fail"
    std::string note;
    std::string counterexample;
    long long instances = 0;

    bool passed() const { return status == "pass"; }
};

// Exhaustive single-(n,k) checkers for every closed form and inequality the
// weight construction relies on. Names:
//   s_closed, s_prime_closed, s_diff_positive,
//   step1, step2, step1_upper, step2_upper,
//   u_outer_eq_w, u_a0_closed, inner_w_eq_u_diff, inner_w_eq_u_diff_d1,
//   u_diff_eq_f_diff, f_symmetry, f_monotone, f_pascal, f_b0_positive, f_c0,
//   layer_mod_criterion
PropertyReport check_lemma(const std::string& name, int n, int k);

const std::vector<std::string>& all_lemma_names();

}  // namespace chainforge
