#pragma once

#include <vector>

#include "chainforge/bigint.hpp"

namespace chainforge {

// C(n, k) for n >= 0; zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

// Generalized binomial with an arbitrary integer upper index:
// u*(u-1)*...*(u-l+1)/l!, and 0 whenever l < 0.
BigInt binom_signed(long long u, long long l);

// n! / (a! * c! * (n-a-c)!); zero if any part is negative.
BigInt multinomial_ac(long long n, long long a, long long c);

// Falling factorial x*(x-1)*...*(x-w+1); empty product is 1.
BigInt falling_factorial(long long x, long long w);

// Figurate numbers: 0 for i <= 0, C(i+d-1, d) for i > 0 (so the d = 0 case is
// the positive indicator).
BigInt figurate(long long d, long long i);

// Number of points of {0..d}^n on each level 0..d*n, by row convolution.
std::vector<BigInt> layer_row(int n, int d);

// Convenience: coefficient extraction from layer_row with range checking.
BigInt layer_size(int n, int d, int m);

BigInt pow_int(long long base, unsigned long long exp);

}  // namespace chainforge
