#include "chainforge/binomials.hpp"

#include <stdexcept>

namespace chainforge {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = r / BigInt(i);  // exact at every step
    }
    return r;
}

BigInt binom_signed(long long u, long long l) {
    if (l < 0) return 0;
    if (u >= 0) return binomial(u, l);
    BigInt num = 1;
    for (long long t = 0; t < l; ++t) num *= BigInt(u - t);
    return num / BigInt::factorial(static_cast<unsigned>(l));
}

BigInt multinomial_ac(long long n, long long a, long long c) {
    long long b = n - a - c;
    if (a < 0 || c < 0 || b < 0 || n < 0) return 0;
    return binomial(n, a) * binomial(n - a, c);
}

BigInt falling_factorial(long long x, long long w) {
    BigInt r = 1;
    for (long long i = 0; i < w; ++i) r *= BigInt(x - i);
    return r;
}

BigInt figurate(long long d, long long i) {
    if (i <= 0) return 0;
    return binom_signed(i + d - 1, d);
}

std::vector<BigInt> layer_row(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("layer_row: need n >= 0, d >= 1");
    std::vector<BigInt> row = {BigInt(1)};
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(row.size() + d, BigInt(0));
        for (std::size_t m = 0; m < row.size(); ++m) {
            if (row[m].is_zero()) continue;
            for (int v = 0; v <= d; ++v) next[m + v] += row[m];
        }
        row = std::move(next);
    }
    return row;
}

BigInt layer_size(int n, int d, int m) {
    if (m < 0 || m > d * n) throw std::out_of_range("layer_size: level out of range");
    if (d == 1) return binomial(n, m);
    return layer_row(n, d)[static_cast<std::size_t>(m)];
}

BigInt pow_int(long long base, unsigned long long exp) {
    return BigInt::pow(BigInt(base), exp);
}

}  // namespace chainforge
