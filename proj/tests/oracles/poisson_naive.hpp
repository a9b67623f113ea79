#pragma once

// Disk eigenvalue 1 - exp(-mu) sum_{j<=k} mu^j / j! by literal term-wise
// summation in long double. Only sensible for moderate mu (<= ~40).

#include <cmath>
#include <numbers>

namespace oracle {

inline long double disk_eigenvalue_naive(long k, long double radius) {
    const long double mu = std::numbers::pi_v<long double> * radius * radius;
    long double term = 1.0L;  // mu^j / j!
    long double sum = 1.0L;
    for (long j = 1; j <= k; ++j) {
        term *= mu / static_cast<long double>(j);
        sum += term;
    }
    const long double head = std::exp(-mu) * sum;
    if (head < 0.5L) return 1.0L - head;
    // sum the tail directly when the head is close to 1
    long double tail = 0.0L;
    long double t = term;
    for (long j = k + 1; j < k + 2000; ++j) {
        t *= mu / static_cast<long double>(j);
        tail += t;
        if (t < 1e-30L * tail) break;
    }
    return std::exp(-mu) * tail;
}

}  // namespace oracle
