#pragma once

namespace plunge {

/// Complementary error function. Total on finite input, values in (0, 2).
double erfc(double x);

/// Inverse of erfc on (0, 2). Throws ValidationError outside the open interval.
double erfc_inv(double y);

/// exp(-mean) mean^j / j!, accurate to a few ulps for large mean.
double poisson_pmf(long j, double mean);

/// log(n!) for n >= 0.
double log_factorial(long n);

}  // namespace plunge
