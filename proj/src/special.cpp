#include "plunge/special.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "plunge/errors.hpp"

namespace plunge {

double erfc(double x) { return std::erfc(x); }

double erfc_inv(double y) {
    if (!(y > 0.0 && y < 2.0)) {
        throw ValidationError("erfc_inv: argument must lie in (0, 2), got " + std::to_string(y));
    }
    return boost::math::erfc_inv(y);
}

double poisson_pmf(long j, double mean) {
    if (j < 0) throw ValidationError("poisson_pmf: negative index");
    if (!(mean >= 0.0) || !std::isfinite(mean)) throw ValidationError("poisson_pmf: mean must be finite and nonnegative");
    if (mean == 0.0) return j == 0 ? 1.0 : 0.0;
    return boost::math::gamma_p_derivative(static_cast<double>(j) + 1.0, mean);
}

double log_factorial(long n) {
    if (n < 0) throw ValidationError("log_factorial: negative argument");
    if (n < 2) return 0.0;
    return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace plunge
