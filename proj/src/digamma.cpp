#include <cmath>
#include <string>

#include "abscat/errors.hpp"
#include "abscat/specfun.hpp"

namespace abscat
{
//! Upward recurrence to x >= 10, then the Stirling-type asymptotic series.
double digamma(double x)
{
    if (!(x > 0) || !std::isfinite(x))
    {
        throw DomainError("digamma: argument must be positive, got "
                          + std::to_string(x));
    }
    double shift = 0;
    while (x < 10)
    {
        shift -= 1.0 / x;
        x += 1.0;
    }
    double const inv2 = 1.0 / (x * x);
    // B_{2k} / (2k) for k = 1..8
    double const series
        = inv2
          * (1.0 / 12
             - inv2
                   * (1.0 / 120
                      - inv2
                            * (1.0 / 252
                               - inv2
                                     * (1.0 / 240
                                        - inv2
                                              * (1.0 / 132
                                                 - inv2
                                                       * (691.0 / 32760
                                                          - inv2
                                                                * (1.0 / 12
                                                                   - inv2 * 3617.0
                                                                         / 8160)))))));
    return shift + std::log(x) - 0.5 / x - series;
}
}  // namespace abscat
