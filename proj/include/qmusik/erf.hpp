#pragma once

#include <cmath>

namespace qmusik {

namespace detail {

// Rational-approximation coefficients from W. J. Cody's SPECFUN CALERF;
// accurate to a couple of ulps in double precision on each branch.
inline constexpr double kErfA[5] = {3.1611237438705656, 113.864154151050156,
                                    377.485237685302021, 3209.37758913846947,
                                    0.185777706184603153};
inline constexpr double kErfB[4] = {23.6012909523441209, 244.024637934444173,
                                    1282.61652607737228, 2844.23683343917062};
inline constexpr double kErfC[9] = {
    0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
    298.635138197400131,  881.95222124176909,  1712.04761263407058,
    2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8};
inline constexpr double kErfD[8] = {15.7449261107098347, 117.693950891312499,
                                    537.181101862009858, 1621.38957456669019,
                                    3290.79923573345963, 4362.61909014324716,
                                    3439.36767414372164, 1230.33935480374942};
inline constexpr double kErfP[6] = {0.305326634961232344, 0.360344899949804439,
                                    0.125781726111229246, 0.0160837851487422766,
                                    6.58749161529837803e-4, 0.0163153871373020978};
inline constexpr double kErfQ[5] = {2.56852019228982242, 1.87295284992346047,
                                    0.527905102951428412, 0.0605183413124413191,
                                    0.00233520497626869185};
inline constexpr double kInvSqrtPi = 0.56418958354775628695;

// erfc(y) for y > 0.46875 via the mid-range or asymptotic rational form.
inline double erfc_tail(double y) {
    double num, den;
    if (y <= 4.0) {
        num = kErfC[8] * y;
        den = y;
        for (int i = 0; i < 7; ++i) {
            num = (num + kErfC[i]) * y;
            den = (den + kErfD[i]) * y;
        }
        num = (num + kErfC[7]) / (den + kErfD[7]);
    } else {
        const double ysq = 1.0 / (y * y);
        num = kErfP[5] * ysq;
        den = ysq;
        for (int i = 0; i < 4; ++i) {
            num = (num + kErfP[i]) * ysq;
            den = (den + kErfQ[i]) * ysq;
        }
        num = ysq * (num + kErfP[4]) / (den + kErfQ[4]);
        num = (kInvSqrtPi - num) / y;
    }
    // Split exp(-y^2) to keep the argument reduction exact.
    const double yfloor = std::trunc(y * 16.0) / 16.0;
    const double delta = (y - yfloor) * (y + yfloor);
    return std::exp(-yfloor * yfloor) * std::exp(-delta) * num;
}

}  // namespace detail

/// erf(x) = (2/sqrt(pi)) * integral_0^x exp(-t^2) dt, relative error below
/// 1e-14 over the full double range (checked against a 30-digit reference).
inline double erf(double x) {
    const double y = std::fabs(x);
    if (y <= 0.46875) {
        const double ysq = (y > 1.11e-16) ? y * y : 0.0;
        double num = detail::kErfA[4] * ysq;
        double den = ysq;
        for (int i = 0; i < 3; ++i) {
            num = (num + detail::kErfA[i]) * ysq;
            den = (den + detail::kErfB[i]) * ysq;
        }
        return x * (num + detail::kErfA[3]) / (den + detail::kErfB[3]);
    }
    const double erfc = (y >= 27.0) ? 0.0 : detail::erfc_tail(y);
    const double result = (0.5 - erfc) + 0.5;
    return x < 0 ? -result : result;
}

}  // namespace qmusik
