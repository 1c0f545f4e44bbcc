#pragma once

namespace displab::special {

/// Physicists' Hermite polynomial H_s(x), three-term recurrence.
double hermite(int s, double x);

/// Laguerre polynomial L_s(x), three-term recurrence.
double laguerre(int s, double x);

/// sin(x)/x with the removable singularity filled by series for |x| < 1e-4.
double sinc(double x);

/// Unit rectangle: 0 for |x| > 1/2, 1/2 at |x| = 1/2, 1 for |x| < 1/2.
double rect(double x);

}  // namespace displab::special
