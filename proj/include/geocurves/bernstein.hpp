#pragma once

#include <vector>

namespace geocurves {

/// B_i^n(t) = C(n,i) t^i (1-t)^(n-i), evaluated by the stable triangular
/// recurrence rather than factorials.
double bernstein(int i, int n, double t);

/// All of B_0^n(t) ... B_n^n(t); the row sums to 1.
std::vector<double> bernstein_row(int n, double t);

/// Binomial coefficient as an exact double for the sizes used here.
double binomial(int n, int k);

} // namespace geocurves
