#include "geocurves/bernstein.hpp"

#include <string>

#include "geocurves/errors.hpp"

namespace geocurves {

std::vector<double> bernstein_row(int n, double t) {
    if (n < 0) throw ValidationError("bernstein degree must be >= 0");
    if (!(t >= 0.0 && t <= 1.0))
        throw ValidationError("bernstein parameter t must lie in [0,1], got " + std::to_string(t));
    std::vector<double> row(static_cast<size_t>(n) + 1, 0.0);
    row[0] = 1.0;
    const double s = 1.0 - t;
    for (int r = 1; r <= n; ++r) {
        row[static_cast<size_t>(r)] = t * row[static_cast<size_t>(r) - 1];
        for (int i = r - 1; i > 0; --i)
            row[static_cast<size_t>(i)] = s * row[static_cast<size_t>(i)] + t * row[static_cast<size_t>(i) - 1];
        row[0] *= s;
    }
    return row;
}

double bernstein(int i, int n, double t) {
    if (i < 0 || i > n)
        throw ValidationError("bernstein index out of range: i = " + std::to_string(i) +
                              ", n = " + std::to_string(n));
    return bernstein_row(n, t)[static_cast<size_t>(i)];
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double c = 1.0;
    for (int j = 1; j <= k; ++j)
        c = c * static_cast<double>(n - k + j) / static_cast<double>(j);
    // integer-valued; round away accumulated error (exact for n <= 30)
    return (n <= 56) ? static_cast<double>(static_cast<long long>(c + 0.5)) : c;
}

} // namespace geocurves
