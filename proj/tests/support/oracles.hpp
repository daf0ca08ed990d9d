#pragma once

// Test-only oracles, deliberately independent of the differentiation
// engines: finite differences drive every Float64 derivative check, and
// wide-integer arithmetic reduced mod 256 drives the wrapping checks.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "adkit/carrier.hpp"

namespace oracles {

using Primal = std::function<double(const std::vector<double>&)>;

/// Central difference along direction i.
inline double fd_partial(const Primal& f, std::vector<double> x, std::size_t i,
                         double h = 1e-6) {
    x[i] += h;
    const double up = f(x);
    x[i] -= 2 * h;
    const double down = f(x);
    return (up - down) / (2 * h);
}

inline std::vector<double> fd_gradient(const Primal& f, const std::vector<double>& x,
                                       double h = 1e-6) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = fd_partial(f, x, i, h);
    return g;
}

/// Second-order central difference for the (i, j) Hessian entry.
inline double fd_hessian_entry(const Primal& f, std::vector<double> x, std::size_t i,
                               std::size_t j, double h = 1e-3) {
    if (i == j) {
        const double mid = f(x);
        x[i] += h;
        const double up = f(x);
        x[i] -= 2 * h;
        const double down = f(x);
        return (up - 2 * mid + down) / (h * h);
    }
    x[i] += h;
    x[j] += h;
    const double pp = f(x);
    x[j] -= 2 * h;
    const double pm = f(x);
    x[i] -= 2 * h;
    const double mm = f(x);
    x[j] += 2 * h;
    const double mp = f(x);
    return (pp - pm - mp + mm) / (4 * h * h);
}

/// |a - b| against tol scaled by max(1, |b|): relative with a unit floor so
/// exact zeros stay checkable.
inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

/// Wide-integer reference for the wrapping carrier: compute in int64 and
/// reduce onto [-128, 127].
inline int wrap_to_i8(std::int64_t wide) {
    std::int64_t m = ((wide % 256) + 256) % 256;
    return static_cast<int>(m >= 128 ? m - 256 : m);
}

inline int wide_powi_mod256(std::int64_t base, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = wrap_to_i8(r * base);
    return static_cast<int>(r);
}

}  // namespace oracles
