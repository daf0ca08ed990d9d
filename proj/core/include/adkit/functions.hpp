#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "adkit/carrier.hpp"

namespace adkit {

/// The two built-in benchmark functions.
///   pairs: y = sum of x[2i] * x[2i+1] (even length)
///   cubes: y = (1/6) * sum of x[i]^3
enum class FunctionId { pairs, cubes };

inline const char* to_string(FunctionId f) {
    return f == FunctionId::pairs ? "pairs" : "cubes";
}

/// Generic program bodies, evaluable with any differentiation-capable
/// value type (carrier, Dual, Dual2, TapeVar).
struct PairsFn {
    template <class V>
    V operator()(std::span<const V> x) const {
        V y{};
        for (std::size_t i = 0; i + 1 < x.size(); i += 2) y += x[i] * x[i + 1];
        return y;
    }
};

struct CubesFn {
    template <class V>
    V operator()(std::span<const V> x) const {
        V y{};
        for (const V& xi : x) y += powi(xi, 3);
        return y / 6;
    }
};

inline void check_arity(FunctionId f, std::size_t n) {
    if (f == FunctionId::pairs && n % 2 != 0)
        throw std::invalid_argument("pairs requires an even number of inputs, got " +
                                    std::to_string(n));
}

template <class T>
T primal(FunctionId f, const std::vector<T>& x) {
    check_arity(f, x.size());
    std::span<const T> xs(x);
    return f == FunctionId::pairs ? PairsFn{}(xs) : CubesFn{}(xs);
}

namespace detail {
inline void check_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": vector lengths differ");
}
}  // namespace detail

/// Hand-derived first-order tangent codes. These transcribe the closed
/// forms with their algebraic simplifications intact (cubes squares first
/// and halves once at the end), which keeps the 8-bit path exact where the
/// generic chain would wrap.
template <class T>
T hand_tangent(FunctionId f, const std::vector<T>& x, const std::vector<T>& x_t1) {
    detail::check_same_size(x.size(), x_t1.size(), "hand_tangent");
    check_arity(f, x.size());
    T y_t1{};
    if (f == FunctionId::pairs) {
        for (std::size_t i = 0; i + 1 < x.size(); i += 2)
            y_t1 += x_t1[i] * x[i + 1] + x[i] * x_t1[i + 1];
        return y_t1;
    }
    for (std::size_t i = 0; i < x.size(); ++i) y_t1 += powi(x[i], 2) * x_t1[i];
    return y_t1 / 2;
}

/// Hand-derived first-order adjoint codes: one reverse pass writes every
/// input adjoint y_a1 * df/dx_i directly.
template <class T>
std::vector<T> hand_adjoint(FunctionId f, const std::vector<T>& x, T y_a1) {
    check_arity(f, x.size());
    const std::size_t n = x.size();
    std::vector<T> x_a1(n, T{});
    if (f == FunctionId::pairs) {
        for (std::size_t i = n; i >= 2; i -= 2) {
            x_a1[i - 2] = y_a1 * x[i - 1];
            x_a1[i - 1] = y_a1 * x[i - 2];
        }
        return x_a1;
    }
    for (std::size_t i = n; i-- > 0;) x_a1[i] = powi(x[i], 2) / 2 * y_a1;
    return x_a1;
}

/// Hand-derived second-order tangent for cubes: x_t1^T * f'' * x_t2
/// collapses to sum of x[i]*x_t1[i]*x_t2[i], with no division left.
template <class T>
T hand_t1t2_cubes(const std::vector<T>& x, const std::vector<T>& x_t1,
                  const std::vector<T>& x_t2) {
    detail::check_same_size(x.size(), x_t1.size(), "hand_t1t2_cubes");
    detail::check_same_size(x.size(), x_t2.size(), "hand_t1t2_cubes");
    T y{};
    for (std::size_t i = 0; i < x.size(); ++i) y += x[i] * x_t1[i] * x_t2[i];
    return y;
}

/// Hand-derived second-order adjoint for cubes: y_a1 * f'' * x_t2 is
/// elementwise x[i]*y_a1*x_t2[i].
template <class T>
std::vector<T> hand_a1t2_cubes(const std::vector<T>& x, T y_a1, const std::vector<T>& x_t2) {
    detail::check_same_size(x.size(), x_t2.size(), "hand_a1t2_cubes");
    const std::size_t n = x.size();
    std::vector<T> out(n, T{});
    for (std::size_t i = n; i-- > 0;) out[i] = x[i] * y_a1 * x_t2[i];
    return out;
}

}  // namespace adkit
