#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "adkit/dual.hpp"
#include "adkit/functions.hpp"
#include "adkit/second_order.hpp"
#include "adkit/tape.hpp"

namespace adkit {

/// Which implementation a driver feeds: the generic overloading engines or
/// the hand-derived routines from functions.hpp.
enum class Engine { generic, hand };

inline const char* to_string(Engine e) { return e == Engine::generic ? "generic" : "hand"; }

/// Which seed directions a driver feeds, and how many evaluations that
/// costs.
enum class SeedStrategy { basis_loop, paired_basis, symmetric_pairs, ones_compression };

struct SeedPlan {
    SeedStrategy strategy;

    constexpr std::size_t planned_evaluations(std::size_t n) const {
        switch (strategy) {
            case SeedStrategy::basis_loop:
            case SeedStrategy::paired_basis: return n;
            case SeedStrategy::symmetric_pairs: return n * (n + 1) / 2;
            case SeedStrategy::ones_compression: return 1;
        }
        return 0;
    }
};

struct EvalStats {
    std::size_t evaluations = 0;
    double elapsed_ms = 0.0;  // wall time around the whole driver run
};

template <class T>
struct GradientOutput {
    std::vector<T> gradient;
    EvalStats stats;
};

enum class HessianShape { dense, diagonal };

/// Dense symmetric matrix (row-major) or just the diagonal.
template <class T>
struct HessianResult {
    HessianShape shape = HessianShape::dense;
    std::size_t n = 0;
    std::vector<T> entries;

    T& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const T& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

    std::vector<T> diagonal() const {
        if (shape == HessianShape::diagonal) return entries;
        std::vector<T> d(n, T{});
        for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
        return d;
    }
};

template <class T>
struct HessianOutput {
    HessianResult<T> hessian;
    EvalStats stats;
};

namespace detail {

class DriverTimer {
public:
    DriverTimer() : begin_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - begin_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point begin_;
};

template <class T>
T generic_tangent(FunctionId f, const std::vector<T>& x, const std::vector<T>& t) {
    return f == FunctionId::pairs ? tangent_eval(PairsFn{}, x, t).tangent
                                  : tangent_eval(CubesFn{}, x, t).tangent;
}

template <class T>
std::vector<T> generic_adjoint(FunctionId f, const std::vector<T>& x, T y_a1) {
    if (f == FunctionId::pairs) return reverse_sweep(record(PairsFn{}, x).tape, y_a1);
    return reverse_sweep(record(CubesFn{}, x).tape, y_a1);
}

template <class T>
T generic_t1t2(FunctionId f, const std::vector<T>& x, const std::vector<T>& u,
               const std::vector<T>& v) {
    return f == FunctionId::pairs ? t1t2_eval(PairsFn{}, x, u, v)
                                  : t1t2_eval(CubesFn{}, x, u, v);
}

template <class T>
std::vector<T> generic_a1t2(FunctionId f, const std::vector<T>& x, T y_a1,
                            const std::vector<T>& v) {
    return f == FunctionId::pairs ? a1t2_eval(PairsFn{}, x, y_a1, v)
                                  : a1t2_eval(CubesFn{}, x, y_a1, v);
}

inline void require_hand_second_order(FunctionId f) {
    if (f != FunctionId::cubes)
        throw std::invalid_argument(
            "hand engine has second-order routines for cubes only; use the generic engine");
}

template <class T>
T t1t2_dispatch(Engine e, FunctionId f, const std::vector<T>& x, const std::vector<T>& u,
                const std::vector<T>& v) {
    if (e == Engine::generic) return generic_t1t2(f, x, u, v);
    require_hand_second_order(f);
    return hand_t1t2_cubes(x, u, v);
}

template <class T>
std::vector<T> a1t2_dispatch(Engine e, FunctionId f, const std::vector<T>& x, T y_a1,
                             const std::vector<T>& v) {
    if (e == Engine::generic) return generic_a1t2(f, x, y_a1, v);
    require_hand_second_order(f);
    return hand_a1t2_cubes(x, y_a1, v);
}

}  // namespace detail

/// Gradient entry by entry: one tangent evaluation per Cartesian basis
/// seed, n evaluations in total.
template <class T>
GradientOutput<T> gradient_tangent(Engine e, FunctionId f, const std::vector<T>& x) {
    check_arity(f, x.size());
    const std::size_t n = x.size();
    detail::DriverTimer timer;
    GradientOutput<T> out;
    out.gradient.resize(n);
    std::vector<T> seed(n, T{});
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i) {
        seed[i] = lift<T>(1);
        out.gradient[i] = (e == Engine::hand) ? hand_tangent(f, x, seed)
                                              : detail::generic_tangent(f, x, seed);
        ++evals;
        seed[i] = T{};
    }
    out.stats = {evals, timer.elapsed_ms()};
    return out;
}

/// Whole gradient from a single adjoint evaluation seeded with y_a1 = 1.
template <class T>
GradientOutput<T> gradient_adjoint(Engine e, FunctionId f, const std::vector<T>& x) {
    check_arity(f, x.size());
    detail::DriverTimer timer;
    GradientOutput<T> out;
    out.gradient = (e == Engine::hand) ? hand_adjoint(f, x, lift<T>(1))
                                       : detail::generic_adjoint(f, x, lift<T>(1));
    out.stats = {1, timer.elapsed_ms()};
    return out;
}

/// Dense Hessian from second-order tangents over basis pairs (e_i, e_j),
/// j <= i; the upper triangle is mirrored, never re-evaluated.
template <class T>
HessianOutput<T> hessian_dense_t1t2(Engine e, FunctionId f, const std::vector<T>& x) {
    check_arity(f, x.size());
    const std::size_t n = x.size();
    detail::DriverTimer timer;
    HessianOutput<T> out;
    out.hessian = {HessianShape::dense, n, std::vector<T>(n * n, T{})};
    std::vector<T> u(n, T{}), v(n, T{});
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = lift<T>(1);
        for (std::size_t j = 0; j <= i; ++j) {
            v[j] = lift<T>(1);
            T h = detail::t1t2_dispatch(e, f, x, u, v);
            v[j] = T{};
            ++evals;
            out.hessian.at(i, j) = h;
            out.hessian.at(j, i) = h;
        }
        u[i] = T{};
    }
    out.stats = {evals, timer.elapsed_ms()};
    return out;
}

/// Diagonal Hessian for functions the caller knows to be structurally
/// diagonal: both seeds walk the basis together, n evaluations.
template <class T>
HessianOutput<T> hessian_diag_t1t2(Engine e, FunctionId f, const std::vector<T>& x) {
    check_arity(f, x.size());
    const std::size_t n = x.size();
    detail::DriverTimer timer;
    HessianOutput<T> out;
    out.hessian = {HessianShape::diagonal, n, std::vector<T>(n, T{})};
    std::vector<T> s(n, T{});
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = lift<T>(1);
        out.hessian.entries[i] = detail::t1t2_dispatch(e, f, x, s, s);
        ++evals;
        s[i] = T{};
    }
    out.stats = {evals, timer.elapsed_ms()};
    return out;
}

/// Hessian column by column: n second-order adjoint evaluations with
/// y_a1 = 1 and x_t2 walking the basis.
template <class T>
HessianOutput<T> hessian_columns_a1t2(Engine e, FunctionId f, const std::vector<T>& x) {
    check_arity(f, x.size());
    const std::size_t n = x.size();
    detail::DriverTimer timer;
    HessianOutput<T> out;
    out.hessian = {HessianShape::dense, n, std::vector<T>(n * n, T{})};
    std::vector<T> v(n, T{});
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = lift<T>(1);
        std::vector<T> col = detail::a1t2_dispatch(e, f, x, lift<T>(1), v);
        ++evals;
        v[i] = T{};
        for (std::size_t j = 0; j < n; ++j) out.hessian.at(j, i) = col[j];
    }
    out.stats = {evals, timer.elapsed_ms()};
    return out;
}

/// Direct compression for a structurally diagonal Hessian: the columns are
/// structurally orthogonal, so their sum — one second-order adjoint
/// evaluation against the all-ones seed — is the whole diagonal.
template <class T>
HessianOutput<T> hessian_compressed_a1t2(Engine e, FunctionId f, const std::vector<T>& x) {
    check_arity(f, x.size());
    const std::size_t n = x.size();
    detail::DriverTimer timer;
    HessianOutput<T> out;
    std::vector<T> ones(n, lift<T>(1));
    out.hessian = {HessianShape::diagonal, n,
                   detail::a1t2_dispatch(e, f, x, lift<T>(1), ones)};
    out.stats = {1, timer.elapsed_ms()};
    return out;
}

}  // namespace adkit
