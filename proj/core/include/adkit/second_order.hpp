#pragma once

#include <stdexcept>
#include <vector>

#include "adkit/dual.hpp"
#include "adkit/tape.hpp"

namespace adkit {

/// Second-order value: a dual of duals. The inner pair carries the primal
/// and the first direction, the outer pair differentiates once more along
/// the second direction; the nested tangent-of-tangent is the mixed term.
template <class T>
using Dual2 = Dual<Dual<T>>;

template <class T>
constexpr Dual2<T> make_dual2(T value, T t1, T t2, T t12) {
    return Dual2<T>(Dual<T>(value, t1), Dual<T>(t2, t12));
}

/// Tangent-over-tangent: runs the program on Dual2 inputs seeded with two
/// directions and returns x_t1^T * f''(x) * x_t2, never forming the
/// Hessian.
template <class T, class F>
T t1t2_eval(F&& program, const std::vector<T>& x, const std::vector<T>& x_t1,
            const std::vector<T>& x_t2) {
    if (x.size() != x_t1.size() || x.size() != x_t2.size())
        throw std::invalid_argument("t1t2_eval: input and seed lengths differ");
    std::vector<Dual2<T>> duals;
    duals.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        duals.push_back(make_dual2(x[i], x_t1[i], x_t2[i], T{}));
    Dual2<T> y = program(std::span<const Dual2<T>>(duals));
    return y.tangent.tangent;
}

/// Tangent-over-adjoint: the adjoint engine run with Dual carriers. Inputs
/// pair the point with the second-direction seed, the output adjoint seed
/// is (y_a1, 0), and the tangent halves of the input adjoints are
/// y_a1 * f''(x) * x_t2 — one Hessian-vector product per sweep.
template <class T, class F>
std::vector<T> a1t2_eval(F&& program, const std::vector<T>& x, T y_a1,
                         const std::vector<T>& x_t2) {
    if (x.size() != x_t2.size())
        throw std::invalid_argument("a1t2_eval: input and seed lengths differ");
    std::vector<Dual<T>> duals;
    duals.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) duals.emplace_back(x[i], x_t2[i]);
    Recording<Dual<T>> rec = record(program, duals);
    std::vector<Dual<T>> adj = reverse_sweep(rec.tape, Dual<T>(y_a1, T{}));
    std::vector<T> out;
    out.reserve(adj.size());
    for (const Dual<T>& a : adj) out.push_back(a.tangent);
    return out;
}

}  // namespace adkit
