#pragma once

#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "adkit/carrier.hpp"

namespace adkit {

/// Value paired with a directional derivative. Running a program on Dual
/// inputs seeded with a direction yields the primal result and the
/// derivative along that direction in one pass, with no gradient storage.
///
/// Nests: Dual<Dual<T>> carries the second-order cross term (see
/// second_order.hpp).
template <class T>
struct Dual {
    T value{};
    T tangent{};

    constexpr Dual() = default;
    constexpr Dual(T v) : value(v) {}  // constants lift with zero tangent
    constexpr Dual(T v, T t) : value(v), tangent(t) {}

    friend constexpr Dual operator+(const Dual& a, const Dual& b) {
        return {a.value + b.value, a.tangent + b.tangent};
    }
    friend constexpr Dual operator-(const Dual& a, const Dual& b) {
        return {a.value - b.value, a.tangent - b.tangent};
    }
    friend constexpr Dual operator-(const Dual& a) { return {-a.value, -a.tangent}; }

    // product rule: (uv)' = u'v + uv'
    friend constexpr Dual operator*(const Dual& a, const Dual& b) {
        return {a.value * b.value, a.tangent * b.value + a.value * b.tangent};
    }

    // quotient rule: (u/v)' = (u'v - uv')/v^2. Only over carriers with
    // exact reciprocals; integer carriers divide by constants instead.
    friend constexpr Dual operator/(const Dual& a, const Dual& b)
        requires is_real_v<T>
    {
        return {a.value / b.value,
                (a.tangent * b.value - a.value * b.tangent) / (b.value * b.value)};
    }

    constexpr Dual& operator+=(const Dual& o) { return *this = *this + o; }
    constexpr Dual& operator-=(const Dual& o) { return *this = *this - o; }
    constexpr Dual& operator*=(const Dual& o) { return *this = *this * o; }

    friend constexpr bool operator==(const Dual&, const Dual&) = default;

    friend constexpr Dual operator+(const Dual& a, int k) { return a + lift<Dual>(k); }
    friend constexpr Dual operator+(int k, const Dual& a) { return lift<Dual>(k) + a; }
    friend constexpr Dual operator-(const Dual& a, int k) { return a - lift<Dual>(k); }
    friend constexpr Dual operator-(int k, const Dual& a) { return lift<Dual>(k) - a; }
    friend constexpr Dual operator*(const Dual& a, int k) { return a * lift<Dual>(k); }
    friend constexpr Dual operator*(int k, const Dual& a) { return lift<Dual>(k) * a; }
    friend constexpr Dual operator/(const Dual& a, int k) {
        return div_constant(a, lift<Dual>(k));
    }
    constexpr Dual& operator+=(int k) { return *this = *this + k; }
    constexpr Dual& operator-=(int k) { return *this = *this - k; }
    constexpr Dual& operator*=(int k) { return *this = *this * k; }
    constexpr Dual& operator/=(int k) { return *this = *this / k; }

    friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
        return os << "(" << d.value << ", " << d.tangent << ")";
    }
};

template <class T>
struct value_traits<Dual<T>> {
    static constexpr Dual<T> from_int(int k) { return Dual<T>(lift<T>(k)); }
};

template <class T>
inline constexpr bool is_real_v<Dual<T>> = is_real_v<T>;

/// (u/c)' = u'/c when c is constant; valid for every carrier.
template <class T>
constexpr Dual<T> div_constant(const Dual<T>& a, const Dual<T>& c) {
    return {div_constant(a.value, c.value), div_constant(a.tangent, c.value)};
}

template <class T>
struct TangentResult {
    T value{};
    T tangent{};
};

/// Runs a program on Dual inputs seeded with x_t1 and returns the primal
/// value together with the directional derivative f'(x) * x_t1.
template <class T, class F>
TangentResult<T> tangent_eval(F&& program, const std::vector<T>& x, const std::vector<T>& x_t1) {
    if (x.size() != x_t1.size())
        throw std::invalid_argument("tangent_eval: input and seed lengths differ");
    std::vector<Dual<T>> duals;
    duals.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) duals.emplace_back(x[i], x_t1[i]);
    Dual<T> y = program(std::span<const Dual<T>>(duals));
    return {y.value, y.tangent};
}

}  // namespace adkit
