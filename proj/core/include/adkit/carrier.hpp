#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace adkit {

/// Signed 8-bit integer with two's-complement wrapping +, -, *.
///
/// Division truncates toward zero and refuses a zero divisor; everything
/// else wraps modulo 256 onto [-128, 127]. Arithmetic is carried out in
/// int and narrowed, which C++20 defines as the modular conversion.
struct Wrap8 {
    std::int8_t bits = 0;

    constexpr Wrap8() = default;
    constexpr explicit Wrap8(int v) noexcept : bits(static_cast<std::int8_t>(v)) {}

    constexpr int value() const noexcept { return bits; }

    friend constexpr Wrap8 operator+(Wrap8 a, Wrap8 b) noexcept { return Wrap8(int(a.bits) + int(b.bits)); }
    friend constexpr Wrap8 operator-(Wrap8 a, Wrap8 b) noexcept { return Wrap8(int(a.bits) - int(b.bits)); }
    friend constexpr Wrap8 operator*(Wrap8 a, Wrap8 b) noexcept { return Wrap8(int(a.bits) * int(b.bits)); }
    friend constexpr Wrap8 operator-(Wrap8 a) noexcept { return Wrap8(-int(a.bits)); }

    friend constexpr Wrap8 operator/(Wrap8 a, Wrap8 b) {
        if (b.bits == 0) throw std::domain_error("Wrap8: division by zero");
        return Wrap8(int(a.bits) / int(b.bits));
    }

    constexpr Wrap8& operator+=(Wrap8 o) noexcept { return *this = *this + o; }
    constexpr Wrap8& operator-=(Wrap8 o) noexcept { return *this = *this - o; }
    constexpr Wrap8& operator*=(Wrap8 o) noexcept { return *this = *this * o; }
    constexpr Wrap8& operator/=(Wrap8 o) { return *this = *this / o; }

    friend constexpr bool operator==(Wrap8, Wrap8) noexcept = default;
    friend constexpr auto operator<=>(Wrap8, Wrap8) noexcept = default;

    // int mixes wrap the literal first
    friend constexpr Wrap8 operator+(Wrap8 a, int k) noexcept { return a + Wrap8(k); }
    friend constexpr Wrap8 operator+(int k, Wrap8 a) noexcept { return Wrap8(k) + a; }
    friend constexpr Wrap8 operator-(Wrap8 a, int k) noexcept { return a - Wrap8(k); }
    friend constexpr Wrap8 operator-(int k, Wrap8 a) noexcept { return Wrap8(k) - a; }
    friend constexpr Wrap8 operator*(Wrap8 a, int k) noexcept { return a * Wrap8(k); }
    friend constexpr Wrap8 operator*(int k, Wrap8 a) noexcept { return Wrap8(k) * a; }
    friend constexpr Wrap8 operator/(Wrap8 a, int k) { return a / Wrap8(k); }

    constexpr Wrap8& operator+=(int k) noexcept { return *this = *this + k; }
    constexpr Wrap8& operator-=(int k) noexcept { return *this = *this - k; }
    constexpr Wrap8& operator*=(int k) noexcept { return *this = *this * k; }
    constexpr Wrap8& operator/=(int k) { return *this = *this / k; }

    friend std::ostream& operator<<(std::ostream& os, Wrap8 a) { return os << int(a.bits); }
};

/// How to make a value of a differentiation-capable scalar type from an
/// int literal. Specialized for every type the engines are generic over.
template <class V>
struct value_traits;

template <>
struct value_traits<double> {
    static constexpr double from_int(int k) noexcept { return static_cast<double>(k); }
};

template <>
struct value_traits<Wrap8> {
    static constexpr Wrap8 from_int(int k) noexcept { return Wrap8(k); }
};

template <class V>
concept AdValue = requires(int k) {
    { value_traits<V>::from_int(k) } -> std::same_as<V>;
};

template <AdValue V>
constexpr V lift(int k) {
    return value_traits<V>::from_int(k);
}

/// Carriers whose division carries full derivative information (the
/// quotient rule is only defined over these).
template <class T>
inline constexpr bool is_real_v = false;

template <>
inline constexpr bool is_real_v<double> = true;

/// Division by a value known to hold no derivative information. Scalar
/// overloads; adkit::Dual adds a componentwise one.
constexpr double div_constant(double a, double c) noexcept { return a / c; }
constexpr Wrap8 div_constant(Wrap8 a, Wrap8 c) { return a / c; }

/// base multiplied by itself k times, entirely in the argument type's own
/// arithmetic (k = 0 yields one). No floating-point pow, no promotion.
template <AdValue V>
constexpr V powi(const V& base, int k) {
    if (k < 0) throw std::invalid_argument("powi: exponent must be non-negative");
    V r = lift<V>(1);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

}  // namespace adkit
