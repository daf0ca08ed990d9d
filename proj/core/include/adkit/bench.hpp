#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "adkit/drivers.hpp"
#include "adkit/functions.hpp"

namespace adkit {

/// Ten character codes, each in [0, 127], scattered over the benchmark
/// input vector. The derivatives of the built-in functions hand them back,
/// which is what the decoded greeting makes visible.
using GreetingPayload = std::array<int, 10>;

/// Decodes to "Merry Xmas" through the pairs gradient.
inline constexpr GreetingPayload kMerryXmasPayload{101, 77, 114, 114, 32, 121, 109, 88, 115, 97};

/// Decodes to "Happy 2026" through the cubes Hessian diagonal.
inline constexpr GreetingPayload kHappy2026Payload{72, 97, 112, 112, 121, 32, 50, 48, 50, 54};

enum class CarrierKind { i8, f64 };
enum class DriverKind { t1, a1, t1t2_dense, t1t2_diag, a1t2_cols, a1t2_compressed };
enum class ReportFormat { text, csv, json };

const char* to_string(CarrierKind c);
const char* to_string(DriverKind d);

struct BenchConfig {
    FunctionId function = FunctionId::pairs;
    DriverKind driver = DriverKind::t1;
    Engine engine = Engine::generic;
    CarrierKind carrier = CarrierKind::f64;
    std::size_t n = 10;
    GreetingPayload payload = kMerryXmasPayload;
    ReportFormat format = ReportFormat::text;
};

struct ReportRow {
    std::size_t n = 0;
    std::string function;
    std::string driver;
    std::string engine;
    std::string carrier;
    std::size_t evaluations = 0;
    std::int64_t elapsed_ms = 0;
    std::string greeting;
};

void validate_payload(const GreetingPayload& payload);

/// Length-n vector of zeros with the payload placed as five adjacent pairs
/// at the starts of five equal blocks of size 2*(n/10); n = 10 reproduces
/// the payload verbatim.
template <class T>
std::vector<T> build_input(std::size_t n, const GreetingPayload& payload, FunctionId f) {
    if (n < 10)
        throw std::invalid_argument("build_input: n must be at least 10, got " + std::to_string(n));
    check_arity(f, n);
    validate_payload(payload);
    std::vector<T> x(n, T{});
    const std::size_t stride = 2 * (n / 10);
    for (std::size_t k = 0; k < 5; ++k) {
        x[k * stride] = lift<T>(payload[2 * k]);
        x[k * stride + 1] = lift<T>(payload[2 * k + 1]);
    }
    return x;
}

/// Concatenates the characters of the nonzero codes, in order. Zeros decode
/// to nothing, the way empty 0-terminated strings print as nothing.
std::string decode_greeting(std::span<const int> values);

/// Rejects combinations the engines cannot serve (no hand-coded
/// second-order routines for pairs; generic second-order cubes wraps on
/// the 8-bit carrier).
void validate_config(const BenchConfig& config);

/// Builds the input, runs the configured driver once, and reports the
/// evaluation count, wall time, and — for drivers whose output is a vector
/// — the decoded greeting. Everything but elapsed_ms is a pure function of
/// the config.
ReportRow run_benchmark(const BenchConfig& config);

std::string csv_header();
std::string to_csv(const ReportRow& row);
std::string to_text(const ReportRow& row);
std::string to_json(std::span<const ReportRow> rows);

}  // namespace adkit
