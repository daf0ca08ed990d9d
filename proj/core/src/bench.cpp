#include "adkit/bench.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace adkit {

const char* to_string(CarrierKind c) { return c == CarrierKind::i8 ? "i8" : "f64"; }

const char* to_string(DriverKind d) {
    switch (d) {
        case DriverKind::t1: return "t1";
        case DriverKind::a1: return "a1";
        case DriverKind::t1t2_dense: return "t1t2-dense";
        case DriverKind::t1t2_diag: return "t1t2-diag";
        case DriverKind::a1t2_cols: return "a1t2-cols";
        case DriverKind::a1t2_compressed: return "a1t2-compressed";
    }
    return "?";
}

void validate_payload(const GreetingPayload& payload) {
    for (int v : payload)
        if (v < 0 || v > 127)
            throw std::invalid_argument("payload entry " + std::to_string(v) +
                                        " is outside [0, 127]");
}

std::string decode_greeting(std::span<const int> values) {
    std::string out;
    for (int v : values) {
        if (v < 0 || v > 127)
            throw std::invalid_argument("decode_greeting: value " + std::to_string(v) +
                                        " is outside [0, 127]");
        if (v != 0) out.push_back(static_cast<char>(v));
    }
    return out;
}

namespace {

bool is_second_order(DriverKind d) {
    return d != DriverKind::t1 && d != DriverKind::a1;
}

bool is_diagonal_output(DriverKind d) {
    return d == DriverKind::t1t2_diag || d == DriverKind::a1t2_compressed;
}

int to_int(Wrap8 v) { return v.value(); }

int to_int(double v) {
    if (!(std::abs(v) < 1e9))  // also rejects NaN
        throw std::invalid_argument("derivative value " + std::to_string(v) +
                                    " is not a character code");
    return static_cast<int>(std::llround(v));
}

template <class T>
std::vector<int> as_codes(const std::vector<T>& values) {
    std::vector<int> codes;
    codes.reserve(values.size());
    for (const T& v : values) codes.push_back(to_int(v));
    return codes;
}

template <class T>
ReportRow run_with_carrier(const BenchConfig& cfg) {
    const std::vector<T> x = build_input<T>(cfg.n, cfg.payload, cfg.function);
    EvalStats stats;
    std::vector<T> vector_output;
    bool has_vector_output = false;
    switch (cfg.driver) {
        case DriverKind::t1: {
            auto r = gradient_tangent(cfg.engine, cfg.function, x);
            stats = r.stats;
            vector_output = std::move(r.gradient);
            has_vector_output = true;
            break;
        }
        case DriverKind::a1: {
            auto r = gradient_adjoint(cfg.engine, cfg.function, x);
            stats = r.stats;
            vector_output = std::move(r.gradient);
            has_vector_output = true;
            break;
        }
        case DriverKind::t1t2_dense:
            stats = hessian_dense_t1t2(cfg.engine, cfg.function, x).stats;
            break;
        case DriverKind::t1t2_diag: {
            auto r = hessian_diag_t1t2(cfg.engine, cfg.function, x);
            stats = r.stats;
            vector_output = std::move(r.hessian.entries);
            has_vector_output = true;
            break;
        }
        case DriverKind::a1t2_cols:
            stats = hessian_columns_a1t2(cfg.engine, cfg.function, x).stats;
            break;
        case DriverKind::a1t2_compressed: {
            auto r = hessian_compressed_a1t2(cfg.engine, cfg.function, x);
            stats = r.stats;
            vector_output = std::move(r.hessian.entries);
            has_vector_output = true;
            break;
        }
    }
    ReportRow row;
    row.n = cfg.n;
    row.function = to_string(cfg.function);
    row.driver = to_string(cfg.driver);
    row.engine = to_string(cfg.engine);
    row.carrier = to_string(cfg.carrier);
    row.evaluations = stats.evaluations;
    row.elapsed_ms = static_cast<std::int64_t>(std::llround(stats.elapsed_ms));
    if (has_vector_output) {
        auto codes = as_codes(vector_output);
        row.greeting = decode_greeting(codes);
    }
    return row;
}

}  // namespace

void validate_config(const BenchConfig& cfg) {
    if (cfg.function == FunctionId::pairs && is_second_order(cfg.driver) &&
        cfg.engine == Engine::hand)
        throw std::invalid_argument(
            "no hand-coded second-order routines exist for pairs; use --engine generic");
    if (cfg.function == FunctionId::cubes && is_second_order(cfg.driver) &&
        cfg.engine == Engine::generic && cfg.carrier == CarrierKind::i8)
        throw std::invalid_argument(
            "generic second-order cubes on the i8 carrier wraps: the chain-rule intermediates "
            "3*x^2 and 6*x exceed 8 bits for character payloads. Use --engine hand (its "
            "simplified form never leaves 8 bits) or --carrier f64");
}

ReportRow run_benchmark(const BenchConfig& cfg) {
    validate_config(cfg);
    return cfg.carrier == CarrierKind::i8 ? run_with_carrier<Wrap8>(cfg)
                                          : run_with_carrier<double>(cfg);
}

std::string csv_header() {
    return "n,function,driver,engine,carrier,evaluations,elapsed_ms,greeting";
}

std::string to_csv(const ReportRow& r) {
    std::ostringstream os;
    os << r.n << ',' << r.function << ',' << r.driver << ',' << r.engine << ',' << r.carrier
       << ',' << r.evaluations << ',' << r.elapsed_ms << ",\"" << r.greeting << '"';
    return os.str();
}

std::string to_text(const ReportRow& r) {
    std::ostringstream os;
    os << "n=" << r.n << " function=" << r.function << " driver=" << r.driver
       << " engine=" << r.engine << " carrier=" << r.carrier
       << " evaluations=" << r.evaluations << " elapsed_ms=" << r.elapsed_ms << " greeting=\""
       << r.greeting << '"';
    return os.str();
}

std::string to_json(std::span<const ReportRow> rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReportRow& r : rows) {
        arr.push_back({{"n", r.n},
                       {"function", r.function},
                       {"driver", r.driver},
                       {"engine", r.engine},
                       {"carrier", r.carrier},
                       {"evaluations", r.evaluations},
                       {"elapsed_ms", r.elapsed_ms},
                       {"greeting", r.greeting}});
    }
    return arr.dump(2);
}

}  // namespace adkit
