// Benchmark harness for the derivative drivers: builds padded input
// vectors, runs any function/driver/engine/carrier combination, decodes the
// greeting hidden in the derivative values, and reports evaluation counts
// and wall times as text, CSV, or JSON.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adkit/adkit.hpp"

namespace {

std::vector<adkit::ReportRow> run_all(adkit::BenchConfig config,
                                      const std::vector<std::size_t>& sweep) {
    std::vector<adkit::ReportRow> rows;
    if (sweep.empty()) {
        rows.push_back(adkit::run_benchmark(config));
        return rows;
    }
    for (std::size_t n : sweep) {
        config.n = n;
        rows.push_back(adkit::run_benchmark(config));
    }
    return rows;
}

void print_rows(const std::vector<adkit::ReportRow>& rows, adkit::ReportFormat format) {
    using adkit::ReportFormat;
    switch (format) {
        case ReportFormat::text:
            for (const auto& r : rows) std::cout << adkit::to_text(r) << '\n';
            break;
        case ReportFormat::csv:
            std::cout << adkit::csv_header() << '\n';
            for (const auto& r : rows) std::cout << adkit::to_csv(r) << '\n';
            break;
        case ReportFormat::json:
            std::cout << adkit::to_json(rows) << '\n';
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace adkit;

    CLI::App app{"derivative driver benchmark harness"};

    BenchConfig config;
    std::vector<int> payload_arg;
    std::vector<std::size_t> sweep;

    const std::map<std::string, FunctionId> functions{{"pairs", FunctionId::pairs},
                                                      {"cubes", FunctionId::cubes}};
    const std::map<std::string, DriverKind> drivers{
        {"t1", DriverKind::t1},
        {"a1", DriverKind::a1},
        {"t1t2-dense", DriverKind::t1t2_dense},
        {"t1t2-diag", DriverKind::t1t2_diag},
        {"a1t2-cols", DriverKind::a1t2_cols},
        {"a1t2-compressed", DriverKind::a1t2_compressed}};
    const std::map<std::string, Engine> engines{{"generic", Engine::generic},
                                                {"hand", Engine::hand}};
    const std::map<std::string, CarrierKind> carriers{{"i8", CarrierKind::i8},
                                                      {"f64", CarrierKind::f64}};
    const std::map<std::string, ReportFormat> formats{{"text", ReportFormat::text},
                                                      {"csv", ReportFormat::csv},
                                                      {"json", ReportFormat::json}};

    app.add_option("--function", config.function, "target function")
        ->required()
        ->transform(CLI::CheckedTransformer(functions, CLI::ignore_case));
    app.add_option("--driver", config.driver, "derivative driver")
        ->required()
        ->transform(CLI::CheckedTransformer(drivers, CLI::ignore_case));
    app.add_option("--engine", config.engine, "generic overloading engines or hand-derived code")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
    app.add_option("--carrier", config.carrier, "arithmetic profile")
        ->transform(CLI::CheckedTransformer(carriers, CLI::ignore_case));
    app.add_option("--n", config.n, "input size (>= 10; even for pairs)");
    app.add_option("--payload", payload_arg,
                   "10 comma-separated character codes in [0,127] "
                   "(default: the Merry Xmas payload for pairs, the Happy 2026 payload for cubes)")
        ->delimiter(',')
        ->expected(10);
    app.add_option("--sweep", sweep, "comma-separated list of input sizes; one report row per n")
        ->delimiter(',');
    app.add_option("--format", config.format, "report format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    CLI11_PARSE(app, argc, argv);

    if (payload_arg.empty()) {
        config.payload =
            config.function == FunctionId::pairs ? kMerryXmasPayload : kHappy2026Payload;
    } else {
        std::copy(payload_arg.begin(), payload_arg.end(), config.payload.begin());
    }

    try {
        print_rows(run_all(config, sweep), config.format);
    } catch (const std::exception& e) {
        std::cerr << "adbench: " << e.what() << '\n';
        return EXIT_FAILURE;
    }
    return EXIT_SUCCESS;
}
