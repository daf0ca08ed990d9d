#include <doctest.h>

#include <random>
#include <thread>

#include "adkit/dual.hpp"
#include "adkit/functions.hpp"
#include "adkit/tape.hpp"
#include "support/oracles.hpp"
#include "support/test_programs.hpp"

using adkit::FunctionId;
using adkit::OpKind;
using adkit::record;
using adkit::reverse_sweep;
using adkit::tangent_eval;
using adkit::TapeVar;
using adkit::Wrap8;

namespace {

template <class T>
std::size_t count_kind(const adkit::Tape<T>& tape, OpKind k) {
    std::size_t c = 0;
    for (const auto& nd : tape.nodes())
        if (nd.kind == k) ++c;
    return c;
}

}  // namespace

TEST_SUITE("tape") {
    TEST_CASE("recording pairs keeps one node per elementary op") {
        std::vector<double> x{2, 1, 4, 3};
        auto rec = record(adkit::PairsFn{}, x);
        CHECK(rec.value == 14.0);
        CHECK(count_kind(rec.tape, OpKind::mul) == 2);
        CHECK(count_kind(rec.tape, OpKind::add) == 2);
        CHECK(count_kind(rec.tape, OpKind::input) == 4);
        // replay: every argument handle refers to an earlier node
        const auto nodes = rec.tape.nodes();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i].kind == OpKind::add || nodes[i].kind == OpKind::mul) {
                CHECK(nodes[i].a < i);
                CHECK(nodes[i].b < i);
            }
        }
    }

    TEST_CASE("constant programs record no input-dependent nodes") {
        auto five = [](std::span<const TapeVar<double>>) { return TapeVar<double>(5.0); };
        auto rec = record(five, std::vector<double>{1, 2});
        CHECK(rec.value == 5.0);
        CHECK(count_kind(rec.tape, OpKind::add) == 0);
        CHECK(count_kind(rec.tape, OpKind::mul) == 0);
        auto sweep = reverse_sweep(rec.tape, 1.0);
        CHECK(sweep == std::vector<double>{0.0, 0.0});
    }

    TEST_CASE("recording cubes reproduces the primal") {
        std::vector<double> x{1, 2, 3, 4};
        auto rec = record(adkit::CubesFn{}, x);
        CHECK(rec.value == doctest::Approx(100.0 / 6.0).epsilon(1e-15));
        CHECK(count_kind(rec.tape, OpKind::powi) == 4);
        CHECK(count_kind(rec.tape, OpKind::div_const) == 1);
    }

    TEST_CASE("reverse sweep worked example: pairs gradient is the swapped pairs") {
        std::vector<double> x{2, 1, 4, 3};
        auto rec = record(adkit::PairsFn{}, x);
        CHECK(reverse_sweep(rec.tape, 1.0) == std::vector<double>{1, 2, 3, 4});
        CHECK(reverse_sweep(rec.tape, 0.0) == std::vector<double>(4, 0.0));
    }

    TEST_CASE("a finished tape serves many sweeps") {
        std::vector<double> x{1, 2, 3, 4};
        auto rec = record(adkit::CubesFn{}, x);
        // d/dx_i = x_i^2 / 2, scaled by the seed
        CHECK(reverse_sweep(rec.tape, 2.0) == std::vector<double>{1, 4, 9, 16});
        CHECK(reverse_sweep(rec.tape, 1.0) == std::vector<double>{0.5, 2, 4.5, 8});
    }

    TEST_CASE("a completed tape is immutable: sweeps may run concurrently") {
        std::vector<double> x{1, 2, 3, 4};
        const auto rec = record(adkit::CubesFn{}, x);
        std::vector<std::vector<double>> results(4);
        {
            std::vector<std::jthread> workers;
            for (int t = 0; t < 4; ++t)
                workers.emplace_back([&, t] {
                    for (int i = 0; i < 100; ++i)
                        results[t] = reverse_sweep(rec.tape, double(t + 1));
                });
        }
        for (int t = 0; t < 4; ++t)
            CHECK(results[t] == std::vector<double>{0.5 * (t + 1), 2.0 * (t + 1),
                                                    4.5 * (t + 1), 8.0 * (t + 1)});
    }

    TEST_CASE("division by a non-constant is not recordable") {
        auto ratio = [](std::span<const TapeVar<double>> x) { return x[0] / x[1]; };
        CHECK_THROWS_AS(record(ratio, std::vector<double>{1, 2}), std::invalid_argument);
    }

    TEST_CASE("repeated use of a variable accumulates, not overwrites") {
        std::vector<double> x{1.5, -2.0, 0.5};
        auto rec = record(progs::PolyProg{}, x);
        auto grad = reverse_sweep(rec.tape, 1.0);
        auto primal = [](const std::vector<double>& v) {
            return std::pow(v[0], 3) + v[0] * v[1] + 2 * v[1] * v[2] + v[0] - 3;
        };
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(oracles::close(grad[i], oracles::fd_partial(primal, x, i), 1e-6));
    }

    TEST_CASE("adjoint-tangent identity <x_a1, x_t1> == y_a1 * y_t1") {
        std::mt19937 rng(41);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<double> x(4), t(4);
            for (double& e : x) e = dist(rng);
            for (double& e : t) e = dist(rng);
            const double w = dist(rng);
            for (auto fid : {FunctionId::pairs, FunctionId::cubes}) {
                const double y_t1 =
                    fid == FunctionId::pairs
                        ? tangent_eval(adkit::PairsFn{}, x, t).tangent
                        : tangent_eval(adkit::CubesFn{}, x, t).tangent;
                auto rec = fid == FunctionId::pairs ? record(adkit::PairsFn{}, x)
                                                    : record(adkit::CubesFn{}, x);
                auto xa = reverse_sweep(rec.tape, w);
                double lhs = 0.0;
                for (std::size_t i = 0; i < 4; ++i) lhs += xa[i] * t[i];
                CHECK(oracles::close(lhs, w * y_t1, 1e-12));
            }
        }
    }

    TEST_CASE("adjoint-tangent identity is exact under wrapping") {
        // ring ops only: wrapping is reduction mod 256, which commutes with
        // +,-,*, so both sides agree bit for bit even when they overflow
        std::mt19937 rng(43);
        std::uniform_int_distribution<int> dist(-128, 127);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<Wrap8> x, t;
            for (int i = 0; i < 4; ++i) x.emplace_back(dist(rng));
            for (int i = 0; i < 4; ++i) t.emplace_back(dist(rng));
            const Wrap8 w(dist(rng));
            for (bool use_poly : {false, true}) {
                Wrap8 y_t1, lhs(0);
                std::vector<Wrap8> xa;
                if (use_poly) {
                    std::vector<Wrap8> x3(x.begin(), x.begin() + 3), t3(t.begin(), t.begin() + 3);
                    y_t1 = tangent_eval(progs::PolyProg{}, x3, t3).tangent;
                    xa = reverse_sweep(record(progs::PolyProg{}, x3).tape, w);
                    for (std::size_t i = 0; i < 3; ++i) lhs += xa[i] * t3[i];
                } else {
                    y_t1 = tangent_eval(adkit::PairsFn{}, x, t).tangent;
                    xa = reverse_sweep(record(adkit::PairsFn{}, x).tape, w);
                    for (std::size_t i = 0; i < 4; ++i) lhs += xa[i] * t[i];
                }
                CHECK(lhs == w * y_t1);
            }
        }
    }

    TEST_CASE("n tangent evaluations equal one reverse sweep") {
        std::mt19937 rng(47);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> x(6);
            for (double& e : x) e = dist(rng);
            for (auto fid : {FunctionId::pairs, FunctionId::cubes}) {
                auto rec = fid == FunctionId::pairs ? record(adkit::PairsFn{}, x)
                                                    : record(adkit::CubesFn{}, x);
                auto sweep = reverse_sweep(rec.tape, 1.0);
                for (std::size_t i = 0; i < x.size(); ++i) {
                    std::vector<double> e(x.size(), 0.0);
                    e[i] = 1.0;
                    const double tan =
                        fid == FunctionId::pairs
                            ? tangent_eval(adkit::PairsFn{}, x, e).tangent
                            : tangent_eval(adkit::CubesFn{}, x, e).tangent;
                    CHECK(oracles::close(tan, sweep[i], 1e-12));
                }
            }
        }
    }

    TEST_CASE("pairs on i8: sweep matches the hand adjoint exactly") {
        const std::vector<int> payload{101, 77, 114, 114, 32, 121, 109, 88, 115, 97};
        std::vector<Wrap8> x;
        for (int v : payload) x.emplace_back(v);
        auto rec = record(adkit::PairsFn{}, x);
        CHECK(reverse_sweep(rec.tape, Wrap8(1)) ==
              adkit::hand_adjoint(FunctionId::pairs, x, Wrap8(1)));
    }
}
