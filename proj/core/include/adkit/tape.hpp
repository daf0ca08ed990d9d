#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adkit/carrier.hpp"

namespace adkit {

enum class OpKind : std::uint8_t { input, constant, add, sub, mul, div_const, powi };

/// Ordered record of one program evaluation: every elementary operation
/// becomes a node holding its value and local partials. A finished tape is
/// immutable; any number of reverse sweeps may share it.
template <class T>
class Tape {
public:
    using Index = std::uint32_t;

    struct Node {
        OpKind kind = OpKind::constant;
        Index a = 0;
        Index b = 0;
        T value{};
        T da{};  // d(node)/d(arg a); holds the divisor for div_const
        T db{};  // d(node)/d(arg b)
    };

    Index push_input(T v) {
        inputs_.push_back(push(Node{OpKind::input, 0, 0, v, T{}, T{}}));
        return inputs_.back();
    }
    Index push_constant(T v) { return push(Node{OpKind::constant, 0, 0, v, T{}, T{}}); }
    Index push_binary(OpKind k, Index a, Index b, T value, T da, T db) {
        return push(Node{k, a, b, std::move(value), std::move(da), std::move(db)});
    }
    Index push_unary(OpKind k, Index a, T value, T da) {
        return push(Node{k, a, 0, std::move(value), std::move(da), T{}});
    }

    const T& value_of(Index i) const { return nodes_[i].value; }
    std::span<const Node> nodes() const { return nodes_; }
    std::span<const Index> inputs() const { return inputs_; }
    std::size_t size() const { return nodes_.size(); }

    void set_output(Index i) { output_ = i; }
    Index output() const { return output_; }

private:
    Index push(Node n) {
        nodes_.push_back(std::move(n));
        return static_cast<Index>(nodes_.size() - 1);
    }

    std::vector<Node> nodes_;
    std::vector<Index> inputs_;
    Index output_ = 0;
};

/// Recording handle: either a node on a tape or a detached constant.
/// Arithmetic between handles appends nodes; constant-constant arithmetic
/// folds without touching the tape.
template <class T>
class TapeVar {
public:
    constexpr TapeVar() = default;  // constant zero
    constexpr TapeVar(T constant) : cval_(std::move(constant)) {}
    TapeVar(Tape<T>* tape, typename Tape<T>::Index idx) : tape_(tape), idx_(idx) {}

    bool is_constant() const { return tape_ == nullptr; }
    typename Tape<T>::Index index() const { return idx_; }
    T value() const { return tape_ ? tape_->value_of(idx_) : cval_; }

    friend TapeVar operator+(const TapeVar& a, const TapeVar& b) { return binary(OpKind::add, a, b); }
    friend TapeVar operator-(const TapeVar& a, const TapeVar& b) { return binary(OpKind::sub, a, b); }
    friend TapeVar operator*(const TapeVar& a, const TapeVar& b) { return binary(OpKind::mul, a, b); }
    friend TapeVar operator-(const TapeVar& a) { return TapeVar(T{}) - a; }

    // only division by values with no input dependence is recordable
    friend TapeVar operator/(const TapeVar& a, const TapeVar& b) {
        if (!b.is_constant())
            throw std::invalid_argument("tape: division by a non-constant value is not recordable");
        if (a.is_constant()) return TapeVar(div_constant(a.cval_, b.cval_));
        Tape<T>* t = a.tape_;
        T v = div_constant(a.value(), b.cval_);
        return TapeVar(t, t->push_unary(OpKind::div_const, a.idx_, std::move(v), b.cval_));
    }

    TapeVar& operator+=(const TapeVar& o) { return *this = *this + o; }
    TapeVar& operator-=(const TapeVar& o) { return *this = *this - o; }
    TapeVar& operator*=(const TapeVar& o) { return *this = *this * o; }

    friend TapeVar operator+(const TapeVar& a, int k) { return a + lift<TapeVar>(k); }
    friend TapeVar operator+(int k, const TapeVar& a) { return lift<TapeVar>(k) + a; }
    friend TapeVar operator-(const TapeVar& a, int k) { return a - lift<TapeVar>(k); }
    friend TapeVar operator-(int k, const TapeVar& a) { return lift<TapeVar>(k) - a; }
    friend TapeVar operator*(const TapeVar& a, int k) { return a * lift<TapeVar>(k); }
    friend TapeVar operator*(int k, const TapeVar& a) { return lift<TapeVar>(k) * a; }
    friend TapeVar operator/(const TapeVar& a, int k) { return a / lift<TapeVar>(k); }
    TapeVar& operator+=(int k) { return *this = *this + k; }
    TapeVar& operator-=(int k) { return *this = *this - k; }
    TapeVar& operator*=(int k) { return *this = *this * k; }
    TapeVar& operator/=(int k) { return *this = *this / k; }

    /// Single powi node; the partial k*base^(k-1) is evaluated in carrier
    /// arithmetic while recording.
    friend TapeVar powi(const TapeVar& x, int k) {
        if (k < 0) throw std::invalid_argument("powi: exponent must be non-negative");
        if (x.is_constant()) return TapeVar(powi(x.cval_, k));
        Tape<T>* t = x.tape_;
        T v = x.value();
        T partial = (k == 0) ? T{} : lift<T>(k) * powi(v, k - 1);
        return TapeVar(t, t->push_unary(OpKind::powi, x.idx_, powi(v, k), std::move(partial)));
    }

private:
    static TapeVar binary(OpKind k, const TapeVar& a, const TapeVar& b) {
        if (a.is_constant() && b.is_constant()) return TapeVar(fold(k, a.cval_, b.cval_));
        Tape<T>* t = a.tape_ ? a.tape_ : b.tape_;
        assert((!a.tape_ || !b.tape_ || a.tape_ == b.tape_) && "operands recorded on different tapes");
        Index ia = a.tape_ ? a.idx_ : t->push_constant(a.cval_);
        Index ib = b.tape_ ? b.idx_ : t->push_constant(b.cval_);
        const T va = t->value_of(ia);
        const T vb = t->value_of(ib);
        switch (k) {
            case OpKind::add:
                return TapeVar(t, t->push_binary(k, ia, ib, va + vb, lift<T>(1), lift<T>(1)));
            case OpKind::sub:
                return TapeVar(t, t->push_binary(k, ia, ib, va - vb, lift<T>(1), lift<T>(-1)));
            case OpKind::mul:
                return TapeVar(t, t->push_binary(k, ia, ib, va * vb, vb, va));
            default:
                throw std::invalid_argument("tape: unsupported operation");
        }
    }

    static T fold(OpKind k, const T& a, const T& b) {
        switch (k) {
            case OpKind::add: return a + b;
            case OpKind::sub: return a - b;
            case OpKind::mul: return a * b;
            default: throw std::invalid_argument("tape: unsupported operation");
        }
    }

    using Index = typename Tape<T>::Index;

    Tape<T>* tape_ = nullptr;
    Index idx_ = 0;
    T cval_{};
};

template <class T>
struct value_traits<TapeVar<T>> {
    static TapeVar<T> from_int(int k) { return TapeVar<T>(lift<T>(k)); }
};

template <class T>
struct Recording {
    Tape<T> tape;
    T value{};  // primal output
};

/// Evaluates the program on recording handles, capturing one node per
/// elementary operation.
template <class T, class F>
Recording<T> record(F&& program, const std::vector<T>& x) {
    Recording<T> rec;
    std::vector<TapeVar<T>> vars;
    vars.reserve(x.size());
    for (const T& xi : x) vars.emplace_back(&rec.tape, rec.tape.push_input(xi));
    TapeVar<T> out = program(std::span<const TapeVar<T>>(vars));
    rec.tape.set_output(out.is_constant() ? rec.tape.push_constant(out.value()) : out.index());
    rec.value = out.value();
    return rec;
}

/// Reverse sweep: adjoints start at zero, the output adjoint is seeded,
/// and nodes are visited back to front accumulating
/// arg_adjoint += node_adjoint * local_partial. Returns the input adjoints
/// y_seed * f'(x).
template <class T>
std::vector<T> reverse_sweep(const Tape<T>& tape, T y_seed) {
    std::vector<T> adj(tape.size(), T{});
    if (tape.size() > 0) adj[tape.output()] = std::move(y_seed);
    auto nodes = tape.nodes();
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const auto& nd = nodes[i];
        switch (nd.kind) {
            case OpKind::add:
            case OpKind::sub:
            case OpKind::mul:
                adj[nd.a] += adj[i] * nd.da;
                adj[nd.b] += adj[i] * nd.db;
                break;
            case OpKind::powi:
                adj[nd.a] += adj[i] * nd.da;
                break;
            case OpKind::div_const:
                adj[nd.a] += div_constant(adj[i], nd.da);
                break;
            case OpKind::input:
            case OpKind::constant:
                break;
        }
    }
    std::vector<T> x_adj;
    x_adj.reserve(tape.inputs().size());
    for (auto h : tape.inputs()) x_adj.push_back(adj[h]);
    return x_adj;
}

}  // namespace adkit
