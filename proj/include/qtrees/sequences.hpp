#pragma once

// The enumerations u_0 = 0, u_1, u_2, ... of the nonnegative rationals,
// one per tree, computable three independent ways that must agree:
//
//   TreeWalk             read the tree top-down, each level left to right
//   ValuationRecurrence  u_n = 1 / (k * (1 + 2 v_p(n) - u_{n-1}))
//   NewmanRecurrence     u_n = f(u_{n-1}) / k,  f(x) = 1 / (1 + 2 floor(x) - x)
//
// Index 0 is the sequence-only extension u_0 = 0; tree indices start at 1.

#include "trees.hpp"

#include <optional>
#include <utility>

namespace qtrees {

enum class GeneratorMethod { TreeWalk, ValuationRecurrence, NewmanRecurrence };

/// f(x) = 1 / (1 + 2 floor(x) - x). Defined for all x >= 0 since
/// 1 + 2 floor(x) - x > floor(x) >= 0.
inline Rational newman_f(const Rational& x) {
    Integer f = floor_of(x);
    return make_rational(x.den(), (1 + 2 * f) * x.den() - x.num());
}

/// u_n from u_{n-1} via the valuation recurrence. Requires prev = u_{n-1}
/// for this kind; the denominator cannot vanish then (floor identity).
inline Rational next_term(TreeKind kind, const Integer& n, const Rational& prev) {
    unsigned long v = padic_valuation(n, valuation_prime(kind));
    return make_rational(prev.den(),
                         multiplier(kind) * ((1 + 2 * Integer(v)) * prev.den() - prev.num()));
}

/// u_n by random access: 0 for n = 0, else the value of tree node n.
/// O(log n) triple-arithmetic steps.
inline Rational nth_term(TreeKind kind, const Integer& n) {
    if (n < 0)
        throw std::domain_error("index must be nonnegative");
    if (n == 0)
        return Rational();
    return node_at_index(kind, n).value();
}

/// Yields (0, 0), (1, u_1), (2, u_2), ... for one kind and method, or the
/// suffix from an arbitrary start index (mid-sequence seeding: u_n0 comes
/// from nth_term, later terms from the chosen method). State is O(1) in
/// stream length. Single-consumer; distinct streams are independent.
class SequenceStream {
public:
    SequenceStream(TreeKind kind, GeneratorMethod method)
        : SequenceStream(kind, method, Integer(0)) {}

    SequenceStream(TreeKind kind, GeneratorMethod method, Integer first_index)
        : kind_(kind), method_(method), index_(std::move(first_index)) {
        if (index_ < 0)
            throw std::domain_error("index must be nonnegative");
        if (method_ == GeneratorMethod::TreeWalk && index_ >= 1) {
            walk_.emplace(kind_, index_);
            value_ = walk_->node().value();
        } else {
            value_ = nth_term(kind_, index_);
        }
    }

    std::pair<Integer, Rational> next() {
        std::pair<Integer, Rational> out{ index_, value_ };
        ++index_;
        switch (method_) {
        case GeneratorMethod::TreeWalk:
            if (!walk_)
                walk_.emplace(kind_); // leaving u_0; cursor starts at index 1
            else
                walk_->advance();
            value_ = walk_->node().value();
            break;
        case GeneratorMethod::ValuationRecurrence:
            value_ = next_term(kind_, index_, value_);
            break;
        case GeneratorMethod::NewmanRecurrence: {
            Rational f = newman_f(value_);
            value_ = make_rational(f.num(), f.den() * multiplier(kind_));
            break;
        }
        }
        return out;
    }

private:
    TreeKind kind_;
    GeneratorMethod method_;
    Integer index_;  // index of the next pair to yield
    Rational value_; // its value
    std::optional<WalkCursor> walk_;
};

} // namespace qtrees
