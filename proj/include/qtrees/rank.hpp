#pragma once

// The inverse bijection: the unique level-order index of a positive
// reduced rational in each tree. A value's interval pins down which child
// of its parent it is (or that it is one of the fixed shallow nodes), and
// the child-value map inverts to the parent's value, so ranking is an
// iterative descent that strictly shrinks num+den until a base case:
//
//   binary   1/1 -> 1
//   ternary  1/2 -> 1, 1/1 -> 2
//   quinary  1/3 -> 1, 1/2 -> 2, 2/3 -> 3, 1/1 -> 4
//
// Each descent step contributes the digit n mod branching; the index is
// rebuilt by folding the digits over the base index.

#include "sequences.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace qtrees {

namespace detail {

struct DescentStep {
    int digit;  // n mod branching for the node holding this value
    Integer a;  // ancestor value to recurse on (left/first/second/third
    Integer b;  // child cases recover the *previous* node's value)
};

/// One case split of the descent. For q = a/b reduced and positive.
inline std::variant<Integer, DescentStep> descend(TreeKind kind, const Integer& a, const Integer& b) {
    switch (kind) {
    case TreeKind::Binary:
        if (a == b)
            return Integer(1);
        if (a < b)
            return DescentStep{ 0, a, b - a }; // left: parent value a/(b-a)
        return DescentStep{ 1, a - b, b };     // right: parent value (a-b)/b
    case TreeKind::Ternary:
        if (b > 2 * a)
            return DescentStep{ 0, a, b - 2 * a }; // middle child of value a/(b-2a)
        if (b == 2 * a)
            return Integer(1);
        if (a == b)
            return Integer(2);
        if (a > b)
            return DescentStep{ 2, a - b, b }; // left child; shift identity t_n = 1 + t_{k-1}
        // 1/2 < q < 1
        return DescentStep{ 1, 2 * a - b, 2 * b - 2 * a }; // right child
    case TreeKind::Quinary:
        if (b == 3 * a)
            return Integer(1);
        if (b == 2 * a)
            return Integer(2);
        if (2 * b == 3 * a)
            return Integer(3);
        if (a == b)
            return Integer(4);
        if (b > 3 * a)
            return DescentStep{ 0, a, b - 3 * a }; // fourth child of value a/(b-3a)
        if (2 * b < 6 * a && 6 * a < 3 * b)
            return DescentStep{ 1, 3 * a - b, 3 * b - 6 * a }; // fifth child
        if (3 * b < 6 * a && 6 * a < 4 * b)
            return DescentStep{ 2, 2 * a - b, 2 * b - 3 * a }; // first child
        if (a < b)
            return DescentStep{ 3, 3 * a - 2 * b, 3 * b - 3 * a }; // second child
        return DescentStep{ 4, a - b, b }; // third child; shift identity s_n = 1 + s_{k-1}
    }
    throw std::logic_error("unreachable");
}

} // namespace detail

/// Where a positive value sits relative to its parent: either the index
/// of one of the fixed shallow nodes, or which child slot it occupies.
using Classification = std::variant<Integer, ChildPosition>;

inline Classification classify(TreeKind kind, const Rational& q) {
    if (q.is_zero())
        throw std::domain_error("classify requires q > 0");
    auto r = detail::descend(kind, q.num(), q.den());
    if (auto* base = std::get_if<Integer>(&r))
        return *base;
    int d = std::get<detail::DescentStep>(r).digit;
    const int b = branching(kind);
    // child slot i == n-1 (mod b) where digit d == n (mod b)
    ChildPosition pos = (d <= 1) ? (b - 1 + d) : (d - 1);
    return pos;
}

struct RankTrace {
    Integer index;
    std::size_t steps; // descent iterations, == tree depth of the value
};

/// rank with its descent length. rank(0) = 0 in zero steps.
inline RankTrace rank_traced(TreeKind kind, const Rational& q) {
    if (q.is_zero())
        return { Integer(0), 0 };
    Integer a = q.num();
    Integer b = q.den();
    std::vector<int> digits; // deepest first
    Integer n;
    std::size_t steps = 0;
    for (;;) {
        ++steps;
        auto r = detail::descend(kind, a, b);
        if (auto* base = std::get_if<Integer>(&r)) {
            n = *base;
            break;
        }
        auto& step = std::get<detail::DescentStep>(r);
        digits.push_back(step.digit);
        // the recovered ancestor value may need one reduction
        Integer g = boost::multiprecision::gcd(step.a, step.b);
        a = step.a / g;
        b = step.b / g;
    }
    const int br = branching(kind);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        n = n * br + *it;
    return { std::move(n), steps };
}

/// The unique n with nth_term(kind, n) == q.
inline Integer rank(TreeKind kind, const Rational& q) {
    return rank_traced(kind, q).index;
}

} // namespace qtrees
