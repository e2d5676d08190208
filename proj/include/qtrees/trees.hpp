#pragma once

// The three labeled trees whose level-order read enumerates the positive
// rationals: the Calkin-Wilf binary tree and its ternary and quinary
// analogues. Vertices carry triples (a; b; c) with value a/b; the counter
// c equals v_p(index) for the ternary (p=3) and quinary (p=5) trees and
// is identically 0 for the binary tree.
//
// Level-order indexing is 1-based. Child i (1..branching) of the node at
// index m sits at index branching*m + i - branching + 1, i.e.
//   binary   left 2m, right 2m+1
//   ternary  left 3m-1, middle 3m, right 3m+1
//   quinary  i-th child at 5(m-1)+i+1

#include "exact.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtrees {

enum class TreeKind { Binary, Ternary, Quinary };

constexpr int branching(TreeKind kind) {
    switch (kind) {
    case TreeKind::Binary: return 2;
    case TreeKind::Ternary: return 3;
    case TreeKind::Quinary: return 5;
    }
    return 0;
}

/// The k of u_n = f(u_{n-1})/k.
constexpr int multiplier(TreeKind kind) {
    switch (kind) {
    case TreeKind::Binary: return 1;
    case TreeKind::Ternary: return 2;
    case TreeKind::Quinary: return 3;
    }
    return 0;
}

constexpr int valuation_prime(TreeKind kind) {
    switch (kind) {
    case TreeKind::Binary: return 2;
    case TreeKind::Ternary: return 3;
    case TreeKind::Quinary: return 5;
    }
    return 0;
}

constexpr const char* kind_name(TreeKind kind) {
    switch (kind) {
    case TreeKind::Binary: return "binary";
    case TreeKind::Ternary: return "ternary";
    case TreeKind::Quinary: return "quinary";
    }
    return "?";
}

/// 1-based child slot: binary 1=left 2=right; ternary 1=left 2=middle
/// 3=right; quinary 1..5 = first..fifth.
using ChildPosition = int;

struct NodeTriple {
    Integer a;
    Integer b;
    Integer c;

    Rational value() const { return make_rational(a, b); }

    friend bool operator==(const NodeTriple&, const NodeTriple&) = default;
};

inline NodeTriple root(TreeKind kind) {
    switch (kind) {
    case TreeKind::Binary: return { 1, 1, 0 };
    case TreeKind::Ternary: return { 1, 2, 0 };
    case TreeKind::Quinary: return { 1, 3, 0 };
    }
    throw std::logic_error("unreachable");
}

/// gcd(a,b)=1, positivity, and the per-kind linear inequality that makes
/// every child's first coordinate positive.
inline bool valid_node(TreeKind kind, const NodeTriple& n) {
    if (n.a < 1 || n.b < 1 || n.c < 0)
        return false;
    if (boost::multiprecision::gcd(n.a, n.b) != 1)
        return false;
    switch (kind) {
    case TreeKind::Binary: return n.c == 0;
    case TreeKind::Ternary: return 2 * n.a >= n.b - 4 * n.a * n.c;
    case TreeKind::Quinary: return 3 * n.a >= n.b - 6 * n.a * n.c;
    }
    return false;
}

/// Child i (1..branching) of a node. Reachable nodes always satisfy
/// valid_node; checked by assertion in debug builds only.
inline NodeTriple child(TreeKind kind, const NodeTriple& n, ChildPosition i) {
    assert(valid_node(kind, n) && "invalid node");
    assert(i >= 1 && i <= branching(kind));
    const Integer& a = n.a;
    const Integer& b = n.b;
    const Integer& c = n.c;
    switch (kind) {
    case TreeKind::Binary:
        switch (i) {
        case 1: return { a, a + b, 0 };
        case 2: return { a + b, b, 0 };
        }
        break;
    case TreeKind::Ternary:
        if (b % 2 != 0) {
            switch (i) {
            case 1: return { 4 * (c + 1) * a - b, 2 * a, 0 };
            case 2: return { a, 2 * a + b, c + 1 };
            case 3: return { 2 * a + b, 2 * a + 2 * b, 0 };
            }
        } else {
            switch (i) {
            case 1: return { 2 * (c + 1) * a - b / 2, a, 0 };
            case 2: return { a, 2 * a + b, c + 1 };
            case 3: return { a + b / 2, a + b, 0 };
            }
        }
        break;
    case TreeKind::Quinary:
        if (b % 3 != 0) {
            switch (i) {
            case 1: return { 3 * (4 * c + 3) * a - 2 * b, 3 * (6 * c + 5) * a - 3 * b, 0 };
            case 2: return { (6 * c + 5) * a - b, 6 * (c + 1) * a - b, 0 };
            case 3: return { 6 * (c + 1) * a - b, 3 * a, 0 };
            case 4: return { a, 3 * a + b, c + 1 };
            case 5: return { 3 * a + b, 6 * a + 3 * b, 0 };
            }
        } else {
            switch (i) {
            case 1: return { (4 * c + 3) * a - 2 * b / 3, (6 * c + 5) * a - b, 0 };
            case 2: return { (6 * c + 5) * a - b, 6 * (c + 1) * a - b, 0 };
            case 3: return { 2 * (c + 1) * a - b / 3, a, 0 };
            case 4: return { a, 3 * a + b, c + 1 };
            case 5: return { a + b / 3, 2 * a + b, 0 };
            }
        }
        break;
    }
    throw std::logic_error("unreachable");
}

inline std::vector<NodeTriple> children(TreeKind kind, const NodeTriple& n) {
    std::vector<NodeTriple> out;
    const int b = branching(kind);
    out.reserve(static_cast<std::size_t>(b));
    for (ChildPosition i = 1; i <= b; ++i)
        out.push_back(child(kind, n, i));
    return out;
}

inline Integer child_index(TreeKind kind, const Integer& parent, ChildPosition i) {
    return branching(kind) * parent + i - branching(kind) + 1;
}

/// Inverts child_index: the parent's index and which child n is.
inline std::pair<Integer, ChildPosition> parent_index(TreeKind kind, const Integer& n) {
    if (n <= 1)
        throw std::domain_error("root has no parent");
    const int b = branching(kind);
    // i == n-1 (mod b), representative in 1..b
    Integer r = (n - 1) % b;
    ChildPosition i = (r == 0) ? b : r.convert_to<ChildPosition>();
    Integer parent = (n - i + b - 1) / b;
    return { std::move(parent), i };
}

/// Label of the n-th vertex in level order, by parent-path unwinding:
/// O(log n) triple-arithmetic steps, so n may have hundreds of digits.
inline NodeTriple node_at_index(TreeKind kind, Integer n) {
    if (n < 1)
        throw std::domain_error("indices are 1-based");
    std::vector<ChildPosition> path;
    while (n > 1) {
        auto [parent, pos] = parent_index(kind, n);
        path.push_back(pos);
        n = std::move(parent);
    }
    NodeTriple node = root(kind);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        node = child(kind, node, *it);
    return node;
}

/// Level-order cursor over a tree. Holds only the root-to-current path,
/// so memory is O(depth); advancing re-derives the path suffix below the
/// deepest position that changes. Single-consumer.
class WalkCursor {
public:
    explicit WalkCursor(TreeKind kind) : kind_(kind), index_(1) {
        path_.push_back(root(kind));
    }

    /// Positioned at an arbitrary index n >= 1.
    WalkCursor(TreeKind kind, Integer start) : kind_(kind), index_(std::move(start)) {
        if (index_ < 1)
            throw std::domain_error("indices are 1-based");
        Integer n = index_;
        while (n > 1) {
            auto [parent, pos] = parent_index(kind, n);
            ordinals_.push_back(pos);
            n = std::move(parent);
        }
        std::reverse(ordinals_.begin(), ordinals_.end());
        path_.push_back(root(kind));
        replay(0);
    }

    const Integer& index() const { return index_; }
    const NodeTriple& node() const { return path_.back(); }

    /// Moves to index+1 in level order (possibly onto the next level).
    void advance() {
        ++index_;
        const int b = branching(kind_);
        std::size_t j = ordinals_.size();
        while (j > 0 && ordinals_[j - 1] == b)
            --j;
        if (j == 0) {
            // level exhausted; restart one level deeper
            ordinals_.assign(ordinals_.size() + 1, 1);
            replay(0);
        } else {
            ++ordinals_[j - 1];
            for (std::size_t i = j; i < ordinals_.size(); ++i)
                ordinals_[i] = 1;
            replay(j - 1);
        }
    }

private:
    TreeKind kind_;
    Integer index_;
    std::vector<ChildPosition> ordinals_; // child slots from the root; empty at the root
    std::vector<NodeTriple> path_;        // path_[i+1] = child(path_[i], ordinals_[i])

    void replay(std::size_t from) {
        path_.resize(ordinals_.size() + 1);
        for (std::size_t i = from; i < ordinals_.size(); ++i)
            path_[i + 1] = child(kind_, path_[i], ordinals_[i]);
    }
};

/// Streams the branching^(depth-1) nodes of one level, left to right.
class LevelCursor {
public:
    LevelCursor(TreeKind kind, unsigned depth)
        : walk_(kind, first_index(kind, depth)),
          remaining_(boost::multiprecision::pow(Integer(branching(kind)), depth - 1)) {}

    std::optional<NodeTriple> next() {
        if (remaining_ == 0)
            return std::nullopt;
        NodeTriple out = walk_.node();
        --remaining_;
        if (remaining_ > 0)
            walk_.advance();
        return out;
    }

    static Integer first_index(TreeKind kind, unsigned depth) {
        if (depth < 1)
            throw std::domain_error("levels are 1-based");
        const Integer b(branching(kind));
        return (boost::multiprecision::pow(b, depth - 1) - 1) / (b - 1) + 1;
    }

private:
    WalkCursor walk_;
    Integer remaining_;
};

} // namespace qtrees
