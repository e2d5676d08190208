#pragma once

// Exact nonnegative rational arithmetic and p-adic valuations.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace qtrees {

using Integer = boost::multiprecision::cpp_int;

/// Nonnegative rational in lowest terms. Invariants: den >= 1,
/// num >= 0, gcd(num, den) == 1; the value 0 is stored as 0/1.
/// Immutable once constructed; all operations are pure.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw std::domain_error("zero denominator");
        if (num_ < 0 || den_ < 0)
            throw std::domain_error("negative rational");
        Integer g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    explicit Rational(Integer whole) : Rational(std::move(whole), 1) {}

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend bool operator==(const Rational& x, const Rational& y) {
        // canonical form makes field-wise comparison exact
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

private:
    Integer num_;
    Integer den_;
};

/// Reduced fraction num/den. Throws "zero denominator" for den == 0.
inline Rational make_rational(Integer num, Integer den) {
    return Rational(std::move(num), std::move(den));
}

/// Largest e with p^e dividing n. Requires n >= 1 and p >= 2.
inline unsigned long padic_valuation(Integer n, const Integer& p) {
    if (n <= 0)
        throw std::domain_error("valuation requires n >= 1");
    if (p < 2)
        throw std::invalid_argument("valuation requires p >= 2");
    unsigned long e = 0;
    Integer q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, p, q, r);
        if (r != 0)
            return e;
        n = q;
        ++e;
    }
}

inline Integer floor_of(const Rational& q) {
    return q.num() / q.den();
}

inline double to_double(const Rational& q) {
    return q.num().convert_to<double>() / q.den().convert_to<double>();
}

/// Human-readable form: "7/10", bare "3" for integers, "0" for zero.
inline std::string to_string(const Rational& q) {
    if (q.den() == 1)
        return q.num().str();
    return q.num().str() + "/" + q.den().str();
}

/// Machine form: always "num/den", so "3/1" and "0/1".
inline std::string to_fraction_string(const Rational& q) {
    return q.num().str() + "/" + q.den().str();
}

namespace detail {
inline bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    for (char ch : s)
        if (ch < '0' || ch > '9')
            return false;
    return true;
}
} // namespace detail

/// Nonnegative arbitrary-precision index from a decimal string.
inline Integer parse_index(const std::string& s) {
    if (!detail::all_digits(s))
        throw std::invalid_argument("expected a nonnegative decimal integer, got \"" + s + "\"");
    return Integer(s);
}

/// Parses "a/b" or a bare nonnegative integer "a".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_index(s));
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
        throw std::invalid_argument("expected a fraction \"a/b\" with nonnegative integers, got \"" + s + "\"");
    return make_rational(Integer(num), Integer(den));
}

} // namespace qtrees
