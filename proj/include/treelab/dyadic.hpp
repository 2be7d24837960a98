#pragma once

#include "treelab/rational.hpp"

#include <compare>
#include <string>

namespace treelab {

/// Exact dyadic rational, value = num * 2^{-exp} with exp >= 0.
/// Canonical form: num is odd, or zero, or exp is 0. Cylinder measures
/// 2^{-|sigma|} and all clopen-set measures live here.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long n) : num_(n), exp_(0) {}
    Dyadic(BigInt n, unsigned e) : num_(std::move(n)), exp_(e) { normalize(); }

    /// 2^{-e}
    static Dyadic cylinder(unsigned e) { return Dyadic(BigInt(1), e); }

    const BigInt& num() const { return num_; }
    unsigned exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational to_rational() const { return Rational(num_, BigInt(1) << exp_); }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return Dyadic(a.lift(e) + b.lift(e), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return Dyadic(a.lift(e) - b.lift(e), e);
    }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    Dyadic pow(unsigned n) const {
        Dyadic r(1);
        for (unsigned i = 0; i < n; ++i) r *= *this;
        return r;
    }

    /// Exact division by 2^e.
    Dyadic shift_down(unsigned e) const { return Dyadic(num_, exp_ + e); }

    /// Multiplication by 2^e; exact, result stays dyadic.
    Dyadic shift_up(unsigned e) const {
        if (e >= exp_) return Dyadic(num_ << (e - exp_), 0);
        return Dyadic(num_, exp_ - e);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        BigInt lhs = a.lift(e), rhs = b.lift(e);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const Dyadic& a, const Rational& b) { return a.to_rational() == b; }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Rational& b) {
        return a.to_rational() <=> b;
    }

    /// Wire form "p/2^e"; exponent 0 prints as a plain integer.
    std::string str() const {
        std::string s = num_.str();
        if (exp_ != 0) s += "/2^" + std::to_string(exp_);
        return s;
    }

private:
    BigInt lift(unsigned e) const { return num_ << (e - exp_); }

    void normalize() {
        if (num_ == 0) { exp_ = 0; return; }
        while (exp_ > 0 && (num_ & 1) == 0) { num_ >>= 1; --exp_; }
    }

    BigInt num_;
    unsigned exp_;
};

} // namespace treelab
