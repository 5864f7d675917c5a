#pragma once

#include <compare>
#include <string>

#include "maxplus/errors.hpp"
#include "maxplus/rational.hpp"

namespace maxplus {

/// Max-plus scalar: an exact rational or bottom (-inf).
/// "Addition" is max with bottom as neutral element; "multiplication" is +
/// with bottom absorbing. A default-constructed Trop is bottom, so freshly
/// built grids start out as the null matrix.
class Trop {
public:
    Trop() : finite_(false) {}
    Trop(Rat r) : finite_(true), v_(std::move(r)) {}
    Trop(long n) : finite_(true), v_(n) {}

    static Trop bottom() { return Trop(); }

    bool is_bottom() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rat& rat() const {
        if (!finite_) throw precondition_error("bottom has no rational value");
        return v_;
    }

    /// Tropical product (ordinary sum); bottom absorbs.
    friend Trop operator+(const Trop& a, const Trop& b) {
        if (!a.finite_ || !b.finite_) return bottom();
        return Trop(a.v_ + b.v_);
    }
    Trop& operator+=(const Trop& o) { *this = *this + o; return *this; }

    /// Difference a - r by a finite rational (used for normal forms and
    /// conjugation); bottom stays bottom.
    friend Trop operator-(const Trop& a, const Rat& r) {
        if (!a.finite_) return bottom();
        return Trop(a.v_ - r);
    }

    friend Trop max(const Trop& a, const Trop& b) { return a < b ? b : a; }

    friend bool operator==(const Trop& a, const Trop& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Trop& a, const Trop& b) {
        if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
        if (!a.finite_) return std::strong_ordering::less;
        if (!b.finite_) return std::strong_ordering::greater;
        return a.v_ <=> b.v_;
    }

    std::string str() const { return finite_ ? v_.str() : "-inf"; }

    std::size_t hash() const noexcept {
        return finite_ ? v_.hash() : 0x00b075u;
    }

private:
    bool finite_;
    Rat v_;
};

} // namespace maxplus
