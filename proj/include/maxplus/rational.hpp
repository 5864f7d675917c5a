#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maxplus {

/// Exact rational number, always kept in canonical (lowest-terms) form.
/// Thin value wrapper over GMP's mpq_class; no operation ever rounds.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Accepts "p", "p/q", and decimal literals ("-1", "0.2", "+3/4").
    /// Decimals are converted exactly (0.2 -> 1/5).
    static std::optional<Rat> parse(std::string_view token);

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Lowest-terms representation: "p" or "p/q" (q > 1).
    std::string str() const;

    /// Finite decimal representation, present iff the denominator is of the
    /// form 2^a * 5^b (e.g. 3/10 -> "0.3"); used as a display convenience.
    std::optional<std::string> decimal_str() const;

    std::size_t hash() const noexcept;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

} // namespace maxplus
