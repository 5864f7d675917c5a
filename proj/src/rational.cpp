#include "maxplus/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace maxplus {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.sign() == 0) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

std::optional<Rat> Rat::parse(std::string_view token) {
    std::string_view s = token;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = (s[0] == '-');
        s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) return std::nullopt;
        value = mpq_class(n) / mpq_class(d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
        mpz_class scaled(std::string(whole) + std::string(frac), 10);
        mpz_class denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 10, frac.size());
        value = mpq_class(scaled) / mpq_class(denom);
    } else {
        if (!all_digits(s)) return std::nullopt;
        value = mpq_class(mpz_class(std::string(s), 10));
    }
    if (neg) value = -value;
    value.canonicalize();
    return Rat(std::move(value));
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<std::string> Rat::decimal_str() const {
    if (v_.get_den() == 1) return std::nullopt;
    mpz_class den = v_.get_den();
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return std::nullopt;
    unsigned long digits = std::max(twos, fives);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
    mpz_class scaled = v_.get_num() * (pow10 / v_.get_den());
    bool neg = scaled < 0;
    std::string ds = mpz_class(abs(scaled)).get_str();
    if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    return (neg ? "-" : "") + ds;
}

std::size_t Rat::hash() const noexcept {
    auto mix = [](std::size_t h, std::size_t x) {
        return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    const mpz_srcptr num = mpq_numref(v_.get_mpq_t());
    const mpz_srcptr den = mpq_denref(v_.get_mpq_t());
    std::size_t h = static_cast<std::size_t>(mpz_size(num) + 1) * 31 +
                    static_cast<std::size_t>(mpz_sgn(num) + 1);
    if (mpz_size(num) > 0) h = mix(h, static_cast<std::size_t>(mpz_getlimbn(num, 0)));
    h = mix(h, static_cast<std::size_t>(mpz_size(den)));
    if (mpz_size(den) > 0) h = mix(h, static_cast<std::size_t>(mpz_getlimbn(den, 0)));
    return h;
}

} // namespace maxplus
