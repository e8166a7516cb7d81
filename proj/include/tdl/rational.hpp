#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "tdl/errors.hpp"

namespace tdl {

// Exact rational arithmetic. Canonical form: den > 0, gcd(|num|, den) == 1.
// All comparisons cross-multiply in 128 bits, so no overflow at the scales
// this library works with (node counts, edge counts, small thresholds).
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
    Rat(long long n, long long d) {
        if (d == 0) fail(ErrorKind::InvalidParams, "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    static Rat parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(text, &used);
                if (used != text.size()) fail(ErrorKind::InvalidParams, "bad rational: " + text);
                return Rat(n);
            }
            long long n = std::stoll(text.substr(0, slash), &used);
            if (used != slash) fail(ErrorKind::InvalidParams, "bad rational: " + text);
            std::string dpart = text.substr(slash + 1);
            long long d = std::stoll(dpart, &used);
            if (used != dpart.size()) fail(ErrorKind::InvalidParams, "bad rational: " + text);
            return Rat(n, d);
        } catch (const std::invalid_argument&) {
            fail(ErrorKind::InvalidParams, "bad rational: " + text);
        } catch (const std::out_of_range&) {
            fail(ErrorKind::InvalidParams, "rational out of range: " + text);
        }
    }

    int compare(const Rat& o) const {
        __int128 l = static_cast<__int128>(num) * o.den;
        __int128 r = static_cast<__int128>(o.num) * den;
        if (l < r) return -1;
        if (l > r) return 1;
        return 0;
    }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return compare(o) < 0; }
    bool operator<=(const Rat& o) const { return compare(o) <= 0; }
    bool operator>(const Rat& o) const { return compare(o) > 0; }
    bool operator>=(const Rat& o) const { return compare(o) >= 0; }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) fail(ErrorKind::InvalidParams, "rational division by zero");
        return Rat(num * o.den, den * o.num);
    }

    long long floor_int() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    long long ceil_int() const {
        long long q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }

    bool is_integer() const { return den == 1; }

    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace tdl
