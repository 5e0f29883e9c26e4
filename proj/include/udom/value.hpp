/*
 * Copyright 2026 the udom authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef UDOM_VALUE_HPP
#define UDOM_VALUE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace udom {

/// Default comparison tolerance for truth values in [0,1].
inline constexpr double kEps = 1e-9;

/// Raised on malformed inputs (files, specs, mismatched carriers).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

inline bool approx_eq(double a, double b, double eps = kEps) { return std::fabs(a - b) <= eps; }
inline bool approx_le(double a, double b, double eps = kEps) { return a <= b + eps; }
inline bool approx_one(double a, double eps = kEps) { return a >= 1.0 - eps; }
inline bool approx_zero(double a, double eps = kEps) { return a <= eps; }

/// Exact rational truth value, used by the optional exact mode.
/// Denominators stay small (grid pitches and piece endpoints), so int64
/// with 128-bit intermediate comparisons is plenty.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(std::llabs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rat zero() { return Rat(0, 1); }
    static Rat one() { return Rat(1, 1); }

    /// Nearest rational with denominator <= 10^7 (continued fractions).
    /// Grid values i/n and decimal piece endpoints recover exactly.
    static Rat from_double(double v) {
        if (v == 0.0) return zero();
        bool neg = v < 0;
        double x = std::fabs(v);
        long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double frac = x;
        for (int it = 0; it < 64; ++it) {
            double a = std::floor(frac);
            long long ai = static_cast<long long>(a);
            long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
            if (q2 > 10'000'000) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            if (std::fabs(x - double(p1) / double(q1)) < 1e-13) break;
            double rem = frac - a;
            if (rem < 1e-13) break;
            frac = 1.0 / rem;
        }
        return Rat(neg ? -p1 : p1, q1);
    }

    double to_double() const { return double(num) / double(den); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    friend Rat rmin(const Rat& a, const Rat& b) { return a <= b ? a : b; }
    friend Rat rmax(const Rat& a, const Rat& b) { return a <= b ? b : a; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Compact decimal rendering for labels and reports ("0.25", "1", ...).
inline std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace udom

#endif
