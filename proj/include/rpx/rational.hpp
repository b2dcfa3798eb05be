#pragma once

#include <boost/rational.hpp>

#include <Eigen/Core>
#include <Eigen/LU>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace rpx {

using Int = long long;

// Exact scalar for all coordinates. Every coordinate that appears in a build
// is an integer or half-integer (at unit scale), but intermediate quantities
// (plane offsets, axis projections) may have other small denominators.
using Rat = boost::rational<Int>;

inline Rat rat(Int n, Int d = 1) { return Rat(n, d); }

std::string rat_to_string(const Rat& q);

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

// Exact finite decimal expansion; requires the denominator to be of the form
// 2^a * 5^b.
std::string rat_to_decimal_string(const Rat& q);

inline Int rat_floor(const Rat& q)
{
    Int n = q.numerator(), d = q.denominator();
    Int f = n / d;
    if (n % d != 0 && n < 0)
        --f;
    return f;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

inline std::size_t rat_hash(const Rat& q)
{
    return hash_combine(std::hash<Int>{}(q.numerator()), std::hash<Int>{}(q.denominator()));
}

}  // namespace rpx

namespace Eigen {

template <>
struct NumTraits<rpx::Rat> : GenericNumTraits<rpx::Rat> {
    typedef rpx::Rat Real;
    typedef rpx::Rat NonInteger;
    typedef rpx::Rat Nested;
    typedef rpx::Rat Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
