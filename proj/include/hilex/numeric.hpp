#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

// n!! for n >= -1, with (-1)!! = 0!! = 1.
inline BigInt double_factorial(int n)
{
    if (n < -1) {
        throw std::domain_error("double_factorial: argument below -1");
    }
    BigInt r = 1;
    for (int i = n; i > 1; i -= 2) {
        r *= i;
    }
    return r;
}

inline BigInt ipow(const BigInt &base, int e)
{
    BigInt r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

// Trial division; adequate for the small arguments used here.
inline int mobius(long long n)
{
    if (n < 1) {
        throw std::domain_error("mobius: argument must be positive");
    }
    int result = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

inline std::vector<int> divisors(int n)
{
    std::vector<int> out;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

inline long long lcm_range(const std::vector<int> &values)
{
    long long l = 1;
    for (int v : values) {
        l = std::lcm(l, static_cast<long long>(v));
    }
    return l;
}

inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_string(const BigInt &v) { return v.str(); }

// "p/q" with q > 1, or "p" for integers.
inline std::string to_string(const Rational &v)
{
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string &text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(BigInt(text));
    }
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline bool is_integer(const Rational &v) { return boost::multiprecision::denominator(v) == 1; }

inline BigInt to_integer(const Rational &v)
{
    if (!is_integer(v)) {
        throw std::domain_error("rational value " + to_string(v) + " is not an integer");
    }
    return boost::multiprecision::numerator(v);
}

} // namespace hilex
