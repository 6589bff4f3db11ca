#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <hilex/error.hpp>
#include <hilex/numeric.hpp>

namespace hilex {

using IntPoly = std::vector<std::int64_t>; // ascending coefficients

namespace detail {

inline void trim(IntPoly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// Exact quotient of `num` by the monic polynomial `den`.
inline IntPoly divide_exact(IntPoly num, const IntPoly &den)
{
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        throw std::logic_error("divide_exact: degree too small");
    }
    IntPoly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const std::int64_t c = num[i];
        q[i - dd] = c;
        if (c != 0) {
            for (std::size_t k = 0; k <= dd; ++k) {
                num[i - dd + k] -= c * den[k];
            }
        }
    }
    trim(num);
    if (!num.empty()) {
        throw std::logic_error("divide_exact: nonzero remainder");
    }
    return q;
}

inline IntPoly multiply(const IntPoly &a, const IntPoly &b)
{
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

} // namespace detail

// Phi_n, obtained as (x^n - 1) / prod_{d | n, d < n} Phi_d by exact division.
inline const IntPoly &cyclotomic_polynomial(int n)
{
    if (n < 1) {
        throw std::domain_error("cyclotomic_polynomial: order must be positive");
    }
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    for (int d : divisors(n)) {
        if (cache.count(d)) {
            continue;
        }
        IntPoly denom{1};
        for (int e : divisors(d)) {
            if (e < d) {
                denom = detail::multiply(denom, cache.at(e));
            }
        }
        IntPoly xd(static_cast<std::size_t>(d) + 1, 0);
        xd[0] = -1;
        xd[d] = 1;
        cache.emplace(d, detail::divide_exact(std::move(xd), denom));
    }
    return cache.at(n);
}

// Element of Z[zeta_L], stored in the group-ring basis
// coeffs[r] = coefficient of zeta_L^r, 0 <= r < L.
class CycloInt {
public:
    explicit CycloInt(int order) : order_(order), coeffs_(check_order(order), 0) {}

    static CycloInt integer(int order, std::int64_t value)
    {
        CycloInt c(order);
        c.coeffs_[0] = value;
        return c;
    }

    // zeta_L^r for any integer r.
    static CycloInt root(int order, long long r)
    {
        CycloInt c(order);
        c.coeffs_[static_cast<std::size_t>(mod(r, order))] = 1;
        return c;
    }

    int order() const noexcept { return order_; }
    const std::vector<std::int64_t> &coeffs() const noexcept { return coeffs_; }

    void add_root(long long r, std::int64_t multiplicity = 1)
    {
        coeffs_[static_cast<std::size_t>(mod(r, order_))] += multiplicity;
    }

    CycloInt &operator+=(const CycloInt &o)
    {
        same_order(o);
        for (int r = 0; r < order_; ++r) {
            coeffs_[r] += o.coeffs_[r];
        }
        return *this;
    }

    CycloInt &operator-=(const CycloInt &o)
    {
        same_order(o);
        for (int r = 0; r < order_; ++r) {
            coeffs_[r] -= o.coeffs_[r];
        }
        return *this;
    }

    friend CycloInt operator+(CycloInt a, const CycloInt &b) { return a += b; }
    friend CycloInt operator-(CycloInt a, const CycloInt &b) { return a -= b; }

    friend CycloInt operator*(const CycloInt &a, const CycloInt &b)
    {
        a.same_order(b);
        CycloInt r(a.order_);
        for (int i = 0; i < a.order_; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (int j = 0; j < a.order_; ++j) {
                r.coeffs_[(i + j) % a.order_] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend CycloInt operator*(std::int64_t k, CycloInt a)
    {
        for (auto &c : a.coeffs_) {
            c *= k;
        }
        return a;
    }

    // Canonical representative: remainder modulo Phi_L, zero-padded to length L.
    CycloInt reduce() const
    {
        const IntPoly &phi = cyclotomic_polynomial(order_);
        const std::size_t deg = phi.size() - 1;
        std::vector<std::int64_t> rem = coeffs_;
        for (std::size_t i = rem.size(); i-- > deg;) {
            const std::int64_t c = rem[i];
            if (c == 0) {
                continue;
            }
            for (std::size_t k = 0; k <= deg; ++k) {
                rem[i - deg + k] -= c * phi[k];
            }
        }
        CycloInt out(order_);
        std::copy(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(deg), out.coeffs_.begin());
        return out;
    }

    bool is_rational_integer() const
    {
        const CycloInt r = reduce();
        return std::all_of(r.coeffs_.begin() + 1, r.coeffs_.end(), [](std::int64_t c) { return c == 0; });
    }

    std::int64_t integer_value() const
    {
        const CycloInt r = reduce();
        for (std::size_t i = 1; i < r.coeffs_.size(); ++i) {
            if (r.coeffs_[i] != 0) {
                throw consistency_error("cyclotomic value is not a rational integer: " + r.str());
            }
        }
        return r.coeffs_[0];
    }

    friend bool operator==(const CycloInt &a, const CycloInt &b)
    {
        a.same_order(b);
        return a.reduce().coeffs_ == b.reduce().coeffs_;
    }

    std::string str() const
    {
        std::string s;
        for (int r = 0; r < order_; ++r) {
            if (coeffs_[r] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += " + ";
            }
            s += std::to_string(coeffs_[r]) + "*z" + std::to_string(order_) + "^" + std::to_string(r);
        }
        return s.empty() ? "0" : s;
    }

private:
    static std::size_t check_order(int order)
    {
        if (order < 1) {
            throw std::domain_error("CycloInt: order must be positive");
        }
        return static_cast<std::size_t>(order);
    }

    static long long mod(long long r, int m)
    {
        long long x = r % m;
        return x < 0 ? x + m : x;
    }

    void same_order(const CycloInt &o) const
    {
        if (o.order_ != order_) {
            throw std::invalid_argument("CycloInt: mismatched root-of-unity orders " + std::to_string(order_) + " and " +
                                        std::to_string(o.order_));
        }
    }

    int order_;
    std::vector<std::int64_t> coeffs_;
};

// sum over 0 <= k < n with gcd(k, n) = 1 of zeta_n^k
inline CycloInt mobius_root_of_unity_sum(int n)
{
    CycloInt s(n);
    for (int k = 0; k < n; ++k) {
        if (std::gcd(k, n) == 1) {
            s.add_root(k);
        }
    }
    return s;
}

} // namespace hilex
