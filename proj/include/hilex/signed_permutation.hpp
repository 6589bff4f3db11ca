#pragma once

#include <hilex/context.hpp>
#include <hilex/partition.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilex {

// Signed permutation of [+-n] given by its window [s(1), ..., s(n)];
// s(-i) = -s(i).
class SignedPermutation {
public:
    SignedPermutation() = default;

    explicit SignedPermutation(std::vector<int> window) : window_(std::move(window))
    {
        std::vector<bool> seen(window_.size() + 1, false);
        for (int v : window_) {
            const int a = std::abs(v);
            if (a < 1 || a > size() || seen[static_cast<std::size_t>(a)]) {
                throw std::invalid_argument("not a signed permutation window");
            }
            seen[static_cast<std::size_t>(a)] = true;
        }
    }

    SignedPermutation(std::initializer_list<int> w) : SignedPermutation(std::vector<int>(w)) {}

    static SignedPermutation identity(int n)
    {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return SignedPermutation(std::move(w));
    }

    int size() const noexcept { return static_cast<int>(window_.size()); }
    const std::vector<int> &window() const noexcept { return window_; }

    int operator()(int v) const
    {
        return v > 0 ? window_[static_cast<std::size_t>(v - 1)] : -window_[static_cast<std::size_t>(-v - 1)];
    }

    friend SignedPermutation operator*(const SignedPermutation &a, const SignedPermutation &b)
    {
        std::vector<int> w(b.window_.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = a(b.window_[i]);
        }
        SignedPermutation r;
        r.window_ = std::move(w);
        return r;
    }

    SignedPermutation inverse() const
    {
        std::vector<int> w(window_.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            const int v = window_[i];
            w[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? static_cast<int>(i) + 1 : -static_cast<int>(i) - 1;
        }
        SignedPermutation r;
        r.window_ = std::move(w);
        return r;
    }

    // Positive cycles come in pairs C, -C and are counted once by length;
    // a negative cycle has length 2j on [+-n] and contributes j to minus.
    BiPartition signed_cycle_type() const
    {
        std::vector<int> plus, minus;
        std::vector<bool> seen(window_.size() + 1, false);
        for (int start = 1; start <= size(); ++start) {
            if (seen[static_cast<std::size_t>(start)]) {
                continue;
            }
            int len = 0;
            bool negative = false;
            int v = start;
            do {
                seen[static_cast<std::size_t>(std::abs(v))] = true;
                v = (*this)(v);
                ++len;
                if (v == -start) {
                    negative = true;
                }
            } while (std::abs(v) != start);
            // the walk stops at +-start after visiting each absolute value once
            (negative ? minus : plus).push_back(len);
        }
        return {Partition(plus), Partition(minus)};
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < window_.size(); ++i) {
            s += (i ? "," : "") + std::to_string(window_[i]);
        }
        return s + "]";
    }

    friend auto operator<=>(const SignedPermutation &, const SignedPermutation &) = default;

private:
    std::vector<int> window_;
};

inline BiPartition signed_cycle_type(const SignedPermutation &s) { return s.signed_cycle_type(); }

// All 2^n n! signed permutations: underlying permutations in lex order,
// sign patterns by binary counter.
template <typename Fn>
void for_each_signed_permutation(int n, Fn &&fn)
{
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<int> w(base.size());
    do {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            for (int i = 0; i < n; ++i) {
                w[static_cast<std::size_t>(i)] = ((mask >> i) & 1U) ? -base[static_cast<std::size_t>(i)] : base[static_cast<std::size_t>(i)];
            }
            fn(SignedPermutation(w));
        }
    } while (std::next_permutation(base.begin(), base.end()));
}

} // namespace hilex
