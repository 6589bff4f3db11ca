#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <hilex/class_function.hpp>
#include <hilex/context.hpp>
#include <hilex/error.hpp>
#include <hilex/parallel.hpp>
#include <hilex/partition.hpp>

namespace hilex {

// Subset of [1..n-1], bit i-1 set iff i belongs to the set.
struct DescentSet {
    int n = 0;
    std::uint64_t mask = 0;

    bool contains(int i) const noexcept { return (mask >> (i - 1)) & 1U; }

    DescentSet complement() const noexcept
    {
        const std::uint64_t full = (n <= 1) ? 0 : ((std::uint64_t{1} << (n - 1)) - 1);
        return {n, full & ~mask};
    }

    std::vector<int> positions() const
    {
        std::vector<int> out;
        for (int i = 1; i < n; ++i) {
            if (contains(i)) {
                out.push_back(i);
            }
        }
        return out;
    }

    // "1,3"; the empty set is ""
    std::string str() const
    {
        std::string s;
        for (int i : positions()) {
            if (!s.empty()) {
                s += ",";
            }
            s += std::to_string(i);
        }
        return s;
    }

    friend bool operator==(const DescentSet &, const DescentSet &) = default;
    friend auto operator<=>(const DescentSet &, const DescentSet &) = default;
};

// Permutation of [1..n] in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> window) : window_(std::move(window))
    {
        std::vector<bool> seen(window_.size() + 1, false);
        for (int v : window_) {
            if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("not a permutation window");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    Permutation(std::initializer_list<int> w) : Permutation(std::vector<int>(w)) {}

    static Permutation identity(int n)
    {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(unchecked{}, std::move(w));
    }

    int size() const noexcept { return static_cast<int>(window_.size()); }
    const std::vector<int> &window() const noexcept { return window_; }

    // image of letter i (1-based)
    int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }

    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation &a, const Permutation &b)
    {
        std::vector<int> w(b.window_.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = a(b.window_[i]);
        }
        return Permutation(unchecked{}, std::move(w));
    }

    Permutation inverse() const
    {
        std::vector<int> w(window_.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[static_cast<std::size_t>(window_[i] - 1)] = static_cast<int>(i) + 1;
        }
        return Permutation(unchecked{}, std::move(w));
    }

    Permutation power(long long k) const
    {
        if (k < 0) {
            return inverse().power(-k);
        }
        // each letter is moved k steps along its own cycle
        std::vector<int> w(window_.size());
        std::vector<int> cycle;
        std::vector<bool> seen(window_.size() + 1, false);
        for (int start = 1; start <= size(); ++start) {
            if (seen[static_cast<std::size_t>(start)]) {
                continue;
            }
            cycle.clear();
            for (int v = start; !seen[static_cast<std::size_t>(v)]; v = (*this)(v)) {
                seen[static_cast<std::size_t>(v)] = true;
                cycle.push_back(v);
            }
            const std::size_t len = cycle.size();
            for (std::size_t i = 0; i < len; ++i) {
                w[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + static_cast<std::size_t>(k % static_cast<long long>(len))) % len];
            }
        }
        return Permutation(unchecked{}, std::move(w));
    }

    Partition cycle_type() const
    {
        std::vector<int> lengths;
        std::vector<bool> seen(window_.size() + 1, false);
        for (int start = 1; start <= size(); ++start) {
            if (seen[static_cast<std::size_t>(start)]) {
                continue;
            }
            int len = 0;
            for (int v = start; !seen[static_cast<std::size_t>(v)]; v = (*this)(v)) {
                seen[static_cast<std::size_t>(v)] = true;
                ++len;
            }
            lengths.push_back(len);
        }
        return Partition(std::move(lengths));
    }

    int sign() const { return cycle_type().sign(); }

    DescentSet descent_set() const
    {
        DescentSet d{size(), 0};
        for (int i = 1; i < size(); ++i) {
            if (window_[static_cast<std::size_t>(i - 1)] > window_[static_cast<std::size_t>(i)]) {
                d.mask |= std::uint64_t{1} << (i - 1);
            }
        }
        return d;
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < window_.size(); ++i) {
            s += (i ? "," : "") + std::to_string(window_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    struct unchecked {};
    Permutation(unchecked, std::vector<int> w) : window_(std::move(w)) {}

    std::vector<int> window_;
};

// Visits S_n in lexicographic window order, restricted to windows starting
// with `first` when first > 0.
template <typename Fn>
void for_each_permutation(int n, Fn &&fn, int first = 0)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    if (first > 0) {
        std::rotate(w.begin(), w.begin() + (first - 1), w.begin() + first);
    }
    do {
        if (first > 0 && w.front() != first) {
            break;
        }
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

inline void require_perm_cap(int n, const Context &ctx) { require_cap("S_n enumeration n", n, ctx.limits.max_perm_n); }

enum class CycleClassSet { oc, ec };

// OC(n) (cycle type in OP(n)) or EC(n) (cycle type in EP(n)), lexicographic.
inline std::vector<Permutation> oc_ec_members(int n, CycleClassSet which, const Context &ctx = {})
{
    require_perm_cap(n, ctx);
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation &p) {
        const Partition t = p.cycle_type();
        if (which == CycleClassSet::oc ? in_op(t) : in_ep(t)) {
            out.push_back(p);
        }
    });
    return out;
}

using DescentHistogram = std::map<DescentSet, std::uint64_t>;

inline DescentHistogram descent_distribution(const std::vector<Permutation> &perms, bool complement)
{
    DescentHistogram h;
    for (const auto &p : perms) {
        const DescentSet d = p.descent_set();
        ++h[complement ? d.complement() : d];
    }
    return h;
}

// Histogram of Des over the permutations of S_n whose cycle type satisfies
// `keep`, split by leading letter across ctx.jobs workers.
template <typename Pred>
DescentHistogram descent_distribution_where(int n, Pred keep, bool complement, const Context &ctx = {})
{
    require_perm_cap(n, ctx);
    if (n == 0) {
        return keep(Partition{}) ? DescentHistogram{{DescentSet{0, 0}, 1}} : DescentHistogram{};
    }
    auto parts = parallel_map<DescentHistogram>(static_cast<std::size_t>(n), ctx.jobs, [&](std::size_t idx) {
        DescentHistogram h;
        for_each_permutation(
            n,
            [&](const Permutation &p) {
                if (keep(p.cycle_type())) {
                    const DescentSet d = p.descent_set();
                    ++h[complement ? d.complement() : d];
                }
            },
            static_cast<int>(idx) + 1);
        return h;
    });
    DescentHistogram merged;
    for (const auto &h : parts) {
        for (const auto &[k, v] : h) {
            merged[k] += v;
        }
    }
    return merged;
}

struct BruteForceClassFunction {
    SnClassFunction class_sums; // sum of f over each class
    SnClassFunction values;     // f on any member of the class
};

// Evaluates an integer-valued f on every element of S_n. Throws
// consistency_error when f is not constant on some conjugacy class.
template <typename Fn>
BruteForceClassFunction brute_force_class_function(int n, Fn f, const Context &ctx = {})
{
    require_perm_cap(n, ctx);
    BruteForceClassFunction out{zero_class_function_sn(n), zero_class_function_sn(n)};
    std::vector<bool> seen(out.values.size(), false);
    for_each_permutation(n, [&](const Permutation &p) {
        const std::size_t i = out.values.index_of(p.cycle_type());
        const BigInt v = f(p);
        out.class_sums.value(i) += v;
        if (!seen[i]) {
            out.values.value(i) = v;
            seen[i] = true;
        } else if (out.values.value(i) != v) {
            throw consistency_error("evaluator is not constant on class " + out.values.keys()[i].str() + " (at " +
                                    p.str() + ")");
        }
    });
    return out;
}

} // namespace hilex
