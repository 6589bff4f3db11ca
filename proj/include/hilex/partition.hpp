#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <hilex/numeric.hpp>

namespace hilex {

// Integer partition stored as weakly decreasing parts.
//
// Partitions compare canonically: first by size, then reverse
// lexicographically on the part list, so (3) < (2,1) < (1,1,1).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_) {
            if (p <= 0) {
                throw std::invalid_argument("partition parts must be positive");
            }
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int> &parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    int multiplicity(int j) const
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
    }

    // part size -> multiplicity, ascending by part size
    std::map<int, int> multiplicities() const
    {
        std::map<int, int> m;
        for (int p : parts_) {
            ++m[p];
        }
        return m;
    }

    // Sign of any permutation with this cycle type.
    int sign() const noexcept { return sign_power(n_ - length()); }

    bool all_parts_odd() const
    {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
    }

    // Every part divides k.
    bool divides(long long k) const
    {
        return std::all_of(parts_.begin(), parts_.end(), [k](int p) { return k % p == 0; });
    }

    long long parts_lcm() const { return lcm_range(parts_); }

    Partition with_part(int p) const
    {
        auto v = parts_;
        v.push_back(p);
        return Partition(std::move(v));
    }

    friend bool operator==(const Partition &, const Partition &) = default;

    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        // reverse lexicographic: larger leading parts first
        return b.parts_ <=> a.parts_;
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) {
                s += ",";
            }
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class PartitionFilter { all, odd_parts, even_parts };

// OP(n): all parts odd.
inline bool in_op(const Partition &p) { return p.all_parts_odd(); }

// EP(n): all parts even for even n; for odd n, exactly one part equal to 1
// and every other part even.
inline bool in_ep(const Partition &p)
{
    int ones = 0;
    for (int part : p.parts()) {
        if (part == 1) {
            ++ones;
        } else if (part % 2 == 1) {
            return false;
        }
    }
    return (p.n() % 2 == 0) ? ones == 0 : ones == 1;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int> &prefix, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

// All partitions of n in canonical order, optionally restricted to OP(n)/EP(n).
inline std::vector<Partition> partitions(int n, PartitionFilter filter = PartitionFilter::all)
{
    if (n < 0) {
        throw std::domain_error("partitions: n must be nonnegative");
    }
    std::vector<Partition> all;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, all);
    if (filter == PartitionFilter::all || n == 0) {
        return all;
    }
    std::vector<Partition> out;
    for (auto &p : all) {
        if ((filter == PartitionFilter::odd_parts && in_op(p)) || (filter == PartitionFilter::even_parts && in_ep(p))) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

// |Z_{S_n}(nu)| = prod_j b_j! * j^{b_j}
inline BigInt centralizer_order_sn(const Partition &nu)
{
    BigInt z = 1;
    for (auto [j, b] : nu.multiplicities()) {
        z *= factorial(b) * ipow(BigInt(j), b);
    }
    return z;
}

inline BigInt class_size_sn(const Partition &nu) { return factorial(nu.n()) / centralizer_order_sn(nu); }

// Pair (plus, minus) indexing conjugacy classes of B_n: plus lists positive
// cycle lengths, minus lists negative cycle lengths halved.
struct BiPartition {
    Partition plus;
    Partition minus;

    int n() const noexcept { return plus.n() + minus.n(); }

    friend bool operator==(const BiPartition &, const BiPartition &) = default;

    // |plus| descending, then each component canonically.
    friend std::strong_ordering operator<=>(const BiPartition &a, const BiPartition &b)
    {
        if (auto c = a.n() <=> b.n(); c != 0) {
            return c;
        }
        if (auto c = b.plus.n() <=> a.plus.n(); c != 0) {
            return c;
        }
        if (auto c = a.plus <=> b.plus; c != 0) {
            return c;
        }
        return a.minus <=> b.minus;
    }

    std::string str() const { return "(" + plus.str() + "," + minus.str() + ")"; }
};

inline std::vector<BiPartition> bipartitions(int n)
{
    std::vector<BiPartition> out;
    for (int k = n; k >= 0; --k) {
        for (const auto &p : partitions(k)) {
            for (const auto &m : partitions(n - k)) {
                out.push_back({p, m});
            }
        }
    }
    return out;
}

// |Z_{B_n}(bnu)| = prod over both components of b_j! * (2j)^{b_j}
inline BigInt centralizer_order_bn(const BiPartition &bnu)
{
    BigInt z = 1;
    for (const Partition *part : {&bnu.plus, &bnu.minus}) {
        for (auto [j, b] : part->multiplicities()) {
            z *= factorial(b) * ipow(BigInt(2 * j), b);
        }
    }
    return z;
}

inline BigInt order_bn(int n) { return ipow(BigInt(2), n) * factorial(n); }

inline BigInt class_size_bn(const BiPartition &bnu) { return order_bn(bnu.n()) / centralizer_order_bn(bnu); }

} // namespace hilex
