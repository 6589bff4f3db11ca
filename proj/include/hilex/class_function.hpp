#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <hilex/numeric.hpp>
#include <hilex/partition.hpp>

namespace hilex {

// Exact integer-valued function on the conjugacy classes of a fixed group,
// keyed by Partition (S_n) or BiPartition (B_n). Keys are kept in canonical
// order so that iteration and serialization are deterministic.
template <typename Key>
class ClassFunction {
public:
    ClassFunction() = default;

    ClassFunction(int n, std::vector<Key> keys) : n_(n), keys_(std::move(keys)), values_(keys_.size(), 0)
    {
        std::sort(keys_.begin(), keys_.end());
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            index_.emplace(keys_[i], i);
        }
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return keys_.size(); }
    const std::vector<Key> &keys() const noexcept { return keys_; }
    const std::vector<BigInt> &values() const noexcept { return values_; }

    const BigInt &at(const Key &k) const { return values_[index_of(k)]; }
    BigInt &at(const Key &k) { return values_[index_of(k)]; }
    const BigInt &value(std::size_t i) const { return values_[i]; }
    BigInt &value(std::size_t i) { return values_[i]; }

    std::size_t index_of(const Key &k) const
    {
        auto it = index_.find(k);
        if (it == index_.end()) {
            throw std::out_of_range("class function has no class " + k.str());
        }
        return it->second;
    }

    ClassFunction &operator+=(const ClassFunction &o)
    {
        same_domain(o);
        for (std::size_t i = 0; i < values_.size(); ++i) {
            values_[i] += o.values_[i];
        }
        return *this;
    }

    friend ClassFunction operator+(ClassFunction a, const ClassFunction &b) { return a += b; }

    friend ClassFunction operator*(const BigInt &k, ClassFunction a)
    {
        for (auto &v : a.values_) {
            v *= k;
        }
        return a;
    }

    friend bool operator==(const ClassFunction &a, const ClassFunction &b)
    {
        return a.n_ == b.n_ && a.keys_ == b.keys_ && a.values_ == b.values_;
    }

private:
    void same_domain(const ClassFunction &o) const
    {
        if (o.n_ != n_ || o.keys_ != keys_) {
            throw std::invalid_argument("class functions live on different groups");
        }
    }

    int n_ = 0;
    std::vector<Key> keys_;
    std::vector<BigInt> values_;
    std::map<Key, std::size_t> index_;
};

using SnClassFunction = ClassFunction<Partition>;
using BnClassFunction = ClassFunction<BiPartition>;

inline SnClassFunction zero_class_function_sn(int n) { return SnClassFunction(n, partitions(n)); }
inline BnClassFunction zero_class_function_bn(int n) { return BnClassFunction(n, bipartitions(n)); }

// sign (x) chi, pointwise.
inline SnClassFunction tensor_sign(SnClassFunction chi)
{
    for (std::size_t i = 0; i < chi.size(); ++i) {
        if (chi.keys()[i].sign() < 0) {
            chi.value(i) = -chi.value(i);
        }
    }
    return chi;
}

// chi(identity class)
template <typename Key>
BigInt dimension(const ClassFunction<Key> &chi)
{
    if constexpr (std::is_same_v<Key, Partition>) {
        return chi.at(Partition(std::vector<int>(static_cast<std::size_t>(chi.n()), 1)));
    } else {
        return chi.at(BiPartition{Partition(std::vector<int>(static_cast<std::size_t>(chi.n()), 1)), Partition{}});
    }
}

} // namespace hilex
