#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <hilex/class_function.hpp>
#include <hilex/context.hpp>
#include <hilex/cyclotomic.hpp>
#include <hilex/error.hpp>
#include <hilex/parallel.hpp>
#include <hilex/partition.hpp>
#include <hilex/permutation.hpp>

namespace hilex {

enum class CharacterMode { plain, twisted };

inline const char *to_string(CharacterMode m) { return m == CharacterMode::plain ? "plain" : "twisted"; }

// Canonical element of cycle type lambda: parts (largest first) occupy
// consecutive blocks of letters and each block is rotated by one.
inline Permutation standard_representative(const Partition &lambda)
{
    std::vector<int> w(static_cast<std::size_t>(lambda.n()));
    int start = 0;
    for (int part : lambda.parts()) {
        for (int t = 1; t <= part; ++t) {
            w[static_cast<std::size_t>(start + t - 1)] = start + (t % part) + 1;
        }
        start += part;
    }
    return Permutation(std::move(w));
}

// Block structure of the standard representative: for each distinct part
// size i, the first letters (0-based offsets) of its a_i blocks.
struct CycleLayout {
    struct Group {
        int part = 0;
        std::vector<int> block_starts;
    };
    int n = 0;
    std::vector<Group> groups; // ascending part size

    static CycleLayout of(const Partition &lambda)
    {
        CycleLayout layout;
        layout.n = lambda.n();
        int start = 0;
        for (int part : lambda.parts()) {
            auto it = std::find_if(layout.groups.begin(), layout.groups.end(), [&](const Group &g) { return g.part == part; });
            if (it == layout.groups.end()) {
                layout.groups.push_back({part, {}});
                it = layout.groups.end() - 1;
            }
            it->block_starts.push_back(start);
            start += part;
        }
        std::sort(layout.groups.begin(), layout.groups.end(), [](const Group &a, const Group &b) { return a.part < b.part; });
        return layout;
    }
};

// Element of Z_x, x = standard_representative(lambda), in wreath coordinates:
// per group, a permutation of its blocks and one rotation exponent per block.
struct CentralizerElement {
    struct Component {
        std::vector<int> wreath_perm;       // block u -> block wreath_perm[u] (0-based)
        std::vector<int> base_cycle_powers; // rotation applied to block u, in [0, i)
    };
    std::vector<Component> components; // aligned with CycleLayout::groups

    Permutation realize(const CycleLayout &layout) const
    {
        std::vector<int> w(static_cast<std::size_t>(layout.n));
        for (std::size_t g = 0; g < layout.groups.size(); ++g) {
            const auto &grp = layout.groups[g];
            const auto &cmp = components[g];
            const int i = grp.part;
            for (std::size_t u = 0; u < grp.block_starts.size(); ++u) {
                const int from = grp.block_starts[u];
                const int to = grp.block_starts[static_cast<std::size_t>(cmp.wreath_perm[u])];
                for (int t = 0; t < i; ++t) {
                    w[static_cast<std::size_t>(from + t)] = to + (t + cmp.base_cycle_powers[u]) % i + 1;
                }
            }
        }
        return Permutation(std::move(w));
    }

    // sum over groups of (L / i) * (sum of block exponents), i.e. omega = zeta_L^result
    long long omega_exponent(const CycleLayout &layout, int order) const
    {
        long long e = 0;
        for (std::size_t g = 0; g < layout.groups.size(); ++g) {
            const int i = layout.groups[g].part;
            const long long s = std::accumulate(components[g].base_cycle_powers.begin(), components[g].base_cycle_powers.end(), 0LL);
            e += (order / i) * s;
        }
        return e;
    }

    int wreath_sign() const
    {
        int s = 1;
        for (const auto &c : components) {
            s *= Permutation(plus_one(c.wreath_perm)).sign();
        }
        return s;
    }

private:
    static std::vector<int> plus_one(std::vector<int> v)
    {
        for (auto &x : v) {
            ++x;
        }
        return v;
    }
};

namespace detail {

// All elements of G wr S_a for a cyclic-coded G of the given order, as
// (block perm, per-block codes in [0, radix)).
inline std::vector<CentralizerElement::Component> wreath_components(int radix, int a)
{
    std::vector<CentralizerElement::Component> out;
    std::vector<int> perm(static_cast<std::size_t>(a));
    std::iota(perm.begin(), perm.end(), 0);
    long long powers_count = 1;
    for (int b = 0; b < a; ++b) {
        powers_count *= radix;
    }
    do {
        for (long long code = 0; code < powers_count; ++code) {
            std::vector<int> powers(static_cast<std::size_t>(a));
            long long c = code;
            for (int b = 0; b < a; ++b) {
                powers[static_cast<std::size_t>(b)] = static_cast<int>(c % radix);
                c /= radix;
            }
            out.push_back({perm, std::move(powers)});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace detail

inline int cyclotomic_order_for(const Partition &lambda)
{
    return static_cast<int>(std::max(1LL, lambda.parts_lcm()));
}

// Calls fn(element) for every element of Z_x in the index range [begin, end)
// of the mixed-radix enumeration. Returns |Z_x| when called with end = -1.
class CentralizerEnumerator {
public:
    explicit CentralizerEnumerator(const Partition &lambda) : layout_(CycleLayout::of(lambda))
    {
        for (const auto &g : layout_.groups) {
            lists_.push_back(detail::wreath_components(g.part, static_cast<int>(g.block_starts.size())));
        }
        total_ = 1;
        for (const auto &l : lists_) {
            total_ *= l.size();
        }
    }

    const CycleLayout &layout() const noexcept { return layout_; }
    std::uint64_t size() const noexcept { return total_; }

    template <typename Fn>
    void for_each(std::uint64_t begin, std::uint64_t end, Fn &&fn) const
    {
        CentralizerElement z;
        z.components.resize(lists_.size());
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t c = idx;
            for (std::size_t g = 0; g < lists_.size(); ++g) {
                z.components[g] = lists_[g][c % lists_[g].size()];
                c /= lists_[g].size();
            }
            fn(static_cast<const CentralizerElement &>(z));
        }
    }

private:
    CycleLayout layout_;
    std::vector<std::vector<CentralizerElement::Component>> lists_;
    std::uint64_t total_ = 1;
};

struct CentralizerSample {
    Permutation element;
    CycloInt omega_plain;
    CycloInt omega_twisted;
};

// Every element of Z_x with its realized permutation and both omega values.
inline std::vector<CentralizerSample> centralizer_elements(const Partition &lambda, const Context &ctx = {})
{
    if (centralizer_order_sn(lambda) > ctx.limits.max_centralizer) {
        throw size_error("centralizer of " + lambda.str() + " exceeds the configured limit");
    }
    const CentralizerEnumerator en(lambda);
    const int order = cyclotomic_order_for(lambda);
    std::vector<CentralizerSample> out;
    out.reserve(en.size());
    en.for_each(0, en.size(), [&](const CentralizerElement &z) {
        const long long e = z.omega_exponent(en.layout(), order);
        CycloInt tw = CycloInt::root(order, e);
        if (z.wreath_sign() < 0) {
            tw = -1 * tw;
        }
        out.push_back({z.realize(en.layout()), CycloInt::root(order, e), std::move(tw)});
    });
    return out;
}

// psi^lambda (plain) or tau^lambda (twisted) via
//   chi(nu) = |Z_nu| / |Z_lambda| * sum_{z in Z_x, type(z) = nu} omega(z).
// `root_exponent` picks the primitive character zeta -> zeta^c; it must be
// coprime to every part of lambda.
inline SnClassFunction higher_lie_character(const Partition &lambda, CharacterMode mode, const Context &ctx = {},
                                            int root_exponent = 1)
{
    const BigInt z_lambda = centralizer_order_sn(lambda);
    if (z_lambda > ctx.limits.max_centralizer) {
        throw size_error("centralizer of " + lambda.str() + " has order " + z_lambda.str() + ", above the limit");
    }
    const int order = cyclotomic_order_for(lambda);
    if (std::gcd(root_exponent, order) != 1) {
        throw std::invalid_argument("root exponent must be coprime to the cyclotomic order");
    }
    SnClassFunction chi = zero_class_function_sn(lambda.n());
    const CentralizerEnumerator en(lambda);

    using Buckets = std::vector<std::vector<std::int64_t>>; // [class][exponent]
    const std::uint64_t total = en.size();
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(total, ctx.jobs * 4ULL));
    auto partial = parallel_map<Buckets>(chunks, ctx.jobs, [&](std::size_t c) {
        Buckets b(chi.size(), std::vector<std::int64_t>(static_cast<std::size_t>(order), 0));
        const std::uint64_t lo = total * c / chunks;
        const std::uint64_t hi = total * (c + 1) / chunks;
        en.for_each(lo, hi, [&](const CentralizerElement &z) {
            const std::size_t k = chi.index_of(z.realize(en.layout()).cycle_type());
            long long e = (z.omega_exponent(en.layout(), order) * root_exponent) % order;
            const int weight = (mode == CharacterMode::twisted) ? z.wreath_sign() : 1;
            b[k][static_cast<std::size_t>(e)] += weight;
        });
        return b;
    });

    for (std::size_t k = 0; k < chi.size(); ++k) {
        CycloInt sum(order);
        for (const auto &b : partial) {
            for (int r = 0; r < order; ++r) {
                sum.add_root(r, b[k][static_cast<std::size_t>(r)]);
            }
        }
        const BigInt numerator = BigInt(sum.integer_value()) * centralizer_order_sn(chi.keys()[k]);
        if (numerator % z_lambda != 0) {
            throw consistency_error("character value at " + chi.keys()[k].str() + " is not an integer");
        }
        chi.value(k) = numerator / z_lambda;
    }
    return chi;
}

struct CycleStructure {
    int cycles = 0;
    int cycle_length = 0;
    friend bool operator==(const CycleStructure &, const CycleStructure &) = default;
};

namespace detail {

// Element of G_i wr S_ell acting on the ell x i array p_{s,t} = s*i + t
// (0-based), whose block permutation is the ell-cycle s -> s+1 and whose
// block s carries rotation powers[s].
inline Permutation single_cycle_element(int i, const std::vector<int> &powers)
{
    const int ell = static_cast<int>(powers.size());
    std::vector<int> w(static_cast<std::size_t>(i * ell));
    for (int s = 0; s < ell; ++s) {
        const int next = (s + 1) % ell;
        for (int t = 0; t < i; ++t) {
            w[static_cast<std::size_t>(s * i + t)] = next * i + (t + powers[static_cast<std::size_t>(s)]) % i + 1;
        }
    }
    return Permutation(std::move(w));
}

} // namespace detail

// The ell-cycle of class zeta_i^k in G_i wr S_ell, realized in S_{i*ell}:
// rows advance by one, and the last row wraps to the first shifted by k.
inline CycleStructure verify_single_cycle_structure(int i, int k, int ell)
{
    if (i < 1 || ell < 1 || k < 0 || k >= i) {
        throw std::domain_error("verify_single_cycle_structure: need i >= 1, 0 <= k < i, ell >= 1");
    }
    std::vector<int> powers(static_cast<std::size_t>(ell), 0);
    powers.back() = k;
    const Partition type = detail::single_cycle_element(i, powers).cycle_type();
    const auto mult = type.multiplicities();
    if (mult.size() != 1) {
        throw consistency_error("single wreath cycle realized with unequal cycle lengths: " + type.str());
    }
    return {mult.begin()->second, mult.begin()->first};
}

// (1 / i^{ell-1}) * sum of omega (times sign when `with_sign`) over the
// elements of G_i wr S_ell with block cycle s -> s+1 whose realization is
// a product of i/e cycles of length ell*e.
inline Rational single_cycle_collapse(int i, int e, int ell, bool with_sign)
{
    if (i < 1 || e < 1 || ell < 1 || i % e != 0) {
        throw std::domain_error("single_cycle_collapse: need e | i and ell >= 1");
    }
    const int j = ell * e;
    const Partition target(std::vector<int>(static_cast<std::size_t>(i / e), j));
    CycloInt sum(i);
    long long count = 1;
    for (int s = 0; s < ell; ++s) {
        count *= i;
    }
    std::vector<int> powers(static_cast<std::size_t>(ell));
    for (long long code = 0; code < count; ++code) {
        long long c = code;
        long long total = 0;
        for (int s = 0; s < ell; ++s) {
            powers[static_cast<std::size_t>(s)] = static_cast<int>(c % i);
            total += powers[static_cast<std::size_t>(s)];
            c /= i;
        }
        const Permutation z = detail::single_cycle_element(i, powers);
        const Partition type = z.cycle_type();
        if (type != target) {
            continue;
        }
        sum.add_root(total, with_sign ? type.sign() : 1);
    }
    return Rational(sum.integer_value(), BigInt(count / i));
}

} // namespace hilex
