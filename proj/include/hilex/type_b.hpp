#pragma once

// Higher Lie characters of the hyperoctahedral group B_n, the character
// eta_{B_n}, and induction from B_n to S_{2n} / S_{2n+1} by class fusion.

#include <hilex/class_function.hpp>
#include <hilex/context.hpp>
#include <hilex/cyclotomic.hpp>
#include <hilex/error.hpp>
#include <hilex/gf_identities.hpp>
#include <hilex/higher_lie.hpp>
#include <hilex/parallel.hpp>
#include <hilex/partition.hpp>
#include <hilex/series.hpp>
#include <hilex/signed_permutation.hpp>

#include <functional>
#include <map>
#include <set>

namespace hilex {

inline void require_bn_enum_cap(int n, const Context &ctx) { require_cap("B_n enumeration n", n, ctx.limits.max_bn_enum_n); }
inline void require_bn_char_cap(int n, const Context &ctx) { require_cap("B_n character n", n, ctx.limits.max_bn_char_n); }

// ---- signed permutations with positive cycles only ----

struct PositiveOnlyCount {
    BigInt count = 0;     // brute force over B_n
    BigInt matchings = 0; // perfect matchings of [+-n]
    bool bijection_ok = false;
};

namespace detail {

// letters of [+-n] as 0..2n-1: +v -> v-1, -v -> n+v-1
inline int letter_index(int v, int n) { return v > 0 ? v - 1 : n - v - 1; }
inline int letter_value(int idx, int n) { return idx < n ? idx + 1 : -(idx - n + 1); }

template <typename Fn>
void for_each_matching(std::vector<int> &mate, Fn &&fn)
{
    const auto it = std::find(mate.begin(), mate.end(), -1);
    if (it == mate.end()) {
        fn(static_cast<const std::vector<int> &>(mate));
        return;
    }
    const int a = static_cast<int>(it - mate.begin());
    for (int b = a + 1; b < static_cast<int>(mate.size()); ++b) {
        if (mate[static_cast<std::size_t>(b)] != -1) {
            continue;
        }
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
        for_each_matching(mate, fn);
        mate[static_cast<std::size_t>(a)] = -1;
        mate[static_cast<std::size_t>(b)] = -1;
    }
}

} // namespace detail

// sigma_m for a perfect matching m of [+-n] (mate[idx] = matched index).
// Superpose m with m_0 = {i, -i}; orient each alternating cycle so that the
// m_0 edge leaves its largest positive letter i_0; sigma_m moves every
// letter two steps forward along its cycle.
inline SignedPermutation matching_permutation(const std::vector<int> &mate, int n)
{
    std::vector<int> image(static_cast<std::size_t>(2 * n), 0);
    std::vector<bool> done(static_cast<std::size_t>(2 * n), false);
    for (int i0 = n; i0 >= 1; --i0) {
        const int start = detail::letter_index(i0, n);
        if (done[static_cast<std::size_t>(start)]) {
            continue;
        }
        // v_0 = i_0, v_1 = -i_0, v_2 = m(v_1), v_3 = -v_2, ...
        std::vector<int> walk;
        int v = start;
        do {
            walk.push_back(v);
            const int partner = detail::letter_index(-detail::letter_value(v, n), n);
            walk.push_back(partner);
            v = mate[static_cast<std::size_t>(partner)];
        } while (v != start);
        for (std::size_t k = 0; k < walk.size(); ++k) {
            done[static_cast<std::size_t>(walk[k])] = true;
            image[static_cast<std::size_t>(walk[k])] = walk[(k + 2) % walk.size()];
        }
    }
    std::vector<int> window(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        window[static_cast<std::size_t>(i - 1)] = detail::letter_value(image[static_cast<std::size_t>(i - 1)], n);
    }
    SignedPermutation s(window);
    for (int k = 0; k < 2 * n; ++k) {
        if (s(detail::letter_value(k, n)) != detail::letter_value(image[static_cast<std::size_t>(k)], n)) {
            throw consistency_error("sigma_m does not commute with negation");
        }
    }
    return s;
}

inline PositiveOnlyCount positive_only_count(int n, const Context &ctx = {})
{
    require_bn_enum_cap(n, ctx);
    PositiveOnlyCount r;
    std::set<SignedPermutation> positive;
    for_each_signed_permutation(n, [&](const SignedPermutation &s) {
        if (s.signed_cycle_type().minus.length() == 0) {
            positive.insert(s);
        }
    });
    r.count = positive.size();

    std::set<SignedPermutation> images;
    bool ok = true;
    std::vector<int> mate(static_cast<std::size_t>(2 * n), -1);
    detail::for_each_matching(mate, [&](const std::vector<int> &m) {
        ++r.matchings;
        const SignedPermutation s = matching_permutation(m, n);
        ok = ok && positive.count(s) == 1;
        images.insert(s);
    });
    r.bijection_ok = ok && images.size() == positive.size() && BigInt(images.size()) == r.matchings;
    return r;
}

// ---- centralizers and characters ----

// Canonical element of class (plus, minus): plus parts then minus parts,
// each largest first, on consecutive blocks; a block of size i maps
// t -> t+1 and its last letter to +first (plus) or -first (minus).
inline SignedPermutation standard_representative_bn(const BiPartition &bl)
{
    std::vector<int> w(static_cast<std::size_t>(bl.n()));
    int start = 0;
    for (int sign : {1, -1}) {
        for (int part : (sign > 0 ? bl.plus : bl.minus).parts()) {
            for (int t = 1; t <= part; ++t) {
                w[static_cast<std::size_t>(start + t - 1)] = t < part ? start + t + 1 : sign * (start + 1);
            }
            start += part;
        }
    }
    return SignedPermutation(std::move(w));
}

struct BnLayout {
    struct Group {
        int part = 0;
        bool minus = false;
        std::vector<int> block_starts;
        int radix() const { return 2 * part; } // |G_{i,+}| = |G_{i,-}| = 2i
    };
    int n = 0;
    std::vector<Group> groups;

    static BnLayout of(const BiPartition &bl)
    {
        BnLayout layout;
        layout.n = bl.n();
        int start = 0;
        for (bool minus : {false, true}) {
            for (int part : (minus ? bl.minus : bl.plus).parts()) {
                auto it = std::find_if(layout.groups.begin(), layout.groups.end(),
                                       [&](const Group &g) { return g.part == part && g.minus == minus; });
                if (it == layout.groups.end()) {
                    layout.groups.push_back({part, minus, {}});
                    it = layout.groups.end() - 1;
                }
                it->block_starts.push_back(start);
                start += part;
            }
        }
        return layout;
    }
};

// lcm of i over plus parts and 2i over minus parts
inline int cyclotomic_order_for(const BiPartition &bl)
{
    long long l = 1;
    for (int p : bl.plus.parts()) {
        l = std::lcm(l, static_cast<long long>(p));
    }
    for (int p : bl.minus.parts()) {
        l = std::lcm(l, 2LL * p);
    }
    return static_cast<int>(l);
}

// Per block, the code c in [0, 2i) of the G_{i,+-} factor:
//   plus:  rotation r = c mod i, times w_0 when c >= i; omega = zeta_i^r
//   minus: x_-^c; omega = zeta_{2i}^c
struct BnCentralizerElement {
    std::vector<CentralizerElement::Component> components;

    SignedPermutation realize(const BnLayout &layout) const
    {
        std::vector<int> w(static_cast<std::size_t>(layout.n));
        for (std::size_t g = 0; g < layout.groups.size(); ++g) {
            const auto &grp = layout.groups[g];
            const auto &cmp = components[g];
            const int i = grp.part;
            for (std::size_t u = 0; u < grp.block_starts.size(); ++u) {
                const int from = grp.block_starts[u];
                const int to = grp.block_starts[static_cast<std::size_t>(cmp.wreath_perm[u])];
                const int c = cmp.base_cycle_powers[u];
                for (int t = 0; t < i; ++t) {
                    int pos, sign;
                    if (grp.minus) {
                        pos = (t + c) % i;
                        sign = ((t + c) / i) % 2 == 0 ? 1 : -1;
                    } else {
                        pos = (t + c % i) % i;
                        sign = c < i ? 1 : -1;
                    }
                    w[static_cast<std::size_t>(from + t)] = sign * (to + pos + 1);
                }
            }
        }
        return SignedPermutation(std::move(w));
    }

    // exponent e with omega = zeta_L^e; `root` gives the primitive power
    // used on the (i, minus) factor and must be a unit mod i (plus) or 2i.
    long long omega_exponent(const BnLayout &layout, int order, const std::function<int(int, bool)> &root) const
    {
        long long e = 0;
        for (std::size_t g = 0; g < layout.groups.size(); ++g) {
            const auto &grp = layout.groups[g];
            const int m = grp.minus ? 2 * grp.part : grp.part;
            const long long c = root ? root(grp.part, grp.minus) : 1;
            for (int code : components[g].base_cycle_powers) {
                const long long r = grp.minus ? code : code % grp.part;
                e += (order / m) * ((r * c) % m);
            }
        }
        return e;
    }
};

class BnCentralizerEnumerator {
public:
    explicit BnCentralizerEnumerator(const BiPartition &bl) : layout_(BnLayout::of(bl))
    {
        for (const auto &g : layout_.groups) {
            lists_.push_back(detail::wreath_components(g.radix(), static_cast<int>(g.block_starts.size())));
        }
        for (const auto &l : lists_) {
            total_ *= l.size();
        }
    }

    const BnLayout &layout() const noexcept { return layout_; }
    std::uint64_t size() const noexcept { return total_; }

    template <typename Fn>
    void for_each(std::uint64_t begin, std::uint64_t end, Fn &&fn) const
    {
        BnCentralizerElement z;
        z.components.resize(lists_.size());
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t c = idx;
            for (std::size_t g = 0; g < lists_.size(); ++g) {
                z.components[g] = lists_[g][c % lists_[g].size()];
                c /= lists_[g].size();
            }
            fn(static_cast<const BnCentralizerElement &>(z));
        }
    }

private:
    BnLayout layout_;
    std::vector<std::vector<CentralizerElement::Component>> lists_;
    std::uint64_t total_ = 1;
};

// psi_{B_n}^{bl}(bnu) = |Z(bnu)| / |Z(bl)| * sum_{z in Z_x of class bnu} omega(z)
inline BnClassFunction higher_lie_character_bn(const BiPartition &bl, const Context &ctx = {},
                                               const std::function<int(int, bool)> &root = {})
{
    require_bn_char_cap(bl.n(), ctx);
    const BigInt z_lambda = centralizer_order_bn(bl);
    if (z_lambda > ctx.limits.max_centralizer) {
        throw size_error("centralizer of " + bl.str() + " has order " + z_lambda.str() + ", above the limit");
    }
    const int order = cyclotomic_order_for(bl);
    BnClassFunction chi = zero_class_function_bn(bl.n());
    const BnCentralizerEnumerator en(bl);
    for (const auto &g : en.layout().groups) {
        const int m = g.minus ? 2 * g.part : g.part;
        if (root && std::gcd(root(g.part, g.minus), m) != 1) {
            throw std::invalid_argument("root choice must be a unit modulo the factor order");
        }
    }

    using Buckets = std::vector<std::vector<std::int64_t>>;
    const std::uint64_t total = en.size();
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(total, ctx.jobs * 4ULL));
    auto partial = parallel_map<Buckets>(chunks, ctx.jobs, [&](std::size_t c) {
        Buckets b(chi.size(), std::vector<std::int64_t>(static_cast<std::size_t>(order), 0));
        en.for_each(total * c / chunks, total * (c + 1) / chunks, [&](const BnCentralizerElement &z) {
            const std::size_t k = chi.index_of(z.realize(en.layout()).signed_cycle_type());
            b[k][static_cast<std::size_t>(z.omega_exponent(en.layout(), order, root) % order)] += 1;
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
        const BigInt numerator = BigInt(sum.integer_value()) * centralizer_order_bn(chi.keys()[k]);
        if (numerator % z_lambda != 0) {
            throw consistency_error("B_n character value at " + chi.keys()[k].str() + " is not an integer");
        }
        chi.value(k) = numerator / z_lambda;
    }
    return chi;
}

// eta_{B_n} = sum over lambda |- n of psi_{B_n}^{(lambda, empty)}
inline BnClassFunction eta(int n, const Context &ctx = {})
{
    BnClassFunction out = zero_class_function_bn(n);
    if (n == 0) {
        out.value(0) = 1;
        return out;
    }
    for (const auto &lambda : partitions(n)) {
        out += higher_lie_character_bn({lambda, Partition{}}, ctx);
    }
    return out;
}

// ---- fusion into S_{2n} / S_{2n+1} ----

enum class FusionTarget { even, odd }; // S_{2n}, S_{2n+1}

inline Partition fuse_class(const BiPartition &bnu, FusionTarget target)
{
    std::vector<int> parts;
    for (int j : bnu.plus.parts()) {
        parts.push_back(j);
        parts.push_back(j);
    }
    for (int j : bnu.minus.parts()) {
        parts.push_back(2 * j);
    }
    if (target == FusionTarget::odd) {
        parts.push_back(1);
    }
    return Partition(parts);
}

// chi induced from B_n to S_N:
//   xi(nu) = |Z_{S_N}(nu)| * sum_{bnu fusing to nu} chi(bnu) / |Z_{B_n}(bnu)|
inline SnClassFunction induce_to_sn(const BnClassFunction &chi, FusionTarget target)
{
    const int big_n = 2 * chi.n() + (target == FusionTarget::odd ? 1 : 0);
    std::map<Partition, Rational> acc;
    for (std::size_t k = 0; k < chi.size(); ++k) {
        acc[fuse_class(chi.keys()[k], target)] += Rational(chi.value(k), centralizer_order_bn(chi.keys()[k]));
    }
    SnClassFunction xi = zero_class_function_sn(big_n);
    for (const auto &[nu, q] : acc) {
        xi.at(nu) = to_integer(q * Rational(centralizer_order_sn(nu)));
    }
    return xi;
}

// ---- generating function over B_n ----

inline TruncatedSeries lhs_summation_bn(int w, const Context &ctx = {})
{
    require_bn_char_cap(w, ctx);
    auto factors = [](const BiPartition &b) {
        MonomialKey::Factors f;
        for (auto [part, mult] : b.plus.multiplicities()) {
            f.emplace_back(Var{part, Flavor::plus}, mult);
        }
        for (auto [part, mult] : b.minus.multiplicities()) {
            f.emplace_back(Var{part, Flavor::minus}, mult);
        }
        return f;
    };
    TruncatedSeries out = TruncatedSeries::one(Truncation::both(w));
    for (int n = 1; n <= w; ++n) {
        const auto bls = bipartitions(n);
        Context inner = ctx;
        inner.jobs = 1;
        auto chars = parallel_map<BnClassFunction>(bls.size(), ctx.jobs,
                                                   [&](std::size_t i) { return higher_lie_character_bn(bls[i], inner); });
        for (std::size_t i = 0; i < bls.size(); ++i) {
            const auto s_part = factors(bls[i]);
            for (std::size_t k = 0; k < chars[i].size(); ++k) {
                const auto &bnu = chars[i].keys()[k];
                out.add_term(MonomialKey(s_part, factors(bnu)), Rational(chars[i].value(k), centralizer_order_bn(bnu)));
            }
        }
    }
    return out;
}

// K_{eps,theta}(e) = eps*theta*mu(2e) + (1+eps)(1+theta)/2 * mu(e)
inline int k_coefficient(int eps, int theta, int e) { return eps * theta * mobius(2 * e) + (1 + eps) * (1 + theta) / 2 * mobius(e); }

inline TruncatedSeries rhs_summation_bn(int w)
{
    const Truncation tr = Truncation::both(w);
    TruncatedSeries exponent(tr);
    for (int i = 1; i <= w; ++i) {
        for (int j = 1; j <= w; ++j) {
            for (int e : divisors(std::gcd(i, j))) {
                for (int eps : {1, -1}) {
                    for (int theta : {1, -1}) {
                        const MonomialKey key({{Var{i, eps > 0 ? Flavor::plus : Flavor::minus}, j / e}},
                                              {{Var{j, theta > 0 ? Flavor::plus : Flavor::minus}, i / e}});
                        exponent.add_term(key, Rational(k_coefficient(eps, theta, e), 2 * i * j / e));
                    }
                }
            }
        }
    }
    return exp(exponent);
}

inline IdentityReport verify_summation_bn(int w, const Context &ctx = {})
{
    return compare_sides(IdentityId::summation_bn, w, lhs_summation_bn(w, ctx), rhs_summation_bn(w));
}

// eta_{B_n} induced to S_{2n} and S_{2n+1} against the sum of psi^lambda
// over lambda in OP(2n) (resp. OP(2n+1)).
struct InducedComparison {
    SnClassFunction induced;
    SnClassFunction expected;
    bool pass = false;
};

inline InducedComparison verify_induced_to_even(int n, FusionTarget target, const Context &ctx = {})
{
    const int big_n = 2 * n + (target == FusionTarget::odd ? 1 : 0);
    InducedComparison r{induce_to_sn(eta(n, ctx), target), zero_class_function_sn(big_n)};
    for (const auto &lambda : partitions(big_n, PartitionFilter::odd_parts)) {
        r.expected += higher_lie_character(lambda, CharacterMode::plain, ctx);
    }
    r.pass = r.induced == r.expected;
    return r;
}

} // namespace hilex
