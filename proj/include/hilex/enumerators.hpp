#pragma once

// Root enumerators rho_k, their signed versions, and the class-function
// identities checked against them.

#include <hilex/class_function.hpp>
#include <hilex/context.hpp>
#include <hilex/cyclotomic.hpp>
#include <hilex/gf_identities.hpp>
#include <hilex/higher_lie.hpp>
#include <hilex/parallel.hpp>
#include <hilex/partition.hpp>
#include <hilex/permutation.hpp>
#include <hilex/series.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hilex {

// k-th roots (k >= 1), or odd roots when `odd` is set.
struct RootSpec {
    int k = 1;
    bool odd = false;
    bool with_sign = false;

    static RootSpec power(int k, bool with_sign = false)
    {
        if (k < 1) {
            throw std::domain_error("root order must be positive");
        }
        return {k, false, with_sign};
    }
    static RootSpec odd_roots(bool with_sign = false) { return {1, true, with_sign}; }
};

// lcm of the odd numbers up to n; x^k = g has a solution with this k
// exactly when it has one for some odd k.
inline long long odd_root_exponent(int n)
{
    long long k = 1;
    for (int m = 1; m <= n; m += 2) {
        k = std::lcm(k, static_cast<long long>(m));
    }
    return k;
}

// rho(g) = sum over x in S_n with x^k = g of 1 (or sign(x)).
inline SnClassFunction root_enumerator(int n, RootSpec spec, const Context &ctx = {})
{
    require_perm_cap(n, ctx);
    const long long k = spec.odd ? odd_root_exponent(n) : spec.k;
    SnClassFunction sums = zero_class_function_sn(n);
    if (n == 0) {
        sums.value(0) = 1;
        return sums;
    }
    auto parts = parallel_map<std::vector<long long>>(static_cast<std::size_t>(n), ctx.jobs, [&](std::size_t idx) {
        std::vector<long long> acc(sums.size(), 0);
        for_each_permutation(
            n,
            [&](const Permutation &x) {
                acc[sums.index_of(x.power(k).cycle_type())] += spec.with_sign ? x.sign() : 1;
            },
            static_cast<int>(idx) + 1);
        return acc;
    });
    for (const auto &acc : parts) {
        for (std::size_t i = 0; i < acc.size(); ++i) {
            sums.value(i) += acc[i];
        }
    }
    // each class was hit once per element of the class
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const BigInt size = class_size_sn(sums.keys()[i]);
        if (sums.value(i) % size != 0) {
            throw consistency_error("root count is not constant on class " + sums.keys()[i].str());
        }
        sums.value(i) /= size;
    }
    return sums;
}

// lambda |-_k n: every part divides k
inline std::vector<Partition> partitions_dividing(int n, long long k)
{
    std::vector<Partition> out;
    for (auto &p : partitions(n)) {
        if (p.divides(k)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

struct ClassComparison {
    SnClassFunction left;
    SnClassFunction right;
    bool pass = false;
};

inline ClassComparison compare_class_functions(SnClassFunction left, SnClassFunction right)
{
    const bool same = left == right;
    return {std::move(left), std::move(right), same};
}

struct ScharfReport {
    int n = 0;
    long long k = 1;
    ClassComparison plain;  // rho_k vs sum psi^lambda
    ClassComparison signed_; // signed rho_k vs sum sign(lambda) tau^lambda
    bool pass = false;
};

inline ScharfReport verify_scharf(int n, long long k, const Context &ctx = {})
{
    SnClassFunction psi_sum = zero_class_function_sn(n), tau_sum = zero_class_function_sn(n);
    for (const auto &lambda : n > 0 ? partitions_dividing(n, k) : std::vector<Partition>{}) {
        psi_sum += higher_lie_character(lambda, CharacterMode::plain, ctx);
        tau_sum += BigInt(lambda.sign()) * higher_lie_character(lambda, CharacterMode::twisted, ctx);
    }
    if (n == 0) {
        psi_sum.value(0) = tau_sum.value(0) = 1;
    }
    ScharfReport r;
    r.n = n;
    r.k = k;
    r.plain = compare_class_functions(root_enumerator(n, RootSpec::power(static_cast<int>(k)), ctx), psi_sum);
    r.signed_ = compare_class_functions(root_enumerator(n, RootSpec::power(static_cast<int>(k), true), ctx), tau_sum);
    r.pass = r.plain.pass && r.signed_.pass;
    return r;
}

struct EquidReport {
    int n = 0;
    DescentHistogram oc_plain;
    DescentHistogram ec_complement;
    std::uint64_t oc_total = 0;
    std::uint64_t ec_total = 0;
    bool pass = false;
};

// Des over OC(n) against the complemented Des over EC(n).
inline EquidReport verify_equid(int n, const Context &ctx = {})
{
    EquidReport r;
    r.n = n;
    r.oc_plain = descent_distribution_where(n, [](const Partition &p) { return in_op(p); }, false, ctx);
    r.ec_complement = descent_distribution_where(n, [](const Partition &p) { return in_ep(p); }, true, ctx);
    for (const auto &[d, c] : r.oc_plain) {
        r.oc_total += c;
    }
    for (const auto &[d, c] : r.ec_complement) {
        r.ec_total += c;
    }
    r.pass = r.oc_plain == r.ec_complement;
    return r;
}

struct OpEpReport {
    int n = 0;
    ClassComparison op_vs_sign_ep;   // sum_OP psi vs sign (x) sum_EP psi
    ClassComparison twisted_op_vs_ep; // sum_OP tau vs sum_EP psi
    bool pass = false;
};

inline OpEpReport verify_op_ep(int n, const Context &ctx = {})
{
    SnClassFunction op_psi = zero_class_function_sn(n), op_tau = op_psi, ep_psi = op_psi;
    for (const auto &lambda : partitions(n, PartitionFilter::odd_parts)) {
        op_psi += higher_lie_character(lambda, CharacterMode::plain, ctx);
        op_tau += higher_lie_character(lambda, CharacterMode::twisted, ctx);
    }
    for (const auto &lambda : partitions(n, PartitionFilter::even_parts)) {
        ep_psi += higher_lie_character(lambda, CharacterMode::plain, ctx);
    }
    OpEpReport r;
    r.n = n;
    r.op_vs_sign_ep = compare_class_functions(op_psi, tensor_sign(ep_psi));
    r.twisted_op_vs_ep = compare_class_functions(op_tau, ep_psi);
    r.pass = r.op_vs_sign_ep.pass && r.twisted_op_vs_ep.pass;
    return r;
}

// chi on S_m induced to S_{m+1}: classes fuse by appending a fixed point.
inline SnClassFunction induce_by_fixed_point(const SnClassFunction &chi)
{
    SnClassFunction xi = zero_class_function_sn(chi.n() + 1);
    std::map<Partition, Rational> acc;
    for (std::size_t k = 0; k < chi.size(); ++k) {
        acc[chi.keys()[k].with_part(1)] += Rational(chi.value(k), centralizer_order_sn(chi.keys()[k]));
    }
    for (const auto &[nu, q] : acc) {
        xi.at(nu) = to_integer(q * Rational(centralizer_order_sn(nu)));
    }
    return xi;
}

struct InducedOddReport {
    int n = 0;
    ClassComparison induced; // rho_odd on S_{2n+1} vs rho_odd on S_{2n} induced
    // rho_odd on S_{2n} is not induced from S_{2n-1}: the dimensions differ
    BigInt dim_even = 0;
    BigInt dim_from_below = 0; // 2n * dim rho_odd on S_{2n-1}
    bool not_induced_from_below = false;
    bool pass = false;
};

inline InducedOddReport verify_induced_to_odd(int n, const Context &ctx = {})
{
    if (n < 1) {
        throw std::domain_error("verify_induced_to_odd needs n >= 1");
    }
    require_perm_cap(2 * n + 1, ctx);
    InducedOddReport r;
    r.n = n;
    const SnClassFunction even = root_enumerator(2 * n, RootSpec::odd_roots(), ctx);
    r.induced = compare_class_functions(root_enumerator(2 * n + 1, RootSpec::odd_roots(), ctx), induce_by_fixed_point(even));
    r.dim_even = dimension(even);
    r.dim_from_below = BigInt(2 * n) * dimension(root_enumerator(2 * n - 1, RootSpec::odd_roots(), ctx));
    r.not_induced_from_below = r.dim_even != r.dim_from_below;
    // for n = 1, rho_odd on S_2 is induced from S_1 (both sides equal 1)
    r.pass = r.induced.pass && (n == 1 || r.not_induced_from_below);
    return r;
}

// ---- cited generating functions for rho_k and its signed version ----

// exp( sum_j sum_{h | k, gcd(h, j) = 1} [(-1)^{1 + jk/h}] t_j^{k/h} / (jk/h) )
inline TruncatedSeries root_generating_function(int k, bool with_sign, int w)
{
    const Truncation tr{0, w};
    TruncatedSeries exponent(tr);
    for (int j = 1; j <= w; ++j) {
        for (int h : divisors(k)) {
            if (std::gcd(h, j) != 1) {
                continue;
            }
            const int denom = j * k / h;
            const int sign = with_sign ? sign_power(1 + denom) : 1;
            exponent.add_term(MonomialKey::t_power(Var{j}, k / h), Rational(sign, denom));
        }
    }
    return exp(exponent);
}

// sum_{n <= w} sum_nu rho(nu) t^{c(nu)} / |Z_nu| by brute force
inline TruncatedSeries root_series_brute(int k, bool with_sign, int w, const Context &ctx = {})
{
    TruncatedSeries out = TruncatedSeries::one(Truncation{0, w});
    for (int n = 1; n <= w; ++n) {
        const auto rho = root_enumerator(n, RootSpec::power(k, with_sign), ctx);
        for (std::size_t i = 0; i < rho.size(); ++i) {
            out.add_term(MonomialKey({}, detail::cycle_factors(rho.keys()[i])), Rational(rho.value(i), centralizer_order_sn(rho.keys()[i])));
        }
    }
    return out;
}

struct CitedGfReport {
    int weight = 0;
    struct Entry {
        int k = 0;
        bool with_sign = false;
        std::optional<Discrepancy> first_discrepancy;
    };
    std::vector<Entry> entries;
    bool pass = false;
};

inline CitedGfReport verify_cited_gf_remarks(int w, const Context &ctx = {}, std::vector<int> ks = {2, 3, 4})
{
    require_perm_cap(w, ctx);
    CitedGfReport r;
    r.weight = w;
    r.pass = true;
    for (int k : ks) {
        for (bool with_sign : {false, true}) {
            auto d = first_difference(root_series_brute(k, with_sign, w, ctx), root_generating_function(k, with_sign, w));
            r.pass = r.pass && !d;
            r.entries.push_back({k, with_sign, std::move(d)});
        }
    }
    return r;
}

// ---- dimensions of the odd-part sum ----

struct DoubleRow {
    int n = 0;
    BigInt from_characters = 0;  // sum over OP(n) of psi^lambda(identity)
    BigInt from_class_sizes = 0; // sum over OP(n) of |class of lambda|
    BigInt from_product = 0;     // n! [t_1^n] of the odd-cycle product
    BigInt formula = 0;          // (n-1)!!^2 or n!! (n-2)!!
    bool pass = false;
};

inline BigInt odd_dimension_formula(int n)
{
    return n % 2 == 0 ? double_factorial(n - 1) * double_factorial(n - 1) : double_factorial(n) * double_factorial(n - 2);
}

inline std::vector<DoubleRow> verify_double(int max_n, const Context &ctx = {})
{
    std::vector<DoubleRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        DoubleRow row;
        row.n = n;
        for (const auto &lambda : partitions(n, PartitionFilter::odd_parts)) {
            row.from_characters += dimension(higher_lie_character(lambda, CharacterMode::plain, ctx));
            row.from_class_sizes += class_size_sn(lambda);
        }
        row.from_product = odd_dimension_from_product(n);
        row.formula = odd_dimension_formula(n);
        row.pass = row.from_characters == row.from_class_sizes && row.from_class_sizes == row.from_product &&
                   row.from_product == row.formula;
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- cyclotomic and wreath-cycle identities ----

struct KernelReport {
    int mobius_max = 0;
    bool mobius_pass = true;
    bool cycle_structure_pass = true;
    bool collapse_pass = true;
    std::vector<std::string> failures;
    bool pass() const { return mobius_pass && cycle_structure_pass && collapse_pass; }
};

inline KernelReport verify_kernel(int mobius_max = 24, int max_i = 6, int max_ell_structure = 4, int max_ell_collapse = 3)
{
    KernelReport r;
    r.mobius_max = mobius_max;
    for (int n = 1; n <= mobius_max; ++n) {
        const CycloInt s = mobius_root_of_unity_sum(n);
        if (!s.is_rational_integer() || s.integer_value() != mobius(n)) {
            r.mobius_pass = false;
            r.failures.push_back("mobius n=" + std::to_string(n));
        }
    }
    for (int i = 1; i <= max_i; ++i) {
        for (int k = 0; k < i; ++k) {
            for (int ell = 1; ell <= max_ell_structure; ++ell) {
                const int g = std::gcd(k, i);
                if (!(verify_single_cycle_structure(i, k, ell) == CycleStructure{g, ell * i / g})) {
                    r.cycle_structure_pass = false;
                    r.failures.push_back("structure i=" + std::to_string(i) + " k=" + std::to_string(k) + " l=" + std::to_string(ell));
                }
            }
        }
        for (int e : divisors(i)) {
            for (int ell = 1; ell <= max_ell_collapse; ++ell) {
                const long long j = static_cast<long long>(ell) * e;
                const bool plain_ok = single_cycle_collapse(i, e, ell, false) == Rational(mobius(e));
                const bool signed_ok = single_cycle_collapse(i, e, ell, true) == Rational(sign_power(i * (j - 1) / e) * mobius(e));
                if (!plain_ok || !signed_ok) {
                    r.collapse_pass = false;
                    r.failures.push_back("collapse i=" + std::to_string(i) + " e=" + std::to_string(e) + " l=" + std::to_string(ell));
                }
            }
        }
    }
    return r;
}

} // namespace hilex
