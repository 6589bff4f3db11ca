#pragma once

// Both sides of the generating-function identities for higher Lie
// characters, and coefficientwise comparison.
//
// General identity (plain, and signed with sign(nu) on the left):
//   sum_{n, lambda, nu |- n} [sign(nu)] psi^lambda(nu) s^{c(lambda)} t^{c(nu)} / |Z_nu|
//     = exp( sum_{i,j} sum_{e | gcd(i,j)} c(i,j,e) s_i^{j/e} t_j^{i/e} / (ij/e) )
// with c = mu(e), or (-1)^{i(j-1)/e} mu(e) when signed.
//
// Odd / even cycles:
//   sum_n sum_{lambda in OP(n)} sum_nu psi^lambda(nu) t^{c(nu)} / |Z_nu|
//     = sum_n sum_{lambda in EP(n)} sum_nu sign(nu) psi^lambda(nu) t^{c(nu)} / |Z_nu|
//     = prod_{p >= 0} ((1 + t_{2^p}) / (1 - t_{2^p}))^{1 / 2^{p+1}}

#include <hilex/context.hpp>
#include <hilex/higher_lie.hpp>
#include <hilex/parallel.hpp>
#include <hilex/partition.hpp>
#include <hilex/series.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace hilex {

enum class IdentityId { summation, summation_signed, odd_cycles, even_cycles, summation_bn };

inline const char *to_string(IdentityId id)
{
    switch (id) {
    case IdentityId::summation: return "summation";
    case IdentityId::summation_signed: return "summation-signed";
    case IdentityId::odd_cycles: return "odd-cycles";
    case IdentityId::even_cycles: return "even-cycles";
    case IdentityId::summation_bn: return "summation-b";
    }
    return "?";
}

inline std::optional<IdentityId> parse_identity(const std::string &s)
{
    for (auto id : {IdentityId::summation, IdentityId::summation_signed, IdentityId::odd_cycles, IdentityId::even_cycles,
                    IdentityId::summation_bn}) {
        if (s == to_string(id)) {
            return id;
        }
    }
    return std::nullopt;
}

struct Discrepancy {
    MonomialKey key;
    Rational lhs;
    Rational rhs;
    std::string where = "lhs-vs-rhs"; // or "substitution" for the OP/EP cross-check
};

struct IdentityReport {
    IdentityId id{};
    int weight = 0;
    bool pass = true;
    std::optional<Discrepancy> first_discrepancy;
    std::size_t terms_compared = 0;
    // "proved" or "computationally verified"
    std::string basis = "proved";
    // weight up to which the OP/EP left side was also rebuilt from the
    // general series by substitution; -1 when not applicable
    int substitution_weight = -1;
};

// First key, in canonical order, where a and b differ.
inline std::optional<Discrepancy> first_difference(const TruncatedSeries &a, const TruncatedSeries &b)
{
    auto ia = a.terms().begin(), ib = b.terms().begin();
    const auto ea = a.terms().end(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            return Discrepancy{ia->first, ia->second, 0};
        }
        if (ia == ea || ib->first < ia->first) {
            return Discrepancy{ib->first, 0, ib->second};
        }
        if (ia->second != ib->second) {
            return Discrepancy{ia->first, ia->second, ib->second};
        }
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

inline IdentityReport compare_sides(IdentityId id, int weight, const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    IdentityReport r;
    r.id = id;
    r.weight = weight;
    r.first_discrepancy = first_difference(lhs, rhs);
    r.pass = !r.first_discrepancy.has_value();
    std::set<MonomialKey> keys;
    for (const auto &[k, c] : lhs.terms()) {
        keys.insert(k);
    }
    for (const auto &[k, c] : rhs.terms()) {
        keys.insert(k);
    }
    r.terms_compared = keys.size();
    return r;
}

namespace detail {

inline MonomialKey::Factors cycle_factors(const Partition &p)
{
    MonomialKey::Factors f;
    for (const auto &[part, mult] : p.multiplicities()) {
        f.emplace_back(Var{part}, mult);
    }
    return f;
}

// sum over the given lambdas of [sign(nu)] psi^lambda(nu) / |Z_nu| at
// s^{c(lambda)} t^{c(nu)} (with_s) or t^{c(nu)} alone.
inline void add_character_terms(TruncatedSeries &out, const std::vector<Partition> &lambdas, bool with_sign, bool with_s,
                                const Context &ctx)
{
    // characters in parallel, terms added in canonical order
    Context inner = ctx;
    inner.jobs = 1;
    auto chars = parallel_map<SnClassFunction>(lambdas.size(), ctx.jobs, [&](std::size_t i) {
        return higher_lie_character(lambdas[i], CharacterMode::plain, inner);
    });
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const auto s_part = with_s ? cycle_factors(lambdas[i]) : MonomialKey::Factors{};
        const auto &chi = chars[i];
        for (std::size_t k = 0; k < chi.size(); ++k) {
            const Partition &nu = chi.keys()[k];
            BigInt v = chi.value(k);
            if (with_sign) {
                v *= nu.sign();
            }
            out.add_term(MonomialKey(s_part, cycle_factors(nu)), Rational(v, centralizer_order_sn(nu)));
        }
    }
}

} // namespace detail

inline TruncatedSeries lhs_summation(int w, bool with_sign, const Context &ctx = {})
{
    require_cap("character weight", w, ctx.limits.max_char_weight);
    TruncatedSeries out = TruncatedSeries::one(Truncation::both(w));
    for (int n = 1; n <= w; ++n) {
        detail::add_character_terms(out, partitions(n), with_sign, true, ctx);
    }
    return out;
}

inline TruncatedSeries rhs_summation(int w, bool with_sign)
{
    const Truncation tr = Truncation::both(w);
    TruncatedSeries exponent(tr);
    for (int i = 1; i <= w; ++i) {
        for (int j = 1; j <= w; ++j) {
            for (int e : divisors(std::gcd(i, j))) {
                int c = mobius(e);
                if (with_sign) {
                    c *= sign_power(static_cast<long long>(i) * (j - 1) / e);
                }
                exponent.add_term(MonomialKey({{Var{i}, j / e}}, {{Var{j}, i / e}}), Rational(c, i * j / e));
            }
        }
    }
    return exp(exponent);
}

// Left side restricted to OP(n) (plain) or EP(n) (with sign(nu)), t only.
inline TruncatedSeries lhs_op_ep(int w, bool even, const Context &ctx = {})
{
    TruncatedSeries out = TruncatedSeries::one(Truncation{0, w});
    for (int n = 1; n <= w; ++n) {
        detail::add_character_terms(out, partitions(n, even ? PartitionFilter::even_parts : PartitionFilter::odd_parts), even,
                                    false, ctx);
    }
    return out;
}

// The same left side read off the general series: keep the s-monomials
// that encode OP (resp. EP) partitions and set those s_i to 1.
inline TruncatedSeries lhs_op_ep_by_substitution(const TruncatedSeries &general, bool even)
{
    auto keep = [even](const MonomialKey &k) {
        std::vector<int> parts;
        for (const auto &[v, e] : k.s()) {
            parts.insert(parts.end(), static_cast<std::size_t>(e), v.index);
        }
        const Partition lambda(parts);
        return even ? in_ep(lambda) : in_op(lambda);
    };
    return substitute_s(filter_terms(general, keep), [](Var) -> std::optional<Rational> { return Rational(1); });
}

inline TruncatedSeries rhs_op_product(int w)
{
    const Truncation tr{0, w};
    TruncatedSeries out = TruncatedSeries::one(tr);
    Rational exponent(1, 2);
    for (int q = 1; q <= w; q *= 2, exponent /= 2) {
        out = out * binomial_power(Var{q}, exponent, tr);
    }
    return out;
}

inline IdentityReport verify_identity(IdentityId id, int w, const Context &ctx = {})
{
    switch (id) {
    case IdentityId::summation:
    case IdentityId::summation_signed: {
        const bool with_sign = id == IdentityId::summation_signed;
        IdentityReport r = compare_sides(id, w, lhs_summation(w, with_sign, ctx), rhs_summation(w, with_sign));
        if (with_sign) {
            r.basis = "computationally verified";
        }
        return r;
    }
    case IdentityId::odd_cycles:
    case IdentityId::even_cycles: {
        const bool even = id == IdentityId::even_cycles;
        const TruncatedSeries direct = lhs_op_ep(w, even, ctx);
        IdentityReport r = compare_sides(id, w, direct, rhs_op_product(w));
        const int ws = std::min(w, ctx.limits.max_char_weight);
        if (ws >= 0) {
            const TruncatedSeries via = lhs_op_ep_by_substitution(lhs_summation(ws, even, ctx), even);
            const TruncatedSeries cut = filter_terms(direct, [ws](const MonomialKey &k) { return k.t_weight() <= ws; });
            r.substitution_weight = ws;
            if (r.pass) {
                if (auto d = first_difference(cut, via)) {
                    d->where = "substitution";
                    r.first_discrepancy = d;
                    r.pass = false;
                }
            }
        }
        return r;
    }
    case IdentityId::summation_bn:
        break;
    }
    throw std::invalid_argument(std::string("verify_identity does not handle ") + to_string(id));
}

// n! [t_1^n] of the odd-cycle product after setting t_{2^p} = 0, p >= 1.
inline BigInt odd_dimension_from_product(int n)
{
    const TruncatedSeries prod = rhs_op_product(n);
    const TruncatedSeries t1_only = filter_terms(prod, [](const MonomialKey &k) {
        return std::all_of(k.t().begin(), k.t().end(), [](const auto &f) { return f.first.index == 1; });
    });
    const Rational c = t1_only.coefficient(MonomialKey::t_power(Var{1}, n)) * Rational(factorial(n));
    return to_integer(c);
}

} // namespace hilex
