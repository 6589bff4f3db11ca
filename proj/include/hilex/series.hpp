#pragma once

// Sparse truncated power series over Q in two families of variables s_i
// and t_j. Type-B identities need the flavored variables s_{i,+}, s_{i,-}
// etc., so every variable carries an optional sign flavor.

#include <hilex/numeric.hpp>

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilex {

enum class Flavor { none, plus, minus };

struct Var {
    int index = 1;
    Flavor flavor = Flavor::none;

    // "3", "3+", "3-"
    std::string str() const
    {
        return std::to_string(index) + (flavor == Flavor::plus ? "+" : flavor == Flavor::minus ? "-" : "");
    }

    friend auto operator<=>(const Var &, const Var &) = default;
};

inline Var parse_var(const std::string &text)
{
    Var v;
    std::string digits = text;
    if (!digits.empty() && (digits.back() == '+' || digits.back() == '-')) {
        v.flavor = digits.back() == '+' ? Flavor::plus : Flavor::minus;
        digits.pop_back();
    }
    std::size_t used = 0;
    v.index = std::stoi(digits, &used);
    if (used != digits.size() || v.index < 1) {
        throw std::invalid_argument("bad variable name: " + text);
    }
    return v;
}

// A monomial s^a t^b; each family is a sorted list of (variable, exponent)
// with positive exponents.
class MonomialKey {
public:
    using Factors = std::vector<std::pair<Var, int>>;

    MonomialKey() = default;
    MonomialKey(Factors s, Factors t) : s_(normalize(std::move(s))), t_(normalize(std::move(t))) {}

    static MonomialKey s_power(Var v, int e = 1) { return MonomialKey({{v, e}}, {}); }
    static MonomialKey t_power(Var v, int e = 1) { return MonomialKey({}, {{v, e}}); }

    const Factors &s() const noexcept { return s_; }
    const Factors &t() const noexcept { return t_; }
    bool empty() const noexcept { return s_.empty() && t_.empty(); }

    int s_weight() const { return weight(s_); }
    int t_weight() const { return weight(t_); }

    friend MonomialKey operator*(const MonomialKey &a, const MonomialKey &b)
    {
        MonomialKey r;
        r.s_ = merge(a.s_, b.s_);
        r.t_ = merge(a.t_, b.t_);
        return r;
    }

    // "s1^2*t2", "1" for the empty monomial
    std::string str() const
    {
        std::string out;
        auto emit = [&](char family, const Factors &f) {
            for (const auto &[v, e] : f) {
                if (!out.empty()) {
                    out += '*';
                }
                out += family + v.str();
                if (e != 1) {
                    out += '^' + std::to_string(e);
                }
            }
        };
        emit('s', s_);
        emit('t', t_);
        return out.empty() ? "1" : out;
    }

    friend auto operator<=>(const MonomialKey &, const MonomialKey &) = default;

private:
    Factors s_, t_;

    static int weight(const Factors &f)
    {
        int w = 0;
        for (const auto &[v, e] : f) {
            w += v.index * e;
        }
        return w;
    }

    static Factors normalize(Factors f)
    {
        std::sort(f.begin(), f.end());
        Factors out;
        for (const auto &[v, e] : f) {
            if (e < 0) {
                throw std::invalid_argument("negative exponent in monomial");
            }
            if (e == 0) {
                continue;
            }
            if (!out.empty() && out.back().first == v) {
                out.back().second += e;
            } else {
                out.emplace_back(v, e);
            }
        }
        return out;
    }

    static Factors merge(const Factors &a, const Factors &b)
    {
        Factors out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.push_back(b[j++]);
            } else {
                out.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        return out;
    }
};

struct Truncation {
    int ws = 0;
    int wt = 0;

    static Truncation both(int w) { return {w, w}; }
    bool admits(const MonomialKey &k) const { return k.s_weight() <= ws && k.t_weight() <= wt; }

    friend bool operator==(const Truncation &, const Truncation &) = default;
};

class TruncatedSeries {
public:
    using Terms = std::map<MonomialKey, Rational>;

    TruncatedSeries() = default;
    explicit TruncatedSeries(Truncation tr) : tr_(tr) {}

    static TruncatedSeries constant(Truncation tr, const Rational &c)
    {
        TruncatedSeries r(tr);
        r.add_term(MonomialKey{}, c);
        return r;
    }
    static TruncatedSeries one(Truncation tr) { return constant(tr, 1); }
    static TruncatedSeries monomial(Truncation tr, const MonomialKey &k, const Rational &c = 1)
    {
        TruncatedSeries r(tr);
        r.add_term(k, c);
        return r;
    }

    const Truncation &truncation() const noexcept { return tr_; }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    // Adds c at k; terms outside the truncation are dropped.
    void add_term(const MonomialKey &k, const Rational &c)
    {
        if (c == 0 || !tr_.admits(k)) {
            return;
        }
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    Rational coefficient(const MonomialKey &k) const
    {
        if (!tr_.admits(k)) {
            throw std::out_of_range("monomial " + k.str() + " lies outside the truncation");
        }
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(MonomialKey{}); }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        same_truncation(o);
        for (const auto &[k, c] : o.terms_) {
            add_term(k, c);
        }
        return *this;
    }
    TruncatedSeries &operator-=(const TruncatedSeries &o) { return *this += Rational(-1) * o; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }

    friend TruncatedSeries operator*(const Rational &q, const TruncatedSeries &a)
    {
        TruncatedSeries r(a.tr_);
        if (q != 0) {
            for (const auto &[k, c] : a.terms_) {
                r.terms_.emplace(k, q * c);
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        a.same_truncation(b);
        TruncatedSeries r(a.tr_);
        for (const auto &[ka, ca] : a.terms_) {
            for (const auto &[kb, cb] : b.terms_) {
                if (ka.s_weight() + kb.s_weight() > a.tr_.ws || ka.t_weight() + kb.t_weight() > a.tr_.wt) {
                    continue;
                }
                r.add_term(ka * kb, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.tr_ == b.tr_ && a.terms_ == b.terms_;
    }

    std::string str() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[k, c] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + to_string(c) + ")" + (k.empty() ? "" : "*" + k.str());
        }
        return out;
    }

private:
    Truncation tr_;
    Terms terms_;

    void same_truncation(const TruncatedSeries &o) const
    {
        if (!(o.tr_ == tr_)) {
            throw std::invalid_argument("series have different truncations");
        }
    }
};

inline TruncatedSeries multiply(const TruncatedSeries &a, const TruncatedSeries &b) { return a * b; }

inline Rational coefficient(const TruncatedSeries &a, const MonomialKey &k) { return a.coefficient(k); }

namespace detail {

// Terms grouped by total degree s_weight + t_weight.
inline std::vector<std::vector<std::pair<MonomialKey, Rational>>> layers(const TruncatedSeries &a)
{
    std::vector<std::vector<std::pair<MonomialKey, Rational>>> out(
        static_cast<std::size_t>(a.truncation().ws + a.truncation().wt + 1));
    for (const auto &[k, c] : a.terms()) {
        out[static_cast<std::size_t>(k.s_weight() + k.t_weight())].emplace_back(k, c);
    }
    return out;
}

inline void accumulate_product(TruncatedSeries &into, const std::vector<std::pair<MonomialKey, Rational>> &a,
                               const std::vector<std::pair<MonomialKey, Rational>> &b, const Rational &scale)
{
    const Truncation &tr = into.truncation();
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            if (ka.s_weight() + kb.s_weight() <= tr.ws && ka.t_weight() + kb.t_weight() <= tr.wt) {
                into.add_term(ka * kb, scale * ca * cb);
            }
        }
    }
}

} // namespace detail

// exp(a) layer by layer: with f = exp(a) split by total degree,
// m f_m = sum_{k=1..m} k a_k f_{m-k}.
inline TruncatedSeries exp(const TruncatedSeries &a)
{
    if (a.constant_term() != 0) {
        throw std::domain_error("exp needs a series with zero constant term");
    }
    const Truncation tr = a.truncation();
    const auto al = detail::layers(a);
    const std::size_t top = al.size() - 1;
    std::vector<std::vector<std::pair<MonomialKey, Rational>>> fl(top + 1);
    fl[0].emplace_back(MonomialKey{}, Rational(1));
    TruncatedSeries out = TruncatedSeries::one(tr);
    for (std::size_t m = 1; m <= top; ++m) {
        TruncatedSeries layer(tr);
        for (std::size_t k = 1; k <= m; ++k) {
            if (!al[k].empty() && !fl[m - k].empty()) {
                detail::accumulate_product(layer, al[k], fl[m - k], Rational(static_cast<long long>(k), static_cast<long long>(m)));
            }
        }
        for (const auto &[key, c] : layer.terms()) {
            fl[m].emplace_back(key, c);
            out.add_term(key, c);
        }
    }
    return out;
}

// Inverse of exp on series with constant term 1:
// g_m = f_m - (1/m) sum_{k=1..m-1} k g_k f_{m-k}.
inline TruncatedSeries log(const TruncatedSeries &f)
{
    if (f.constant_term() != 1) {
        throw std::domain_error("log needs a series with constant term 1");
    }
    const Truncation tr = f.truncation();
    const auto fl = detail::layers(f);
    const std::size_t top = fl.size() - 1;
    std::vector<std::vector<std::pair<MonomialKey, Rational>>> gl(top + 1);
    TruncatedSeries out(tr);
    for (std::size_t m = 1; m <= top; ++m) {
        TruncatedSeries layer(tr);
        for (const auto &[key, c] : fl[m]) {
            layer.add_term(key, c);
        }
        for (std::size_t k = 1; k < m; ++k) {
            if (!gl[k].empty() && !fl[m - k].empty()) {
                detail::accumulate_product(layer, gl[k], fl[m - k],
                                           Rational(-static_cast<long long>(k), static_cast<long long>(m)));
            }
        }
        for (const auto &[key, c] : layer.terms()) {
            gl[m].emplace_back(key, c);
            out.add_term(key, c);
        }
    }
    return out;
}

// ((1 + t_j) / (1 - t_j))^r = exp(r * (log(1 + t_j) - log(1 - t_j)))
//                            = exp(2r * sum_{d odd} t_j^d / d).
inline TruncatedSeries binomial_power(Var t_var, const Rational &r, Truncation tr)
{
    TruncatedSeries exponent(tr);
    for (int d = 1; d * t_var.index <= tr.wt; d += 2) {
        exponent.add_term(MonomialKey::t_power(t_var, d), 2 * r / d);
    }
    return exp(exponent);
}

// Replaces every s variable by a scalar (value(v) == nullopt means 0) and
// returns a series in the t variables alone, with s-truncation 0.
inline TruncatedSeries substitute_s(const TruncatedSeries &a, const std::function<std::optional<Rational>(Var)> &value)
{
    TruncatedSeries out(Truncation{0, a.truncation().wt});
    for (const auto &[k, c] : a.terms()) {
        Rational scale = c;
        for (const auto &[v, e] : k.s()) {
            const auto x = value(v);
            if (!x || *x == 0) {
                scale = 0;
                break;
            }
            for (int i = 0; i < e; ++i) {
                scale *= *x;
            }
        }
        out.add_term(MonomialKey({}, k.t()), scale);
    }
    return out;
}

// Keeps the terms whose key satisfies keep.
template <typename Pred>
TruncatedSeries filter_terms(const TruncatedSeries &a, Pred keep)
{
    TruncatedSeries out(a.truncation());
    for (const auto &[k, c] : a.terms()) {
        if (keep(k)) {
            out.add_term(k, c);
        }
    }
    return out;
}

} // namespace hilex
