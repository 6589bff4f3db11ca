#include <catch2/catch_amalgamated.hpp>

#include <hilex/series.hpp>

#include <random>

using namespace hilex;

namespace {

const Var v1{1};

MonomialKey t1(int e) { return MonomialKey::t_power(v1, e); }

TruncatedSeries t_poly(int w, std::initializer_list<Rational> coeffs)
{
    TruncatedSeries r(Truncation{0, w});
    int e = 0;
    for (const auto &c : coeffs) {
        r.add_term(t1(e++), c);
    }
    return r;
}

// random series in s_1, s_2, t_1, t_2, t_3 with zero constant term
TruncatedSeries random_series(std::mt19937 &rng, Truncation tr, int terms)
{
    std::uniform_int_distribution<int> exp(0, 2), num(-5, 5), den(1, 4);
    TruncatedSeries r(tr);
    for (int i = 0; i < terms; ++i) {
        MonomialKey k({{Var{1}, exp(rng)}, {Var{2}, exp(rng)}}, {{Var{1}, exp(rng)}, {Var{2}, exp(rng)}, {Var{3}, exp(rng)}});
        if (!k.empty()) {
            r.add_term(k, Rational(num(rng), den(rng)));
        }
    }
    return r;
}

} // namespace

TEST_CASE("products")
{
    auto a = t_poly(4, {1, 1});
    auto b = t_poly(4, {1, -1});
    CHECK(a * b == t_poly(4, {1, 0, -1}));
    CHECK(a * TruncatedSeries::one(a.truncation()) == a);

    auto geo = t_poly(3, {1, 1, 1, 1});
    CHECK(geo * geo == t_poly(3, {1, 2, 3, 4}));
    CHECK_THROWS(geo * a);
}

TEST_CASE("exp")
{
    const Truncation tr{0, 4};
    CHECK(exp(TruncatedSeries(tr)) == TruncatedSeries::one(tr));
    CHECK(exp(t_poly(3, {0, 1})) == t_poly(3, {1, 1, Rational(1, 2), Rational(1, 6)}));
    CHECK(exp(t_poly(4, {0, 1, 0, Rational(1, 3)})) ==
          t_poly(4, {1, 1, Rational(1, 2), Rational(1, 2), Rational(3, 8)}));
    CHECK_THROWS_AS(exp(t_poly(4, {1, 1})), std::domain_error);
}

TEST_CASE("binomial powers")
{
    CHECK(binomial_power(v1, Rational(1, 2), Truncation{0, 4}) ==
          t_poly(4, {1, 1, Rational(1, 2), Rational(1, 2), Rational(3, 8)}));
    CHECK(binomial_power(v1, 0, Truncation{0, 5}) == TruncatedSeries::one(Truncation{0, 5}));
    CHECK(binomial_power(v1, 1, Truncation{0, 2}) == t_poly(2, {1, 2, 2}));
    // (1+x)^2/(1-x)^2 against a direct product
    const auto num = t_poly(6, {1, 2, 1});
    const auto inv = t_poly(6, {1, 2, 3, 4, 5, 6, 7});
    CHECK(binomial_power(v1, 2, Truncation{0, 6}) == num * inv);
    // variable t_2 only touches even t-weight
    const auto b2 = binomial_power(Var{2}, Rational(1, 4), Truncation{0, 6});
    CHECK(b2.coefficient(MonomialKey::t_power(Var{2}, 1)) == Rational(1, 2));
    CHECK(b2.size() == 4);
}

TEST_CASE("coefficient lookup")
{
    const auto e = exp(t_poly(3, {0, 1}));
    CHECK(coefficient(e, t1(2)) == Rational(1, 2));
    const auto one = TruncatedSeries::one(Truncation{2, 2});
    CHECK(coefficient(one, MonomialKey::s_power(v1)) == 0);
    CHECK(coefficient(one, MonomialKey{}) == 1);
    CHECK_THROWS_AS(coefficient(one, t1(3)), std::out_of_range);
}

TEST_CASE("truncated product over powers of two")
{
    const Truncation tr{0, 8};
    auto prod = TruncatedSeries::one(tr);
    for (int p = 0, q = 1; q <= 8; ++p, q *= 2) {
        prod = prod * binomial_power(Var{q}, Rational(1, 2 << p), tr);
    }
    CHECK(prod.coefficient(t1(4)) == Rational(3, 8));
}

TEST_CASE("monomial keys")
{
    MonomialKey k({{Var{2}, 1}, {Var{1}, 2}, {Var{2}, 1}}, {{Var{3, Flavor::minus}, 1}});
    CHECK(k.s() == MonomialKey::Factors{{Var{1}, 2}, {Var{2}, 2}});
    CHECK(k.s_weight() == 6);
    CHECK(k.t_weight() == 3);
    CHECK(k.str() == "s1^2*s2^2*t3-");
    CHECK(parse_var("3-") == Var{3, Flavor::minus});
    CHECK(parse_var("12") == Var{12});
    CHECK_THROWS(parse_var("x"));
    CHECK_THROWS(parse_var("0"));
    CHECK(MonomialKey::s_power(v1) * MonomialKey::s_power(v1) == MonomialKey::s_power(v1, 2));
    CHECK(MonomialKey::t_power(Var{9}) < MonomialKey::s_power(v1));
    CHECK(MonomialKey::s_power(v1) < MonomialKey::s_power(Var{2}));
}

TEST_CASE("exp turns sums into products")
{
    std::mt19937 rng(20240601);
    for (int w = 1; w <= 8; ++w) {
        const Truncation tr{w, w};
        for (int rep = 0; rep < 4; ++rep) {
            const auto a = random_series(rng, tr, 4);
            const auto b = random_series(rng, tr, 4);
            CHECK(exp(a + b) == exp(a) * exp(b));
        }
    }
}

TEST_CASE("log inverts exp")
{
    std::mt19937 rng(77);
    for (int w = 1; w <= 8; ++w) {
        const Truncation tr{w, w};
        for (int rep = 0; rep < 4; ++rep) {
            const auto a = random_series(rng, tr, 5);
            CHECK(log(exp(a)) == a);
        }
    }
    CHECK_THROWS_AS(log(t_poly(2, {2, 1})), std::domain_error);
}

TEST_CASE("dense products match direct convolution")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-9, 9);
    const int w = 12;
    std::vector<Rational> x(w + 1), y(w + 1);
    TruncatedSeries a(Truncation{0, w}), b(Truncation{0, w});
    for (int i = 0; i <= w; ++i) {
        x[i] = Rational(num(rng), i + 1);
        y[i] = Rational(num(rng), 2);
        a.add_term(t1(i), x[i]);
        b.add_term(t1(i), y[i]);
    }
    const auto c = a * b;
    for (int m = 0; m <= w; ++m) {
        Rational direct = 0;
        for (int i = 0; i <= m; ++i) {
            direct += x[i] * y[m - i];
        }
        CHECK(c.coefficient(t1(m)) == direct);
    }
}

TEST_CASE("substituting scalars for s")
{
    const Truncation tr{3, 3};
    TruncatedSeries a(tr);
    a.add_term(MonomialKey({{Var{1}, 1}}, {{v1, 1}}), 1);
    a.add_term(MonomialKey({{Var{2}, 1}}, {{Var{2}, 1}}), Rational(-1, 2));
    a.add_term(MonomialKey({{Var{1}, 3}}, {{v1, 3}}), Rational(1, 6));
    a.add_term(MonomialKey({{Var{3}, 1}}, {{v1, 3}}), 2);
    const auto odd = substitute_s(a, [](Var v) -> std::optional<Rational> {
        if (v.index % 2 == 1) {
            return Rational(1);
        }
        return std::nullopt;
    });
    CHECK(odd.truncation() == Truncation{0, 3});
    CHECK(odd.coefficient(t1(1)) == 1);
    CHECK(odd.coefficient(MonomialKey::t_power(Var{2})) == 0);
    CHECK(odd.coefficient(t1(3)) == Rational(13, 6));
    CHECK(filter_terms(a, [](const MonomialKey &k) { return k.s_weight() == 3; }).size() == 2);
}
