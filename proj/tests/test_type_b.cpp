#include <catch2/catch_amalgamated.hpp>

#include <hilex/type_b.hpp>

#include "oracles.hpp"

using namespace hilex;

namespace {

BiPartition bp(std::vector<int> plus, std::vector<int> minus) { return {Partition(plus), Partition(minus)}; }

oracle::BKey key_of(const BiPartition &b) { return {b.plus.parts(), b.minus.parts()}; }

std::map<oracle::BKey, long long> as_map(const BnClassFunction &chi)
{
    std::map<oracle::BKey, long long> m;
    for (std::size_t k = 0; k < chi.size(); ++k) {
        m[key_of(chi.keys()[k])] = static_cast<long long>(chi.value(k));
    }
    return m;
}

} // namespace

TEST_CASE("signed cycle types")
{
    CHECK(signed_cycle_type(SignedPermutation{2, 1}) == bp({2}, {}));
    CHECK(signed_cycle_type(SignedPermutation{-1}) == bp({}, {1}));
    // 1 -> -2 -> 1: a positive 2-cycle paired with its negative
    CHECK(signed_cycle_type(SignedPermutation{-2, -1}) == bp({2}, {}));
    // 1 -> 2 -> -1: a negative cycle
    CHECK(signed_cycle_type(SignedPermutation{2, -1}) == bp({}, {2}));
    CHECK(signed_cycle_type(SignedPermutation::identity(3)) == bp({1, 1, 1}, {}));
    CHECK_THROWS(SignedPermutation{1, -1});
    for (int n = 1; n <= 4; ++n) {
        for (const auto &w : oracle::all_signed_perms(n)) {
            const SignedPermutation s(w);
            CHECK(key_of(s.signed_cycle_type()) == oracle::signed_type(w));
            CHECK(s * s.inverse() == SignedPermutation::identity(n));
        }
    }
}

TEST_CASE("signed permutation products")
{
    const auto all = oracle::all_signed_perms(3);
    for (std::size_t i = 0; i < all.size(); i += 5) {
        for (std::size_t j = 0; j < all.size(); j += 7) {
            CHECK((SignedPermutation(all[i]) * SignedPermutation(all[j])).window() == oracle::compose_signed(all[i], all[j]));
        }
    }
}

TEST_CASE("class sizes of B_n")
{
    for (int n = 0; n <= 6; ++n) {
        BigInt total = 0;
        for (const auto &b : bipartitions(n)) {
            total += class_size_bn(b);
        }
        CHECK(total == order_bn(n));
    }
    for (int n = 1; n <= 4; ++n) {
        std::map<BiPartition, BigInt> counts;
        for_each_signed_permutation(n, [&](const SignedPermutation &s) { ++counts[s.signed_cycle_type()]; });
        for (const auto &[b, c] : counts) {
            CHECK(c == class_size_bn(b));
        }
        CHECK(counts.size() == bipartitions(n).size());
    }
}

TEST_CASE("positive-only count and the matching bijection")
{
    for (int n = 1; n <= 6; ++n) {
        const auto r = positive_only_count(n);
        CHECK(r.count == double_factorial(2 * n - 1));
        CHECK(r.matchings == r.count);
        CHECK(r.bijection_ok);
    }
    CHECK(positive_only_count(2).count == 3);
    CHECK(positive_only_count(3).count == 15);
    // identity matching m = m_0 gives the identity
    CHECK(matching_permutation({2, 3, 0, 1}, 2) == SignedPermutation::identity(2));
    Context tight;
    tight.limits.max_bn_enum_n = 3;
    CHECK_THROWS_AS(positive_only_count(4, tight), size_error);
}

TEST_CASE("standard representatives")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto &b : bipartitions(n)) {
            const auto x = standard_representative_bn(b);
            CHECK(x.signed_cycle_type() == b);
            CHECK(x.window() == oracle::rep_of_b(b.plus.parts(), b.minus.parts()));
        }
    }
}

TEST_CASE("B_1 characters")
{
    const auto triv = higher_lie_character_bn(bp({1}, {}));
    CHECK(triv.at(bp({1}, {})) == 1);
    CHECK(triv.at(bp({}, {1})) == 1);
    const auto neg = higher_lie_character_bn(bp({}, {1}));
    CHECK(neg.at(bp({1}, {})) == 1);
    CHECK(neg.at(bp({}, {1})) == -1);
    const auto e1 = eta(1);
    CHECK(e1.at(bp({1}, {})) == 1);
    CHECK(e1.at(bp({}, {1})) == 1);
    const auto e0 = eta(0);
    REQUIRE(e0.size() == 1);
    CHECK(e0.value(0) == 1);
}

TEST_CASE("B_n characters agree with the coset-formula oracle")
{
    for (int n = 1; n <= 3; ++n) {
        for (const auto &b : bipartitions(n)) {
            INFO(b.str());
            CHECK(as_map(higher_lie_character_bn(b)) == oracle::induced_higher_lie_b(b.plus.parts(), b.minus.parts()));
            auto root = [](int, bool) { return 5; };
            CHECK(as_map(higher_lie_character_bn(b, {}, root)) ==
                  oracle::induced_higher_lie_b(b.plus.parts(), b.minus.parts(), 5, 5));
        }
    }
}

TEST_CASE("centralizer elements commute and carry the decoded omega")
{
    for (int n = 1; n <= 4; ++n) {
        for (const auto &b : bipartitions(n)) {
            const auto x = standard_representative_bn(b);
            const BnCentralizerEnumerator en(b);
            CHECK(BigInt(en.size()) == centralizer_order_bn(b));
            const int order = cyclotomic_order_for(b);
            std::set<SignedPermutation> seen;
            en.for_each(0, en.size(), [&](const BnCentralizerElement &z) {
                const auto s = z.realize(en.layout());
                REQUIRE(s * x == x * s);
                seen.insert(s);
                const auto expect = oracle::omega_b(b.plus.parts(), b.minus.parts(), s.window());
                const auto got = std::polar(1.0, 2 * M_PI * static_cast<double>(z.omega_exponent(en.layout(), order, {})) / order);
                CHECK(std::abs(expect - got) < 1e-9);
            });
            CHECK(seen.size() == en.size());
        }
    }
}

TEST_CASE("choice of primitive characters does not matter")
{
    for (int n = 1; n <= 3; ++n) {
        for (const auto &b : bipartitions(n)) {
            const auto base = higher_lie_character_bn(b);
            // every unit for every (i, sign) factor present, tried one factor at a time
            for (const auto &g : BnLayout::of(b).groups) {
                const int m = g.minus ? 2 * g.part : g.part;
                for (int c = 1; c < m; ++c) {
                    if (std::gcd(c, m) != 1) {
                        continue;
                    }
                    auto root = [&](int i, bool minus) { return (i == g.part && minus == g.minus) ? c : 1; };
                    CHECK(higher_lie_character_bn(b, {}, root) == base);
                }
            }
        }
    }
    CHECK_THROWS(higher_lie_character_bn(bp({}, {2}), {}, [](int, bool) { return 2; }));
}

TEST_CASE("B_n character dimensions")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto &b : bipartitions(n)) {
            CHECK(dimension(higher_lie_character_bn(b)) == order_bn(n) / centralizer_order_bn(b));
        }
        if (n <= 4) {
            CHECK(dimension(eta(n)) == double_factorial(2 * n - 1));
        }
    }
    Context tight;
    tight.limits.max_bn_char_n = 3;
    CHECK_THROWS_AS(higher_lie_character_bn(bp({2, 2}, {}), tight), size_error);
}

TEST_CASE("class fusion")
{
    CHECK(fuse_class(bp({2}, {1}), FusionTarget::even) == Partition{2, 2, 2});
    CHECK(fuse_class(bp({2}, {1}), FusionTarget::odd) == Partition{2, 2, 2, 1});
    CHECK(fuse_class(bp({1, 1}, {}), FusionTarget::even) == Partition{1, 1, 1, 1});
    for (int n = 1; n <= 5; ++n) {
        for (const auto &b : bipartitions(n)) {
            CHECK(fuse_class(b, FusionTarget::even).n() == 2 * n);
            CHECK(fuse_class(b, FusionTarget::odd).n() == 2 * n + 1);
        }
    }
    // the embedded element has the fused cycle type
    for (int n = 1; n <= 3; ++n) {
        for (const auto &w : oracle::all_signed_perms(n)) {
            const auto b = SignedPermutation(w).signed_cycle_type();
            CHECK(Partition(oracle::cycle_type(oracle::embed_b(w, false))) == fuse_class(b, FusionTarget::even));
            CHECK(Partition(oracle::cycle_type(oracle::embed_b(w, true))) == fuse_class(b, FusionTarget::odd));
        }
    }
}

TEST_CASE("induction by fusion matches brute-force induction")
{
    const auto eta1 = eta(1);
    const auto to2 = induce_to_sn(eta1, FusionTarget::even);
    CHECK(to2.at(Partition{1, 1}) == 1);
    CHECK(to2.at(Partition{2}) == 1);
    const auto to3 = induce_to_sn(eta1, FusionTarget::odd);
    CHECK(to3.at(Partition{1, 1, 1}) == 3);
    CHECK(to3.at(Partition{2, 1}) == 1);
    CHECK(to3.at(Partition{3}) == 0);

    for (int n = 1; n <= 3; ++n) {
        for (const auto &b : bipartitions(n)) {
            const auto chi = higher_lie_character_bn(b);
            for (bool odd : {false, true}) {
                if (2 * n + (odd ? 1 : 0) > 7) {
                    continue;
                }
                const auto xi = induce_to_sn(chi, odd ? FusionTarget::odd : FusionTarget::even);
                const auto ref = oracle::induce_brute(n, odd, as_map(chi));
                INFO(b.str() << (odd ? " to S_2n+1" : " to S_2n"));
                for (const auto &[t, v] : ref) {
                    CHECK(xi.at(Partition(t)) == v);
                }
                const BigInt index = factorial(2 * n + (odd ? 1 : 0)) / order_bn(n);
                CHECK(dimension(xi) == index * dimension(chi));
            }
        }
    }
}

TEST_CASE("eta induces the odd-part sums")
{
    for (int n = 1; n <= 3; ++n) {
        for (auto target : {FusionTarget::even, FusionTarget::odd}) {
            const auto r = verify_induced_to_even(n, target);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("type B generating function")
{
    CHECK(k_coefficient(1, 1, 1) == 1);
    CHECK(k_coefficient(1, -1, 1) == 1);
    CHECK(k_coefficient(1, -1, 3) == -mobius(6));
    CHECK(k_coefficient(-1, -1, 1) == -1);
    for (int w = 0; w <= 4; ++w) {
        const auto r = verify_summation_bn(w);
        INFO("weight " << w);
        CHECK(r.pass);
    }
    CHECK(lhs_summation_bn(3).constant_term() == rhs_summation_bn(3).constant_term());
}
