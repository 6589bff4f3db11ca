#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <hilex/partition.hpp>

#include "oracles.hpp"

using namespace hilex;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition> &ps)
{
    std::vector<std::vector<int>> out;
    for (const auto &p : ps) {
        out.push_back(p.parts());
    }
    return out;
}

} // namespace

TEST_CASE("partition counts match p(n)")
{
    const int a000041[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    for (int n = 0; n <= 20; ++n) {
        CHECK(partitions(n).size() == static_cast<std::size_t>(a000041[n]));
    }
}

TEST_CASE("partition filters")
{
    CHECK(partitions(4).size() == 5);
    CHECK(parts_of(partitions(4, PartitionFilter::even_parts)) == std::vector<std::vector<int>>{{4}, {2, 2}});
    CHECK(parts_of(partitions(5, PartitionFilter::even_parts)) == std::vector<std::vector<int>>{{4, 1}, {2, 2, 1}});
    CHECK(parts_of(partitions(5, PartitionFilter::odd_parts)) ==
          std::vector<std::vector<int>>{{5}, {3, 1, 1}, {1, 1, 1, 1, 1}});
    for (auto f : {PartitionFilter::all, PartitionFilter::odd_parts, PartitionFilter::even_parts}) {
        auto zero = partitions(0, f);
        REQUIRE(zero.size() == 1);
        CHECK(zero[0].empty());
    }
    CHECK_THROWS_AS(partitions(-1), std::domain_error);
}

TEST_CASE("OP counts follow A000009")
{
    const std::size_t op_counts[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
    for (int n = 0; n <= 10; ++n) {
        CHECK(partitions(n, PartitionFilter::odd_parts).size() == op_counts[n]);
    }
}

TEST_CASE("canonical order is reverse lexicographic")
{
    auto ps = partitions(6);
    CHECK(ps.front() == Partition{6});
    CHECK(ps.back() == Partition{1, 1, 1, 1, 1, 1});
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(Partition{3} < Partition{2, 1});
    CHECK(Partition{1, 2} == Partition{2, 1});
    CHECK_THROWS(Partition{0, 1});
}

TEST_CASE("centralizer orders in S_n")
{
    CHECK(centralizer_order_sn(Partition{2, 2}) == 8);
    CHECK(centralizer_order_sn(Partition{3}) == 3);
    CHECK(centralizer_order_sn(Partition(std::vector<int>(5, 1))) == 120);
    CHECK(class_size_sn(Partition{2, 2}) == 3);
}

TEST_CASE("centralizer orders agree with brute-force class sizes")
{
    for (int n = 1; n <= 6; ++n) {
        std::map<std::vector<int>, long long> counts;
        for (const auto &w : oracle::all_perms(n)) {
            ++counts[oracle::cycle_type(w)];
        }
        for (const auto &nu : partitions(n)) {
            CHECK(class_size_sn(nu) == counts.at(nu.parts()));
        }
    }
}

TEST_CASE("class sizes sum to the group order")
{
    for (int n = 0; n <= 12; ++n) {
        BigInt s = 0;
        for (const auto &nu : partitions(n)) {
            s += factorial(n) / centralizer_order_sn(nu);
        }
        CHECK(s == factorial(n));
    }
    for (int n = 0; n <= 6; ++n) {
        BigInt s = 0;
        for (const auto &bnu : bipartitions(n)) {
            s += class_size_bn(bnu);
        }
        CHECK(s == order_bn(n));
    }
}

TEST_CASE("centralizer orders in B_n")
{
    CHECK(centralizer_order_bn({Partition{2}, Partition{}}) == 4);
    CHECK(centralizer_order_bn({Partition{1, 1}, Partition{}}) == 8);
    CHECK(centralizer_order_bn({Partition{}, Partition{1}}) == 2);
}

TEST_CASE("B_n class sizes agree with brute force")
{
    for (int n = 1; n <= 4; ++n) {
        std::map<std::pair<std::vector<int>, std::vector<int>>, long long> counts;
        for (const auto &w : oracle::all_signed_perms(n)) {
            ++counts[oracle::signed_type(w)];
        }
        CHECK(counts.size() == bipartitions(n).size());
        for (const auto &b : bipartitions(n)) {
            CHECK(class_size_bn(b) == counts.at({b.plus.parts(), b.minus.parts()}));
        }
    }
}

TEST_CASE("bipartitions are listed canonically")
{
    auto bs = bipartitions(2);
    REQUIRE(bs.size() == 5);
    CHECK(bs.front() == BiPartition{Partition{2}, Partition{}});
    CHECK(bs.back() == BiPartition{Partition{}, Partition{1, 1}});
    CHECK(std::is_sorted(bs.begin(), bs.end()));
}
