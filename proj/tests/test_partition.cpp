#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "kbranch/count.hpp"
#include "kbranch/partition.hpp"

using namespace kbranch;

TEST_CASE("construction strips zeros and validates") {
  CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(Partition({0}).empty());
  CHECK(Partition{}.size() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
  CHECK_THROWS_AS(Partition({2, -1}), ValidationError);
  CHECK_THROWS_AS(Partition({2, 0, 1}), ValidationError);
}

TEST_CASE("accessors") {
  Partition p{4, 2, 2, 1};
  CHECK(p.size() == 9);
  CHECK(p.length() == 4);
  CHECK(p.part(0) == 4);
  CHECK(p.part(7) == 0);
  CHECK(p.column_length(0) == 4);
  CHECK(p.column_length(1) == 3);
  CHECK(p.column_length(3) == 1);
  CHECK(p.column_length(4) == 0);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
}

TEST_CASE("conjugate is an involution and swaps even rows with even columns") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).size() == p.size());
      CHECK(has_even_rows(p) == has_even_columns(conjugate(p)));
    }
}

TEST_CASE("partition counts and order") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<size_t>(expected[n]));
  auto ps = partitions_of(4);
  CHECK(ps.front() == Partition{4});
  CHECK(ps.back() == Partition{1, 1, 1, 1});
  for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].vec() > ps[i].vec());
  CHECK(partitions_of(5, 2).size() == 3);
  CHECK(partitions_of(5, -1, 2).size() == 3);
  CHECK(partitions_of(5, 2, 2).empty());
}

TEST_CASE("containment and subpartitions") {
  CHECK(contains(Partition{3, 2}, Partition{2, 2}));
  CHECK_FALSE(contains(Partition{3, 2}, Partition{2, 2, 1}));
  CHECK(contains(Partition{3}, Partition{}));
  auto subs = subpartitions(Partition{2, 1});
  CHECK(subs.size() == 5);
  CHECK(subs.front() == Partition{2, 1});
  CHECK(subs.back() == Partition{});
}

TEST_CASE("skew shapes") {
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), ValidationError);
  SkewShape s(Partition{3, 2, 1}, Partition{2, 1});
  CHECK(s.size() == 3);
  CHECK(s.column_count(0) == 1);
  CHECK(s.column_count(2) == 1);
}

TEST_CASE("strips") {
  CHECK(is_strip(SkewShape(Partition{3, 1}, Partition{1})));
  CHECK_FALSE(is_strip(SkewShape(Partition{1, 1}, Partition{})));
  CHECK(is_double_strip(SkewShape(Partition{1, 1}, Partition{})));
  CHECK_FALSE(is_double_strip(SkewShape(Partition{1, 1, 1}, Partition{})));
  CHECK(is_strip(SkewShape(Partition{2, 2}, Partition{2, 2})));
}

TEST_CASE("every strip is a double strip") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : subpartitions(la)) {
        SkewShape s(la, mu);
        if (is_strip(s)) CHECK(is_double_strip(s));
      }
}

TEST_CASE("generalized partitions") {
  auto g = GeneralizedPartition::from_vector({2, 1, -2, -2});
  CHECK(g.plus == Partition{2, 1});
  CHECK(g.minus == Partition{2, 2});
  CHECK(g.to_vector(4) == std::vector<int>{2, 1, -2, -2});
  CHECK(g.to_vector(6) == std::vector<int>{2, 1, 0, 0, -2, -2});
  CHECK_THROWS_AS(g.to_vector(3), ValidationError);
  CHECK_THROWS_AS(GeneralizedPartition::from_vector({1, 2}), ValidationError);
  CHECK(GeneralizedPartition::from_vector({0, 0, 0}) == GeneralizedPartition{});
}

TEST_CASE("generalized partition round trip over small vectors") {
  int seen = 0;
  for (int len = 0; len <= 6; ++len) {
    std::vector<int> v(static_cast<size_t>(len), 3);
    // all weakly decreasing vectors with entries in [-3, 3]
    std::function<void(size_t, int)> rec = [&](size_t i, int cap) {
      if (i == v.size()) {
        auto g = GeneralizedPartition::from_vector(v);
        CHECK(g.to_vector(len) == v);
        CHECK(g.min_rank() <= len);
        ++seen;
        return;
      }
      for (int x = cap; x >= -3; --x) {
        v[i] = x;
        rec(i + 1, x);
      }
    };
    rec(0, 3);
  }
  CHECK(seen > 1000);
}

TEST_CASE("group names") {
  CHECK(GroupType::orthogonal(5).name() == "O5");
  CHECK(GroupType::general_linear(4).name() == "GL4");
  CHECK(GroupType::symplectic(3).name() == "Sp6");
  CHECK(GroupType::symplectic(3).with_rank(2) == GroupType::symplectic(2));
}

TEST_CASE("k-hat membership") {
  auto o3 = GroupType::orthogonal(3);
  CHECK(in_k_hat(o3, Partition{2, 1}));
  CHECK(in_k_hat(o3, Partition{1, 1, 1}));
  CHECK_FALSE(in_k_hat(o3, Partition{2, 2}));
  CHECK(in_k_hat(GroupType::orthogonal(4), Partition{2, 2}));
  CHECK(in_k_hat(GroupType::symplectic(2), Partition{5, 3}));
  CHECK_FALSE(in_k_hat(GroupType::symplectic(2), Partition{1, 1, 1}));
  CHECK(in_k_hat(GroupType::general_linear(4), GeneralizedPartition::from_vector({2, 1, -2, -2})));
  CHECK_FALSE(in_k_hat(GroupType::general_linear(3), GeneralizedPartition::from_vector({2, 1, -2, -2})));
  CHECK_THROWS_AS(in_k_hat(o3, Label{GeneralizedPartition{}}), ValidationError);
  CHECK_THROWS_AS(in_k_hat(GroupType::general_linear(2), Label{Partition{1}}), ValidationError);
}

TEST_CASE("associated partitions") {
  CHECK(associated_partition(Partition{2, 2}, 5) == Partition{2, 2, 1});
  CHECK(associated_partition(Partition{2}, 4) == Partition{2, 1, 1});
  CHECK(associated_partition(Partition{}, 2) == Partition{1, 1});
  CHECK(associated_partition(Partition{}, 1) == Partition{1});
  CHECK_THROWS_AS(associated_partition(Partition{2, 2}, 3), ValidationError);
}

TEST_CASE("associated partition is an involution on O_k-hat") {
  for (int k = 1; k <= 6; ++k) {
    auto g = GroupType::orthogonal(k);
    for (int n = 0; n <= 8; ++n)
      for (const auto& p : partitions_of(n)) {
        if (!in_k_hat(g, p)) continue;
        auto a = associated_partition(p, k);
        CHECK(in_k_hat(g, a));
        CHECK(associated_partition(a, k) == p);
        CHECK(a.length() == k - p.length());
      }
  }
}

TEST_CASE("weight vectors") {
  CHECK(weight_vector_valid(GroupType::orthogonal(3), std::vector<int>{0, 1, 1}));
  CHECK_FALSE(weight_vector_valid(GroupType::orthogonal(3), std::vector<int>{0, 2, 1}));
  CHECK_FALSE(weight_vector_valid(GroupType::orthogonal(3), std::vector<int>{0, 1}));
  CHECK(weight_vector_valid(GroupType::general_linear(2), std::vector<int>{-3, 5}));
  CHECK(weight_vector_valid(GroupType::symplectic(2), std::vector<int>{3, 0}));
  CHECK_FALSE(weight_vector_valid(GroupType::symplectic(2), std::vector<int>{-1, 0}));
  CHECK(abs_sum(std::vector<int>{2, -1, -2, 0}) == 5);
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(to_string(binomial(100, 50)) == "100891344545564193334812497256");
}
