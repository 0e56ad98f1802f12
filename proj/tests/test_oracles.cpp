#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbranch/oracles.hpp"

using namespace kbranch;
using namespace kbranch::oracles;

TEST_CASE("schur polynomials in two variables") {
  auto s1 = schur_polynomial(Partition{1}, 2);
  CHECK(s1.terms.size() == 2);
  CHECK(s1.coefficient({1, 0}) == 1);
  CHECK(s1.coefficient({0, 1}) == 1);

  auto s11 = schur_polynomial(Partition{1, 1}, 2);
  CHECK(s11.terms.size() == 1);
  CHECK(s11.coefficient({1, 1}) == 1);

  auto s2 = schur_polynomial(Partition{2}, 2);
  CHECK(s2.terms.size() == 3);
  CHECK(s2.coefficient({2, 0}) == 1);
  CHECK(s2.coefficient({1, 1}) == 1);
  CHECK(s2.coefficient({0, 2}) == 1);
}

TEST_CASE("schur polynomial of a too-long partition vanishes") {
  CHECK(schur_polynomial(Partition{1, 1, 1}, 2).terms.empty());
  CHECK(schur_polynomial(Partition{}, 3).coefficient({0, 0, 0}) == 1);
}

TEST_CASE("schur polynomials are symmetric") {
  auto s = schur_polynomial(Partition{3, 1}, 3);
  for (const auto& [e, c] : s.terms) {
    auto f = e;
    std::sort(f.begin(), f.end());
    do CHECK(s.coefficient(f) == c);
    while (std::next_permutation(f.begin(), f.end()));
  }
}

TEST_CASE("lr oracle values") {
  CHECK(lr_oracle({6, 5, 3, 1}, {5, 2, 1}, {4, 3}, 4) == 3);
  CHECK(lr_oracle({2, 1}, {1}, {1, 1}, 3) == 1);
  CHECK(lr_oracle({3, 2, 1}, {3, 2, 1}, {}, 6) == 1);
  CHECK(lr_oracle({3, 2, 1}, {2, 1}, {2, 1}, 6) == 2);
}

TEST_CASE("lr oracle refuses large inputs") {
  CHECK_THROWS_AS(schur_product({5, 3}, {4, 1}, 13), ValidationError);
  CHECK_THROWS_AS(lr_oracle({1, 1, 1}, {1, 1}, {1}, 2), ValidationError);
}

TEST_CASE("truncated products drop long terms") {
  auto p = schur_product({1}, {1, 1}, 2);
  CHECK(p.size() == 1);
  CHECK(p.at(Partition{2, 1}) == 1);
}

TEST_CASE("s1 times s1") {
  auto p = schur_product({1}, {1}, 2);
  CHECK(p.size() == 2);
  CHECK(p.at(Partition{2}) == 1);
  CHECK(p.at(Partition{1, 1}) == 1);
}

TEST_CASE("gl dimensions") {
  CHECK(gl_dimension(Partition{1}, 2) == 2);
  CHECK(gl_dimension(Partition{}, 5) == 1);
  CHECK(gl_dimension(Partition{2, 1}, 3) == 8);
  CHECK(gl_dimension(GeneralizedPartition{{1}, {1}}, 3) == 8);
  CHECK(gl_dimension(GeneralizedPartition::from_vector({2, 1, -2, -2}), 4) ==
        gl_dimension(std::vector<int>{2, 1, -2, -2}));
  CHECK_THROWS_AS(gl_dimension(Partition{1, 1, 1}, 2), ValidationError);
}

TEST_CASE("classical dimensions") {
  CHECK(classical_dimension(GroupType::orthogonal(5), Partition{2, 2}) == 35);
  CHECK(classical_dimension(GroupType::orthogonal(3), Partition{1}) == 3);
  CHECK(classical_dimension(GroupType::orthogonal(3), Partition{1, 1}) == 3);
  CHECK(classical_dimension(GroupType::orthogonal(3), Partition{1, 1, 1}) == 1);
  CHECK(classical_dimension(GroupType::orthogonal(4), Partition{1, 1}) == 6);
  CHECK(classical_dimension(GroupType::orthogonal(4), Partition{2}) == 9);
  CHECK(classical_dimension(GroupType::orthogonal(2), Partition{1}) == 2);
  CHECK(classical_dimension(GroupType::orthogonal(2), Partition{1, 1}) == 1);
  CHECK(classical_dimension(GroupType::orthogonal(1), Partition{1}) == 1);
  CHECK(classical_dimension(GroupType::symplectic(2), Partition{1, 1}) == 5);
  CHECK(classical_dimension(GroupType::symplectic(2), Partition{2}) == 10);
  CHECK(classical_dimension(GroupType::symplectic(1), Partition{3}) == 4);
  CHECK(classical_dimension(GroupType::general_linear(3), GeneralizedPartition{{1}, {1}}) == 8);
}

TEST_CASE("howe graded dimensions") {
  auto sm = howe_graded_dimensions(HoweSetting::Symmetric, 2, 0, 1);
  CHECK(sm.polynomial_side == 3);
  CHECK(sm.schur_side == 3);
  auto am = howe_graded_dimensions(HoweSetting::Alternating, 2, 0, 1);
  CHECK(am.polynomial_side == 1);
  CHECK(am.schur_side == 1);
  auto mm = howe_graded_dimensions(HoweSetting::Mixed, 2, 2, 2);
  CHECK(mm.polynomial_side == 10);
  CHECK(mm.schur_side == 10);
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int d = 0; d <= 4; ++d) {
        CHECK(howe_graded_dimension_check(HoweSetting::Mixed, p, q, d));
        CHECK(howe_graded_dimension_check(HoweSetting::Symmetric, p, 0, d));
        CHECK(howe_graded_dimension_check(HoweSetting::Alternating, p, 0, d));
      }
}

TEST_CASE("chain oracle values") {
  CHECK(chain_oracle(GroupType::orthogonal(5), Partition{2, 2}, {0, 0, 0, 0, 0}) == 5);
  CHECK(chain_oracle(GroupType::symplectic(3), Partition{2, 2}, {0, 0, 0}) == 3);
  CHECK(chain_oracle(GroupType::general_linear(4), GeneralizedPartition::from_vector({2, 1, -2, -2}),
                     {2, -1, -2, 0}) == 1);
  CHECK(chain_oracle(GroupType::orthogonal(3), Partition{}, {0, 0, 0}) == 1);
  CHECK(chain_oracle(GroupType::symplectic(2), Partition{}, {0, 0}) == 1);
  CHECK(chain_oracle(GroupType::general_linear(2), GeneralizedPartition{}, {0, 0}) == 1);
}

TEST_CASE("chain oracle rejects bad input") {
  CHECK_THROWS_AS(chain_oracle(GroupType::orthogonal(3), Partition{2, 2}, {0, 0}), ValidationError);
  CHECK_THROWS_AS(chain_oracle(GroupType::orthogonal(2), Partition{2, 2}, {0, 0}), ValidationError);
  CHECK_THROWS_AS(chain_oracle(GroupType::symplectic(1), Partition{1, 1}, {0}), ValidationError);
}
