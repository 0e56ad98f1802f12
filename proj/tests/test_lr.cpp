#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbranch/lr.hpp"
#include "kbranch/oracles.hpp"

using namespace kbranch;

TEST_CASE("coefficient of 6531 in s521 s43") { CHECK(lr_coefficient({6, 5, 3, 1}, {5, 2, 1}, {4, 3}) == 3); }

TEST_CASE("small coefficients") {
  CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({2}, {1, 1}, {}) == 0);
  CHECK(lr_coefficient({2, 1}, {2}, {2}) == 0);
  CHECK(lr_coefficient({}, {}, {}) == 1);
  CHECK(lr_coefficient({3, 1}, {3, 1}, {}) == 1);
}

TEST_CASE("pieri") {
  CHECK(pieri_coefficient({3, 1}, {2}, 2) == 1);
  CHECK(pieri_coefficient({2, 1, 1}, {2}, 2) == 0);
  CHECK(pieri_coefficient({2, 2}, {3}, 1) == 0);
}

TEST_CASE("symmetry and pieri consistency") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : subpartitions(la))
        for (const auto& nu : partitions_of(n - mu.size())) {
          const Count c = lr_coefficient(la, mu, nu);
          CHECK(c == lr_coefficient(la, nu, mu));
          if (nu.length() == 1) CHECK(c == pieri_coefficient(la, mu, nu.size()));
        }
}

TEST_CASE("conjugation symmetry") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : subpartitions(la))
        for (const auto& nu : partitions_of(n - mu.size()))
          CHECK(lr_coefficient(la, mu, nu) ==
                lr_coefficient(conjugate(la), conjugate(mu), conjugate(nu)));
}

TEST_CASE("schur_multiply matches the monomial oracle") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 8; ++b)
      for (const auto& mu : partitions_of(a))
        for (const auto& nu : partitions_of(b)) {
          auto e = schur_multiply(SchurExpansion(mu), nu);
          auto o = oracles::schur_product(mu, nu, a + b);
          CHECK(e.terms() == o);
        }
}

TEST_CASE("length truncation") {
  auto e = schur_multiply(SchurExpansion(Partition{1}), {1}, 1);
  CHECK(e.terms().size() == 1);
  CHECK(e.coefficient({2}) == 1);
}

TEST_CASE("generalized lr") {
  CHECK(generalized_lr({2, 1}, {{1}, {1}, {1}}) == 2);
  CHECK(generalized_lr({3}, {{1}, {1}, {1}}) == 1);
  CHECK(generalized_lr({1, 1, 1}, {{1}, {1}, {1}}, 2) == 0);
  CHECK(generalized_lr({2}, {{1}}) == 0);
  CHECK(generalized_lr({}, {}) == 1);
  CHECK(generalized_lr({2, 2}, {{2, 2}}) == 1);
}

TEST_CASE("generalized lr is associative") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
          for (const auto& x : partitions_of(a))
            for (const auto& y : partitions_of(b))
              for (const auto& z : partitions_of(n - a - b)) {
                const auto xy = schur_multiply(SchurExpansion(x), y);
                const auto yz = schur_multiply(SchurExpansion(y), z);
                Count lhs = 0;
                for (const auto& [p, c] : xy.terms())
                  lhs += c * lr_coefficient(la, p, z);
                Count rhs = 0;
                for (const auto& [p, c] : yz.terms())
                  rhs += c * lr_coefficient(la, x, p);
                CHECK(lhs == rhs);
                CHECK(lhs == generalized_lr(la, {x, y, z}));
              }
}

TEST_CASE("two-row contents need a double strip") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : subpartitions(la))
        for (const auto& nu : partitions_of(n - mu.size(), 2))
          if (lr_coefficient(la, mu, nu) > 0) CHECK(is_double_strip(SkewShape(la, mu)));
}

TEST_CASE("generalized lr ignores the order of its factors") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
          for (const auto& x : partitions_of(a))
            for (const auto& y : partitions_of(b))
              for (const auto& z : partitions_of(n - a - b)) {
                std::vector<Partition> f{x, y, z};
                std::sort(f.begin(), f.end());
                const Count base = generalized_lr(la, f);
                while (std::next_permutation(f.begin(), f.end())) CHECK(generalized_lr(la, f) == base);
              }
}
