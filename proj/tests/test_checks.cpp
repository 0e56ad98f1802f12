#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbranch/checks.hpp"
#include "kbranch/lr.hpp"

using namespace kbranch;
using namespace kbranch::checks;

TEST_CASE("suites pass on the library") {
  CHECK(check_golden().passed);
  CHECK(check_lr_oracle(5).passed);
  EquivalenceScale small{4, 3, 3, 2};
  CHECK(check_branching_paths(small).passed);
  CHECK(check_dimension_identity(small).passed);
  CHECK(check_stable_minimal(small).passed);
  auto t = check_transitivity(small);
  CHECK(t.passed);
  CHECK(t.instances > 0);
  CHECK(check_closed_forms(4, 3).passed);
  CHECK(check_associated_symmetry(4, 4).passed);
  CHECK(check_howe(3, 3).passed);
}

TEST_CASE("a broken lr coefficient is caught at the smallest instance") {
  Subjects s;
  s.lr = [](const Partition& la, const Partition& mu, const Partition& nu) {
    Count c = lr_coefficient(la, mu, nu);
    return la.size() >= 3 && c > 0 ? c + 1 : c;
  };
  auto r = check_lr_oracle(5, s);
  CHECK_FALSE(r.passed);
  CHECK(r.counterexample == "lambda=3 mu=0 nu=3: lr_coefficient=2 oracle=1");
  CHECK_FALSE(check_golden(s).passed);
}

TEST_CASE("a broken tableau table is caught at the smallest instance") {
  Subjects s;
  s.tableau_table = [](const GroupType& g, const Label& la) {
    auto t = k_tableau_table(g, la);
    const auto* p = std::get_if<Partition>(&la);
    if (g.rank < 3 || !p || p->size() < 2) return t;
    WeightTable out;
    bool first = true;
    for (const auto& [d, c] : t.entries()) {
      if (!first) out.add(d, c);
      first = false;
    }
    return out;
  };
  auto r = check_branching_paths({4, 4, 2, 2}, s);
  CHECK_FALSE(r.passed);
  CHECK(r.counterexample.rfind("O3 lambda=2 delta=", 0) == 0);
  auto d = check_dimension_identity({4, 4, 2, 2}, s);
  CHECK_FALSE(d.passed);
  CHECK(d.counterexample.rfind("O3 lambda=2:", 0) == 0);
}

TEST_CASE("a broken iteration is caught") {
  Subjects s;
  s.iterated = [](const GroupType& g, const Label& la) {
    auto t = iterate_branch(g, la);
    if (g.family == Family::Symplectic && g.rank == 2) t.add({0, 0}, 1);
    return t;
  };
  auto r = check_branching_paths({3, 2, 2, 2}, s);
  CHECK_FALSE(r.passed);
  CHECK(r.counterexample.rfind("Sp4 lambda=0 delta=0,0: tableaux=1 iterate=2", 0) == 0);
}

TEST_CASE("label and weight ranges") {
  CHECK(labels_up_to(GroupType::orthogonal(2), 2).size() == 4);  // 0, 1, 2, 11
  CHECK(labels_up_to(GroupType::general_linear(1), 2).size() == 5);
  CHECK(labels_up_to(GroupType::general_linear(2), 1).size() == 3);
  CHECK(weights_up_to(GroupType::orthogonal(3), 0).size() == 8);
  CHECK(weights_up_to(GroupType::symplectic(2), 2).size() == 6);
  CHECK(weights_up_to(GroupType::general_linear(2), 1).size() == 5);
  CHECK(minimal_dimension(GroupType::symplectic(2), {2, 1}) == 6);
  CHECK(minimal_dimension(GroupType::general_linear(2), {2, 1}) == 1);
}

TEST_CASE("quick suite") {
  for (const auto& r : run_suite(Level::Quick)) {
    INFO(r.name << ": " << r.counterexample);
    CHECK(r.passed);
    CHECK(r.instances > 0);
  }
}
