#pragma once

// Cross-validation suites: each walks a family of instances in increasing size
// and compares a main computation path against an oracle or a second path.
// The first mismatch found is therefore a smallest one.

#include <functional>
#include <string>
#include <vector>

#include "kbranch/branching.hpp"
#include "kbranch/count.hpp"
#include "kbranch/partition.hpp"

namespace kbranch::checks {

struct CheckReport {
  std::string name;
  bool passed = true;
  long instances = 0;
  std::string counterexample;  // empty when passed
  double seconds = 0;
};

// The computations under test. Defaults are the library routines; tests swap
// in broken versions to exercise the reporting.
struct Subjects {
  std::function<Count(const Partition&, const Partition&, const Partition&)> lr = lr_default;
  std::function<WeightTable(const GroupType&, const Label&)> tableau_table = k_tableau_table;
  std::function<WeightTable(const GroupType&, const Label&)> iterated = iterate_branch;

  static Count lr_default(const Partition& la, const Partition& mu, const Partition& nu);
};

// Sizes for the branching-path family; also used by the dimension identity.
struct EquivalenceScale {
  int max_size = 6;
  int max_orthogonal_rank = 5;
  int max_general_linear_rank = 4;
  int max_symplectic_rank = 3;
};

// lr_coefficient against the monomial oracle for every triple with |mu|+|nu| <= max_total.
CheckReport check_lr_oracle(int max_total, const Subjects& s = {});

// iterate_branch, the tableau table and the chain oracle agree on every weight.
CheckReport check_branching_paths(const EquivalenceScale& scale, const Subjects& s = {});

// sum_delta b^lambda_delta dim W^delta equals the Weyl dimension of U^lambda.
CheckReport check_dimension_identity(const EquivalenceScale& scale, const Subjects& s = {});

// Stable branching to the all-ones block subgroup against the tableau count.
CheckReport check_stable_minimal(const EquivalenceScale& scale, const Subjects& s = {});

// Two-block stable branching composed with minimal branching of the factors.
// Returns the number of table comparisons as `instances`.
CheckReport check_transitivity(const EquivalenceScale& scale, const Subjects& s = {});

// Closed forms for one-row and one-column labels against enumeration.
CheckReport check_closed_forms(int max_a, int max_rank, const Subjects& s = {});

// Associated-partition symmetry of the O_k one-step rule and its strip predicate.
CheckReport check_associated_symmetry(int max_size, int max_rank);

// Graded dimensions of the three polynomial rings, all n, p, q <= max_rank, d <= max_degree.
CheckReport check_howe(int max_rank, int max_degree);

// Fixed reference values: LR example, the three tableau examples, the stable example.
CheckReport check_golden(const Subjects& s = {});

// Quick runs every suite at the acceptance sizes; Full pushes each one further.
enum class Level { Quick, Full };

std::vector<CheckReport> run_suite(Level level, const Subjects& s = {});

// Label and weight ranges shared by the suites and the tests.
std::vector<Label> labels_up_to(const GroupType& group, int max_size);
std::vector<WeightVector> weights_up_to(const GroupType& group, int max_abs_sum);
// dim W^delta for the minimal subgroup.
Count minimal_dimension(const GroupType& group, const WeightVector& delta);

}  // namespace kbranch::checks
