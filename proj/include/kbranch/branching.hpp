#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kbranch/count.hpp"
#include "kbranch/partition.hpp"
#include "kbranch/tableau.hpp"

namespace kbranch {

// Finite map label -> multiplicity with no zero entries.
template <class Key>
class MultiplicityTable {
 public:
  void add(const Key& key, const Count& c) {
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(key, c);
    if (!inserted) it->second += c;
  }
  Count at(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Count(0) : it->second;
  }
  const std::map<Key, Count>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;

 private:
  std::map<Key, Count> entries_;
};

using WeightTable = MultiplicityTable<WeightVector>;
// Keys (mu, delta): mu a label at rank k-1, delta a label at rank 1.
using OneStepTable = MultiplicityTable<std::pair<Label, int>>;

// Block sizes k_1, ..., k_r of a block-diagonal subgroup.
struct BlockSpec {
  std::vector<int> parts;

  int total() const;
  int min_part() const;
  int count() const { return static_cast<int>(parts.size()); }
};

// Auxiliary Howe duality sizes: n for O and Sp, (p, q) for GL.
struct HoweRank {
  int n = 0;
  int p = 0;
  int q = 0;

  static HoweRank single(int n) { return {n, 0, 0}; }
  static HoweRank pair(int p, int q) { return {0, p, q}; }
};

// First violated stable-range hypothesis, or nullopt when all hold.
// Throws ValidationError when blocks or labels are malformed for the group.
std::optional<std::string> stable_range_violation(const GroupType& group, const BlockSpec& blocks,
                                                  const Label& lambda,
                                                  const std::vector<Label>& mus,
                                                  const HoweRank& howe);

bool stable_range_ok(const GroupType& group, const BlockSpec& blocks, const Label& lambda,
                     const std::vector<Label>& mus, const HoweRank& howe);

// Branching multiplicity from K to the block subgroup as a sum of generalized
// LR coefficients over (r-1)-tuples nu. Throws StableRangeError outside the
// stable range.
Count stable_branch(const GroupType& group, const BlockSpec& blocks, const Label& lambda,
                    const std::vector<Label>& mus, const HoweRank& howe);

// Element of T(K)^lambda_delta: a single tableau for O and Sp, a pair for GL.
struct KTableau {
  Tableau tableau;               // T, or T+ for GL
  std::optional<Tableau> minus;  // T- for GL

  friend bool operator==(const KTableau&, const KTableau&) = default;
};

WeightVector k_tableau_weight(const GroupType& group, const KTableau& t);

// Visits every K-tableau of shape lambda (restricted to weight delta when given)
// in canonical order. The visitor returns false to stop.
void for_each_k_tableau(const GroupType& group, const Label& lambda,
                        const std::optional<WeightVector>& delta,
                        const std::function<bool(const KTableau&, const WeightVector&)>& visit);

std::vector<KTableau> enumerate_k_tableaux(const GroupType& group, const Label& lambda,
                                           const WeightVector& delta);

Count k_tableau_count(const GroupType& group, const Label& lambda, const WeightVector& delta);

// delta -> #T(K)^lambda_delta over all delta, from a single enumeration.
WeightTable k_tableau_table(const GroupType& group, const Label& lambda);

// Branching from rank k to rank (k-1) x rank 1. Requires k >= 2.
OneStepTable one_step_branch(const GroupType& group, const Label& lambda);

// Restriction to the minimal subgroup by composing one_step_branch down to rank 1.
WeightTable iterate_branch(const GroupType& group, const Label& lambda);

struct AssociatedTriple {
  Partition lambda;
  Partition mu;
  int delta = 0;

  friend bool operator==(const AssociatedTriple&, const AssociatedTriple&) = default;
};

// (lambda, mu, delta) -> (associated lambda at rank k, associated mu at rank k-1, 1 - delta).
AssociatedTriple assoc_symmetry_pair(const Partition& lambda, const Partition& mu, int delta, int k);

// Closed form for one-row labels: (a) for O and Sp, (b, 0, ..., 0, -c) for GL.
Count multiplicity_one_row(const GroupType& group, int a, std::span<const int> delta);
Count multiplicity_one_row(const GroupType& group, int b, int c, std::span<const int> delta);

// Closed form for one-column labels: (1^a) for O and Sp, (1^b, 0, ..., 0, -1^c) for GL.
Count multiplicity_one_column(const GroupType& group, int a, std::span<const int> delta);
Count multiplicity_one_column(const GroupType& group, int b, int c, std::span<const int> delta);

// Number of (x, y)-ballot sequences: ((x-y+1)/(x+y+1)) * C(x+y+1, y), zero if x < y.
Count ballot_number(int x, int y);

// Multisets of cardinality n from a k-element set: C(k+n-1, n).
Count multiset_number(int k, int n);

}  // namespace kbranch
