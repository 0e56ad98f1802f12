#pragma once

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace kbranch {

// Weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction, so the empty vector is the empty partition.
class Partition {
 public:
  Partition() = default;
  // Throws ValidationError unless parts are non-negative and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  // i-th part (0-based), zero past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
  // Length of the j-th column (0-based).
  int column_length(int j) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

bool contains(const Partition& lambda, const Partition& mu);

bool has_even_rows(const Partition& lambda);
bool has_even_columns(const Partition& lambda);

// All partitions of n with at most max_length parts, each at most max_part,
// in reverse lexicographic order ((n) first). Negative bounds mean unbounded.
std::vector<Partition> partitions_of(int n, int max_length = -1, int max_part = -1);

// All partitions mu with mu ⊆ lambda, in reverse lexicographic order.
std::vector<Partition> subpartitions(const Partition& lambda);

class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}
  // Throws ValidationError unless inner ⊆ outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return outer_.length(); }
  int size() const { return outer_.size() - inner_.size(); }
  // Number of skew cells in column j.
  int column_count(int j) const { return outer_.column_length(j) - inner_.column_length(j); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

bool is_strip(const SkewShape& s);
bool is_double_strip(const SkewShape& s);

// Pair (plus, minus) encoding the weakly decreasing integer vector
// (plus_1, ..., plus_p, 0, ..., 0, -minus_q, ..., -minus_1). Carries no rank.
struct GeneralizedPartition {
  Partition plus;
  Partition minus;

  // Throws ValidationError if v is not weakly decreasing.
  static GeneralizedPartition from_vector(const std::vector<int>& v);
  // Padded integer vector of length k. Throws ValidationError if it does not fit.
  std::vector<int> to_vector(int k) const;

  int min_rank() const { return plus.length() + minus.length(); }

  friend auto operator<=>(const GeneralizedPartition&, const GeneralizedPartition&) = default;
  friend bool operator==(const GeneralizedPartition&, const GeneralizedPartition&) = default;
};

enum class Family { Orthogonal, GeneralLinear, Symplectic };

// O_k, GL_k or Sp_2k; `rank` is k in every case.
struct GroupType {
  Family family = Family::GeneralLinear;
  int rank = 1;

  static GroupType orthogonal(int k);
  static GroupType general_linear(int k);
  static GroupType symplectic(int k);

  GroupType with_rank(int k) const;
  // "O5", "GL4", "Sp6" (numeral 2k for Sp).
  std::string name() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

// Irreducible label for a classical group: a partition for O and Sp,
// a generalized partition for GL.
using Label = std::variant<Partition, GeneralizedPartition>;

// Membership in K-hat. Throws ValidationError on a label kind mismatch.
bool in_k_hat(const GroupType& group, const Label& lambda);
bool in_k_hat(const GroupType& group, const Partition& lambda);
bool in_k_hat(const GroupType& group, const GeneralizedPartition& lambda);

// The associated partition for O_k: first column length l -> k - l.
// Throws ValidationError unless lambda is in O_k-hat.
Partition associated_partition(const Partition& lambda, int k);

// Label of an irreducible of the minimal block subgroup (O_1)^k, (GL_1)^k or (Sp_2)^k.
using WeightVector = std::vector<int>;

bool weight_vector_valid(const GroupType& group, std::span<const int> delta);

int abs_sum(std::span<const int> delta);

}  // namespace kbranch
