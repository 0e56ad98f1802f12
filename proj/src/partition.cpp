#include "kbranch/partition.hpp"

#include <algorithm>
#include <numeric>

#include "kbranch/count.hpp"

namespace kbranch {

Count binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::column_length(int j) const {
  if (j < 0) return 0;
  // parts are decreasing, so count rows longer than j
  int n = 0;
  while (n < length() && parts_[static_cast<size_t>(n)] > j) ++n;
  return n;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  for (int j = 0; j < lambda.part(0); ++j) cols.push_back(lambda.column_length(j));
  return Partition(std::move(cols));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

bool has_even_rows(const Partition& lambda) {
  return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                     [](int p) { return p % 2 == 0; });
}

bool has_even_columns(const Partition& lambda) { return has_even_rows(conjugate(lambda)); }

namespace {

void partitions_rec(int remaining, int max_length, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, max_length - 1, p, prefix, out);
    prefix.pop_back();
  }
}

void subpartitions_rec(const Partition& lambda, int row, int cap, std::vector<int>& prefix,
                       std::vector<Partition>& out) {
  if (row == lambda.length()) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(cap, lambda.part(row)); p >= 0; --p) {
    prefix.push_back(p);
    if (p == 0) {
      // all later rows are zero as well
      out.emplace_back(prefix);
    } else {
      subpartitions_rec(lambda, row + 1, p, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, max_length < 0 ? n : max_length, max_part < 0 ? n : max_part, prefix, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  subpartitions_rec(lambda, 0, lambda.part(0), prefix, out);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_)) throw ValidationError("skew shape requires inner ⊆ outer");
}

bool is_strip(const SkewShape& s) {
  for (int j = 0; j < s.outer().part(0); ++j)
    if (s.column_count(j) > 1) return false;
  return true;
}

bool is_double_strip(const SkewShape& s) {
  for (int j = 0; j < s.outer().part(0); ++j)
    if (s.column_count(j) > 2) return false;
  return true;
}

GeneralizedPartition GeneralizedPartition::from_vector(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) throw ValidationError("generalized partition must be weakly decreasing");
  std::vector<int> plus, minus;
  for (int x : v)
    if (x > 0) plus.push_back(x);
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (*it < 0) minus.push_back(-*it);
  return {Partition(std::move(plus)), Partition(std::move(minus))};
}

std::vector<int> GeneralizedPartition::to_vector(int k) const {
  if (min_rank() > k)
    throw ValidationError("generalized partition has more nonzero parts than the rank");
  std::vector<int> v(static_cast<size_t>(k), 0);
  for (int i = 0; i < plus.length(); ++i) v[static_cast<size_t>(i)] = plus.part(i);
  for (int i = 0; i < minus.length(); ++i) v[static_cast<size_t>(k - 1 - i)] = -minus.part(i);
  return v;
}

namespace {
GroupType make_group(Family f, int k) {
  if (k < 1) throw ValidationError("group rank must be positive");
  return {f, k};
}
}  // namespace

GroupType GroupType::orthogonal(int k) { return make_group(Family::Orthogonal, k); }
GroupType GroupType::general_linear(int k) { return make_group(Family::GeneralLinear, k); }
GroupType GroupType::symplectic(int k) { return make_group(Family::Symplectic, k); }
GroupType GroupType::with_rank(int k) const { return make_group(family, k); }

std::string GroupType::name() const {
  switch (family) {
    case Family::Orthogonal:
      return "O" + std::to_string(rank);
    case Family::GeneralLinear:
      return "GL" + std::to_string(rank);
    case Family::Symplectic:
      return "Sp" + std::to_string(2 * rank);
  }
  return {};
}

bool in_k_hat(const GroupType& group, const Partition& lambda) {
  switch (group.family) {
    case Family::Orthogonal:
      return lambda.column_length(0) + lambda.column_length(1) <= group.rank;
    case Family::Symplectic:
      return lambda.length() <= group.rank;
    case Family::GeneralLinear:
      break;
  }
  throw ValidationError("GL labels are generalized partitions");
}

bool in_k_hat(const GroupType& group, const GeneralizedPartition& lambda) {
  if (group.family != Family::GeneralLinear)
    throw ValidationError(group.name() + " labels are partitions, not generalized partitions");
  return lambda.min_rank() <= group.rank;
}

bool in_k_hat(const GroupType& group, const Label& lambda) {
  return std::visit([&](const auto& l) { return in_k_hat(group, l); }, lambda);
}

Partition associated_partition(const Partition& lambda, int k) {
  if (!in_k_hat(GroupType::orthogonal(k), lambda))
    throw ValidationError("associated partition needs a label in O_k-hat");
  // Column lengths are the conjugate parts; replace the first.
  std::vector<int> cols = conjugate(lambda).vec();
  const int first = k - lambda.length();
  if (cols.empty())
    cols.push_back(first);
  else
    cols[0] = first;
  // first >= second column holds because lambda is in O_k-hat
  return conjugate(Partition(std::move(cols)));
}

bool weight_vector_valid(const GroupType& group, std::span<const int> delta) {
  if (static_cast<int>(delta.size()) != group.rank) return false;
  switch (group.family) {
    case Family::Orthogonal:
      return std::all_of(delta.begin(), delta.end(), [](int d) { return d == 0 || d == 1; });
    case Family::GeneralLinear:
      return true;
    case Family::Symplectic:
      return std::all_of(delta.begin(), delta.end(), [](int d) { return d >= 0; });
  }
  return false;
}

int abs_sum(std::span<const int> delta) {
  int s = 0;
  for (int d : delta) s += d < 0 ? -d : d;
  return s;
}

}  // namespace kbranch
