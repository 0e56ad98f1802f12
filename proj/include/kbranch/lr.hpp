#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kbranch/count.hpp"
#include "kbranch/partition.hpp"

namespace kbranch {

// Linear combination of Schur functions with nonnegative coefficients.
// Zero coefficients are never stored.
class SchurExpansion {
 public:
  SchurExpansion() = default;
  explicit SchurExpansion(const Partition& lambda) { add(lambda, 1); }

  void add(const Partition& lambda, const Count& c);
  Count coefficient(const Partition& lambda) const;
  const std::map<Partition, Count>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  std::map<Partition, Count> terms_;
};

// c^lambda_{mu nu}, counted as LR tableaux of shape lambda/mu with content nu.
Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// 1 if lambda/mu is a strip of size m, else 0.
int pieri_coefficient(const Partition& lambda, const Partition& mu, int m);

// e * s_mu, dropping terms longer than max_length when given.
SchurExpansion schur_multiply(const SchurExpansion& e, const Partition& mu,
                              std::optional<int> max_length = std::nullopt);

// Coefficient of s_lambda in s_{mus[0]} * ... * s_{mus[r-1]}, evaluated left to right.
Count generalized_lr(const Partition& lambda, const std::vector<Partition>& mus,
                     std::optional<int> max_length = std::nullopt);

}  // namespace kbranch
