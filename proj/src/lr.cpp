#include "kbranch/lr.hpp"

#include <algorithm>

#include "kbranch/tableau.hpp"

namespace kbranch {

void SchurExpansion::add(const Partition& lambda, const Count& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) it->second += c;
}

Count SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Count(0) : it->second;
}

Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  if (lambda.size() != mu.size() + nu.size()) return 0;
  SkewShape shape(lambda, mu);
  const auto target = nu.vec();
  return count_ssyt(shape, Alphabet::plain(nu.length()), lr_filter(target));
}

int pieri_coefficient(const Partition& lambda, const Partition& mu, int m) {
  if (!contains(lambda, mu)) return 0;
  SkewShape s(lambda, mu);
  return s.size() == m && is_strip(s) ? 1 : 0;
}

namespace {

// e * s_mu restricted to partitions inside `bound` (when given) and of length
// at most max_length.
SchurExpansion multiply_bounded(const SchurExpansion& e, const Partition& mu,
                                std::optional<int> max_length, const Partition* bound) {
  SchurExpansion out;
  for (const auto& [kappa, c] : e.terms()) {
    const int n = kappa.size() + mu.size();
    int len = kappa.length() + mu.length();
    if (max_length) len = std::min(len, *max_length);
    if (bound) len = std::min(len, bound->length());
    int width = kappa.part(0) + mu.part(0);
    if (bound) width = std::min(width, bound->part(0));
    for (const auto& lambda : partitions_of(n, len, width)) {
      if (bound && !contains(*bound, lambda)) continue;
      if (!contains(lambda, kappa) || !contains(lambda, mu)) continue;
      out.add(lambda, c * lr_coefficient(lambda, kappa, mu));
    }
  }
  return out;
}

}  // namespace

SchurExpansion schur_multiply(const SchurExpansion& e, const Partition& mu,
                              std::optional<int> max_length) {
  return multiply_bounded(e, mu, max_length, nullptr);
}

Count generalized_lr(const Partition& lambda, const std::vector<Partition>& mus,
                     std::optional<int> max_length) {
  if (max_length && lambda.length() > *max_length) return 0;
  int total = 0;
  for (const auto& m : mus) total += m.size();
  if (total != lambda.size()) return 0;
  // Only terms contained in lambda can reach lambda.
  SchurExpansion e{Partition{}};
  for (const auto& m : mus) {
    e = multiply_bounded(e, m, max_length, &lambda);
    if (e.empty()) return 0;
  }
  return e.coefficient(lambda);
}

}  // namespace kbranch
