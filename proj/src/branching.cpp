#include "kbranch/branching.hpp"

#include <algorithm>
#include <numeric>

#include "kbranch/lr.hpp"

namespace kbranch {

namespace {

const Partition& as_partition(const GroupType& group, const Label& label) {
  if (group.family == Family::GeneralLinear || !std::holds_alternative<Partition>(label))
    throw ValidationError(group.name() + ": label kind does not match the group");
  return std::get<Partition>(label);
}

const GeneralizedPartition& as_generalized(const GroupType& group, const Label& label) {
  if (group.family != Family::GeneralLinear ||
      !std::holds_alternative<GeneralizedPartition>(label))
    throw ValidationError(group.name() + ": label kind does not match the group");
  return std::get<GeneralizedPartition>(label);
}

void require_in_k_hat(const GroupType& group, const Label& lambda) {
  if (!in_k_hat(group, lambda)) throw ValidationError("label is not in " + group.name() + "-hat");
}

void require_weight(const GroupType& group, std::span<const int> delta) {
  if (!weight_vector_valid(group, delta))
    throw ValidationError("weight is not a valid label for the minimal subgroup of " +
                          group.name());
}

// Entries <= i among `entries` (symbols 1..n), checked for every i >= from.
bool prefix_counts_ok(const std::vector<int>& entries, int n, int from,
                      const std::function<int(int)>& bound_index) {
  std::vector<int> cnt(static_cast<size_t>(n) + 1, 0);
  for (int v : entries)
    if (v > 0) ++cnt[static_cast<size_t>(v)];
  int running = 0;
  for (int s = 1; s <= n; ++s) {
    running += cnt[static_cast<size_t>(s)];
    if (s >= from && running > bound_index(s)) return false;
  }
  return true;
}

std::vector<int> column_entries(const Tableau& t, int col) {
  std::vector<int> out;
  for (int r = 0; r < t.shape().rows(); ++r)
    if (col < t.shape().outer().part(r)) out.push_back(t.at(r, col));
  return out;
}

CellFilter orthogonal_filter(int k) {
  return [k](const Tableau& t, int r, int c) {
    if (c > 1) return true;
    auto entries = column_entries(t, 0);
    auto second = column_entries(t, 1);
    entries.insert(entries.end(), second.begin(), second.end());
    return prefix_counts_ok(entries, k, t.at(r, c), [](int s) { return s; });
  };
}

// First column of T+ (empty for the T+ pass itself) is shared with T-.
CellFilter general_linear_filter(int k, std::vector<int> other_first_column) {
  return [k, other = std::move(other_first_column)](const Tableau& t, int r, int c) {
    if (c != 0) return true;
    auto entries = column_entries(t, 0);
    entries.insert(entries.end(), other.begin(), other.end());
    return prefix_counts_ok(entries, k, t.at(r, c), [](int s) { return s; });
  };
}

bool symplectic_ballot(const Tableau& t, int through_row, int k) {
  std::vector<int> plain(static_cast<size_t>(k) + 1, 0), bar(static_cast<size_t>(k) + 1, 0);
  for (int r = 0; r <= through_row; ++r) {
    auto row = t.row(r);
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const auto i = static_cast<size_t>(Alphabet::base_index(*it));
      if (Alphabet::is_barred(*it)) {
        if (++bar[i] > plain[i]) return false;
      } else {
        ++plain[i];
      }
    }
  }
  return true;
}

CellFilter symplectic_filter(int k) {
  return [k](const Tableau& t, int r, int c) {
    if (c == 0) {
      // entries <= i-bar (symbol 2i) in the first column number at most i
      const auto entries = column_entries(t, 0);
      if (!prefix_counts_ok(entries, 2 * k, t.at(r, c), [](int s) { return s % 2 == 0 ? s / 2 : s; }))
        return false;
    }
    if (c + 1 == t.shape().outer().part(r)) return symplectic_ballot(t, r, k);
    return true;
  };
}

}  // namespace

int BlockSpec::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int BlockSpec::min_part() const {
  return parts.empty() ? 0 : *std::min_element(parts.begin(), parts.end());
}

WeightVector k_tableau_weight(const GroupType& group, const KTableau& t) {
  const int k = group.rank;
  WeightVector w(static_cast<size_t>(k), 0);
  const auto c = content(t.tableau);
  switch (group.family) {
    case Family::Orthogonal:
      for (int i = 0; i < k; ++i) w[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] % 2;
      break;
    case Family::GeneralLinear: {
      const auto cm = content(*t.minus);
      for (int i = 0; i < k; ++i)
        w[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] - cm[static_cast<size_t>(i)];
      break;
    }
    case Family::Symplectic:
      for (int i = 0; i < k; ++i)
        w[static_cast<size_t>(i)] = c[static_cast<size_t>(2 * i)] - c[static_cast<size_t>(2 * i + 1)];
      break;
  }
  return w;
}

void for_each_k_tableau(const GroupType& group, const Label& lambda,
                        const std::optional<WeightVector>& delta,
                        const std::function<bool(const KTableau&, const WeightVector&)>& visit) {
  require_in_k_hat(group, lambda);
  if (delta) require_weight(group, *delta);
  const int k = group.rank;

  auto emit = [&](const KTableau& kt) {
    auto w = k_tableau_weight(group, kt);
    if (delta && w != *delta) return true;
    return visit(kt, w);
  };

  switch (group.family) {
    case Family::Orthogonal: {
      const auto& shape = as_partition(group, lambda);
      for_each_ssyt(SkewShape(shape), Alphabet::plain(k), orthogonal_filter(k),
                    [&](const Tableau& t) { return emit(KTableau{t, std::nullopt}); });
      break;
    }
    case Family::Symplectic: {
      const auto& shape = as_partition(group, lambda);
      for_each_ssyt(SkewShape(shape), Alphabet::symplectic(k), symplectic_filter(k),
                    [&](const Tableau& t) { return emit(KTableau{t, std::nullopt}); });
      break;
    }
    case Family::GeneralLinear: {
      const auto& gp = as_generalized(group, lambda);
      const SkewShape minus_shape(gp.minus);
      for_each_ssyt(SkewShape(gp.plus), Alphabet::plain(k), general_linear_filter(k, {}),
                    [&](const Tableau& plus) {
                      return for_each_ssyt(
                          minus_shape, Alphabet::plain(k),
                          general_linear_filter(k, column_entries(plus, 0)),
                          [&](const Tableau& minus) { return emit(KTableau{plus, minus}); });
                    });
      break;
    }
  }
}

std::vector<KTableau> enumerate_k_tableaux(const GroupType& group, const Label& lambda,
                                           const WeightVector& delta) {
  std::vector<KTableau> out;
  for_each_k_tableau(group, lambda, delta, [&](const KTableau& t, const WeightVector&) {
    out.push_back(t);
    return true;
  });
  return out;
}

Count k_tableau_count(const GroupType& group, const Label& lambda, const WeightVector& delta) {
  std::uint64_t n = 0;
  for_each_k_tableau(group, lambda, delta, [&](const KTableau&, const WeightVector&) {
    ++n;
    return true;
  });
  return n;
}

WeightTable k_tableau_table(const GroupType& group, const Label& lambda) {
  std::map<WeightVector, std::uint64_t> counts;
  for_each_k_tableau(group, lambda, std::nullopt, [&](const KTableau&, const WeightVector& w) {
    ++counts[w];
    return true;
  });
  WeightTable table;
  for (const auto& [w, n] : counts) table.add(w, n);
  return table;
}

OneStepTable one_step_branch(const GroupType& group, const Label& lambda) {
  if (group.rank < 2) throw ValidationError("one-step branching needs rank at least 2");
  require_in_k_hat(group, lambda);
  const auto lower = group.with_rank(group.rank - 1);
  OneStepTable table;
  switch (group.family) {
    case Family::Orthogonal: {
      const auto& la = as_partition(group, lambda);
      for (const auto& mu : subpartitions(la)) {
        if (!in_k_hat(lower, mu)) continue;
        SkewShape s(la, mu);
        if (is_strip(s)) table.add({Label(mu), s.size() % 2}, 1);
      }
      break;
    }
    case Family::GeneralLinear: {
      const auto& la = as_generalized(group, lambda);
      for (const auto& mp : subpartitions(la.plus)) {
        SkewShape sp(la.plus, mp);
        if (!is_strip(sp)) continue;
        for (const auto& mm : subpartitions(la.minus)) {
          GeneralizedPartition mu{mp, mm};
          if (!in_k_hat(lower, mu)) continue;
          SkewShape sm(la.minus, mm);
          if (is_strip(sm)) table.add({Label(mu), sp.size() - sm.size()}, 1);
        }
      }
      break;
    }
    case Family::Symplectic: {
      const auto& la = as_partition(group, lambda);
      for (const auto& mu : subpartitions(la)) {
        if (!in_k_hat(lower, mu)) continue;
        SkewShape s(la, mu);
        if (!is_double_strip(s)) continue;
        // fillings with l ones and m twos have weight l - m
        for (int m = 0; 2 * m <= s.size(); ++m) {
          const Partition nu{s.size() - m, m};
          table.add({Label(mu), s.size() - 2 * m}, lr_coefficient(la, mu, nu));
        }
      }
      break;
    }
  }
  return table;
}

namespace {

// Rank-1 label read as its weight.
int rank_one_weight(const GroupType& group, const Label& label) {
  if (group.family == Family::GeneralLinear) {
    const auto& g = std::get<GeneralizedPartition>(label);
    return g.plus.part(0) - g.minus.part(0);
  }
  return std::get<Partition>(label).part(0);
}

}  // namespace

WeightTable iterate_branch(const GroupType& group, const Label& lambda) {
  require_in_k_hat(group, lambda);
  std::map<std::pair<int, Label>, WeightTable> memo;
  std::function<const WeightTable&(int, const Label&)> restrict =
      [&](int rank, const Label& mu) -> const WeightTable& {
    auto key = std::make_pair(rank, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    WeightTable out;
    const auto g = group.with_rank(rank);
    if (rank == 1) {
      out.add({rank_one_weight(g, mu)}, 1);
    } else {
      const auto steps = one_step_branch(g, mu);
      for (const auto& [step, c] : steps.entries()) {
        const auto& [nu, d] = step;
        for (const auto& [prefix, c2] : restrict(rank - 1, nu).entries()) {
          auto w = prefix;
          w.push_back(d);
          out.add(w, c * c2);
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return restrict(group.rank, lambda);
}

AssociatedTriple assoc_symmetry_pair(const Partition& lambda, const Partition& mu, int delta,
                                     int k) {
  if (k < 2) throw ValidationError("associated triple needs k >= 2");
  if (delta != 0 && delta != 1) throw ValidationError("O_1 label must be 0 or 1");
  return {associated_partition(lambda, k), associated_partition(mu, k - 1), 1 - delta};
}

Count ballot_number(int x, int y) {
  if (x < 0 || y < 0 || x < y) return 0;
  Count num = binomial(x + y + 1, y) * (x - y + 1);
  const Count den = x + y + 1;
  if (num % den != 0) throw std::logic_error("ballot number is not integral");
  return num / den;
}

Count multiset_number(int k, int n) {
  if (n < 0 || k < 0) return 0;
  if (n == 0) return 1;
  return binomial(k + n - 1, n);
}

namespace {

// C((a-|delta|)/2 + k-2, k-2): multisets of size (a-|delta|)/2 from k-1 letters.
Count one_row_count(int a, int k, std::span<const int> delta) {
  const int d = a - abs_sum(delta);
  if (d < 0 || d % 2 != 0) return 0;
  return multiset_number(k - 1, d / 2);
}

int signed_sum(std::span<const int> delta) { return std::accumulate(delta.begin(), delta.end(), 0); }

bool entries_within(std::span<const int> delta, int lo, int hi) {
  return std::all_of(delta.begin(), delta.end(), [&](int d) { return d >= lo && d <= hi; });
}

}  // namespace

Count multiplicity_one_row(const GroupType& group, int a, std::span<const int> delta) {
  if (group.family == Family::GeneralLinear)
    throw ValidationError("GL one-row labels take (b, c)");
  if (a < 0) throw ValidationError("row length must be nonnegative");
  require_in_k_hat(group, Partition{a});
  require_weight(group, delta);
  if (group.family == Family::Symplectic) return a == abs_sum(delta) ? 1 : 0;
  return one_row_count(a, group.rank, delta);
}

Count multiplicity_one_row(const GroupType& group, int b, int c, std::span<const int> delta) {
  if (group.family != Family::GeneralLinear) throw ValidationError("(b, c) rows are GL labels");
  if (b < 0 || c < 0) throw ValidationError("row lengths must be nonnegative");
  require_in_k_hat(group, GeneralizedPartition{Partition{b}, Partition{c}});
  require_weight(group, delta);
  if (signed_sum(delta) != b - c) return 0;
  return one_row_count(b + c, group.rank, delta);
}

Count multiplicity_one_column(const GroupType& group, int a, std::span<const int> delta) {
  if (group.family == Family::GeneralLinear)
    throw ValidationError("GL one-column labels take (b, c)");
  if (a < 0 || a > group.rank) throw ValidationError("column length must lie in [0, k]");
  require_weight(group, delta);
  const int k = group.rank;
  const int ad = abs_sum(delta);
  if (group.family == Family::Orthogonal) return a == ad ? 1 : 0;
  if (!entries_within(delta, 0, 1) || a < ad || (a - ad) % 2 != 0) return 0;
  return ballot_number((2 * k - a - ad) / 2, (a - ad) / 2);
}

Count multiplicity_one_column(const GroupType& group, int b, int c, std::span<const int> delta) {
  if (group.family != Family::GeneralLinear) throw ValidationError("(b, c) columns are GL labels");
  if (b < 0 || c < 0 || b + c > group.rank)
    throw ValidationError("column lengths must satisfy b + c <= k");
  require_weight(group, delta);
  const int k = group.rank;
  const int a = b + c;
  const int ad = abs_sum(delta);
  if (!entries_within(delta, -1, 1) || signed_sum(delta) != b - c || a < ad) return 0;
  return ballot_number((2 * k - a - ad) / 2, (a - ad) / 2);
}

std::optional<std::string> stable_range_violation(const GroupType& group, const BlockSpec& blocks,
                                                  const Label& lambda,
                                                  const std::vector<Label>& mus,
                                                  const HoweRank& howe) {
  if (blocks.parts.empty()) throw ValidationError("at least one block is required");
  if (std::any_of(blocks.parts.begin(), blocks.parts.end(), [](int p) { return p < 1; }))
    throw ValidationError("block sizes must be positive");
  if (blocks.total() != group.rank)
    throw ValidationError("block sizes must sum to the rank of " + group.name());
  if (static_cast<int>(mus.size()) != blocks.count())
    throw ValidationError("need one subgroup label per block");
  require_in_k_hat(group, lambda);
  for (size_t i = 0; i < mus.size(); ++i)
    require_in_k_hat(group.with_rank(blocks.parts[i]), mus[i]);

  const int m = blocks.min_part();
  const std::string mtxt = std::to_string(m);
  if (group.family == Family::GeneralLinear) {
    const int p = howe.p, q = howe.q;
    if (p < 1 || q < 1) throw ValidationError("p and q must be positive");
    if (p + q > 1 + m)
      return "p + q <= 1 + min_i k_i fails: " + std::to_string(p + q) + " > " +
             std::to_string(1 + m);
    const auto& la = std::get<GeneralizedPartition>(lambda);
    if (la.plus.length() > p) return "l(lambda+) <= p fails";
    if (la.minus.length() > q) return "l(lambda-) <= q fails";
    for (const auto& mu : mus) {
      const auto& g = std::get<GeneralizedPartition>(mu);
      if (g.plus.length() > p) return "l(mu_i+) <= p fails";
      if (g.minus.length() > q) return "l(mu_i-) <= q fails";
    }
    return std::nullopt;
  }
  const int n = howe.n;
  if (n < 1) throw ValidationError("n must be positive");
  if (group.family == Family::Orthogonal && 2 * n > 1 + m)
    return "n <= (1 + min_i k_i)/2 fails: n = " + std::to_string(n) + ", min_i k_i = " + mtxt;
  if (group.family == Family::Symplectic && n > 1 + m)
    return "n <= 1 + min_i k_i fails: n = " + std::to_string(n) + ", min_i k_i = " + mtxt;
  if (std::get<Partition>(lambda).length() > n) return "l(lambda) <= n fails";
  for (const auto& mu : mus)
    if (std::get<Partition>(mu).length() > n) return "l(mu_i) <= n fails";
  return std::nullopt;
}

bool stable_range_ok(const GroupType& group, const BlockSpec& blocks, const Label& lambda,
                     const std::vector<Label>& mus, const HoweRank& howe) {
  return !stable_range_violation(group, blocks, lambda, mus, howe).has_value();
}

namespace {

// All tuples (nu_1, ..., nu_count) of partitions admitted by `keep`, with
// sizes summing to budget and each length at most max_len.
void for_each_nu_tuple(int count, int budget, int max_len,
                       const std::function<bool(const Partition&)>& keep,
                       std::vector<Partition>& prefix,
                       const std::function<void(const std::vector<Partition>&)>& visit) {
  if (count == 0) {
    if (budget == 0) visit(prefix);
    return;
  }
  const int lo = count == 1 ? budget : 0;
  for (int s = lo; s <= budget; ++s) {
    for (const auto& nu : partitions_of(s, max_len)) {
      if (!keep(nu)) continue;
      prefix.push_back(nu);
      for_each_nu_tuple(count - 1, budget - s, max_len, keep, prefix, visit);
      prefix.pop_back();
    }
  }
}

}  // namespace

Count stable_branch(const GroupType& group, const BlockSpec& blocks, const Label& lambda,
                    const std::vector<Label>& mus, const HoweRank& howe) {
  if (auto why = stable_range_violation(group, blocks, lambda, mus, howe))
    throw StableRangeError("outside the stable range: " + *why);
  const int r = blocks.count();
  Count total = 0;
  std::vector<Partition> prefix;

  if (group.family == Family::GeneralLinear) {
    const auto& la = std::get<GeneralizedPartition>(lambda);
    std::vector<Partition> plus, minus;
    int bp = la.plus.size(), bm = la.minus.size();
    for (const auto& mu : mus) {
      const auto& g = std::get<GeneralizedPartition>(mu);
      plus.push_back(g.plus);
      minus.push_back(g.minus);
      bp -= g.plus.size();
      bm -= g.minus.size();
    }
    if (bp < 0 || bp != bm) return 0;
    const int len = std::min(howe.p, howe.q);
    for_each_nu_tuple(
        r - 1, bp, len, [](const Partition&) { return true; }, prefix,
        [&](const std::vector<Partition>& nus) {
          auto fp = plus, fm = minus;
          fp.insert(fp.end(), nus.begin(), nus.end());
          fm.insert(fm.end(), nus.begin(), nus.end());
          const Count cp = generalized_lr(la.plus, fp);
          if (cp != 0) total += cp * generalized_lr(la.minus, fm);
        });
    return total;
  }

  const auto& la = std::get<Partition>(lambda);
  std::vector<Partition> factors;
  int budget = la.size();
  for (const auto& mu : mus) {
    factors.push_back(std::get<Partition>(mu));
    budget -= factors.back().size();
  }
  if (budget < 0) return 0;
  const bool orthogonal = group.family == Family::Orthogonal;
  for_each_nu_tuple(
      r - 1, budget, howe.n,
      [orthogonal](const Partition& nu) {
        return orthogonal ? has_even_rows(nu) : has_even_columns(nu);
      },
      prefix,
      [&](const std::vector<Partition>& nus) {
        auto f = factors;
        f.insert(f.end(), nus.begin(), nus.end());
        total += generalized_lr(la, f, howe.n);
      });
  return total;
}

}  // namespace kbranch
