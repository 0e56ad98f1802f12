#include "kbranch/checks.hpp"

#include <chrono>
#include <functional>

#include "kbranch/lr.hpp"
#include "kbranch/oracles.hpp"
#include "kbranch/text.hpp"

namespace kbranch::checks {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { report_.name = std::move(name); }

  // Counts one instance; keeps the first failure only.
  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++report_.instances;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
    return ok;
  }
  bool failed() const { return !report_.passed; }

  CheckReport finish() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return report_;
  }

 private:
  CheckReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string str(const Count& c) { return to_string(c); }

std::string show(const GroupType& g, const Label& l) { return g.name() + " lambda=" + text::format_label(g, l); }

std::string weight(const WeightVector& d) { return text::format_int_list(d); }

std::vector<GroupType> groups_for(const EquivalenceScale& scale) {
  std::vector<GroupType> out;
  for (int k = 1; k <= scale.max_orthogonal_rank; ++k) out.push_back(GroupType::orthogonal(k));
  for (int k = 1; k <= scale.max_general_linear_rank; ++k) out.push_back(GroupType::general_linear(k));
  for (int k = 1; k <= scale.max_symplectic_rank; ++k) out.push_back(GroupType::symplectic(k));
  return out;
}

int label_size(const Label& l) {
  if (auto p = std::get_if<Partition>(&l)) return p->size();
  const auto& g = std::get<GeneralizedPartition>(l);
  return g.plus.size() + g.minus.size();
}

// Weights the tableau table may be compared on: every weight that can carry
// a nonzero multiplicity plus a margin of forced zeros.
std::vector<WeightVector> candidate_weights(const GroupType& group, const Label& lambda) {
  const int size = label_size(lambda);
  auto all = weights_up_to(group, size);
  if (group.family != Family::GeneralLinear) return all;
  const auto& g = std::get<GeneralizedPartition>(lambda);
  std::vector<WeightVector> out;
  for (auto& d : all) {
    int sum = 0;
    for (int x : d) sum += x;
    if (sum == g.plus.size() - g.minus.size()) out.push_back(std::move(d));
  }
  return out;
}

bool length_ok(const Label& l, int n, int p, int q) {
  if (auto part = std::get_if<Partition>(&l)) return part->length() <= n;
  const auto& g = std::get<GeneralizedPartition>(l);
  return g.plus.length() <= p && g.minus.length() <= q;
}

bool label_inside(const Label& outer, const Label& inner) {
  if (auto p = std::get_if<Partition>(&outer)) return contains(*p, std::get<Partition>(inner));
  const auto& a = std::get<GeneralizedPartition>(outer);
  const auto& b = std::get<GeneralizedPartition>(inner);
  return contains(a.plus, b.plus) && contains(a.minus, b.minus);
}

Label rank_one_label(const GroupType& group, int d) {
  if (group.family == Family::GeneralLinear)
    return d >= 0 ? GeneralizedPartition{Partition{d}, {}} : GeneralizedPartition{{}, Partition{-d}};
  return d == 0 ? Partition{} : Partition{d};
}

}  // namespace

Count Subjects::lr_default(const Partition& la, const Partition& mu, const Partition& nu) {
  return lr_coefficient(la, mu, nu);
}

std::vector<Label> labels_up_to(const GroupType& group, int max_size) {
  std::vector<Label> out;
  for (int n = 0; n <= max_size; ++n) {
    if (group.family != Family::GeneralLinear) {
      for (const auto& p : partitions_of(n))
        if (in_k_hat(group, p)) out.emplace_back(p);
      continue;
    }
    for (int a = n; a >= 0; --a)
      for (const auto& plus : partitions_of(a, group.rank))
        for (const auto& minus : partitions_of(n - a, group.rank - plus.length()))
          out.emplace_back(GeneralizedPartition{plus, minus});
  }
  return out;
}

std::vector<WeightVector> weights_up_to(const GroupType& group, int max_abs_sum) {
  std::vector<WeightVector> out;
  WeightVector cur(static_cast<size_t>(group.rank), 0);
  const int lo = group.family == Family::GeneralLinear ? -max_abs_sum : 0;
  const int hi = group.family == Family::Orthogonal ? 1 : max_abs_sum;
  std::function<void(size_t, int)> rec = [&](size_t i, int budget) {
    if (i == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (int x = lo; x <= hi; ++x) {
      if (group.family != Family::Orthogonal && std::abs(x) > budget) continue;
      cur[i] = x;
      rec(i + 1, budget - std::abs(x));
    }
  };
  rec(0, max_abs_sum);
  return out;
}

Count minimal_dimension(const GroupType& group, const WeightVector& delta) {
  Count d = 1;
  if (group.family == Family::Symplectic)
    for (int x : delta) d *= x + 1;
  return d;
}

CheckReport check_lr_oracle(int max_total, const Subjects& s) {
  Recorder rec("lr oracle");
  for (int m = 0; m <= max_total && !rec.failed(); ++m)
    for (int a = 0; a <= m && !rec.failed(); ++a)
      for (const auto& mu : partitions_of(a))
        for (const auto& nu : partitions_of(m - a)) {
          const auto product = oracles::schur_product(mu, nu, m);
          for (const auto& la : partitions_of(m)) {
            auto it = product.find(la);
            const Count want = it == product.end() ? Count(0) : it->second;
            const Count got = s.lr(la, mu, nu);
            rec.expect(got == want, [&] {
              return "lambda=" + text::format_partition(la) + " mu=" + text::format_partition(mu) +
                     " nu=" + text::format_partition(nu) + ": lr_coefficient=" + str(got) +
                     " oracle=" + str(want);
            });
            if (rec.failed()) return rec.finish();
          }
        }
  return rec.finish();
}

CheckReport check_branching_paths(const EquivalenceScale& scale, const Subjects& s) {
  Recorder rec("branching paths");
  for (const auto& g : groups_for(scale))
    for (const auto& la : labels_up_to(g, scale.max_size)) {
      const auto tableaux = s.tableau_table(g, la);
      const auto chains = s.iterated(g, la);
      auto weights = candidate_weights(g, la);
      for (const auto& [d, c] : tableaux.entries()) weights.push_back(d);
      for (const auto& [d, c] : chains.entries()) weights.push_back(d);
      std::sort(weights.begin(), weights.end());
      weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
      for (const auto& d : weights) {
        const Count t = tableaux.at(d);
        const Count i = chains.at(d);
        const Count o = oracles::chain_oracle(g, la, d);
        rec.expect(t == i && t == o, [&] {
          return show(g, la) + " delta=" + weight(d) + ": tableaux=" + str(t) + " iterate=" + str(i) +
                 " chain_oracle=" + str(o);
        });
        if (rec.failed()) return rec.finish();
      }
    }
  return rec.finish();
}

CheckReport check_dimension_identity(const EquivalenceScale& scale, const Subjects& s) {
  Recorder rec("dimension identity");
  for (const auto& g : groups_for(scale))
    for (const auto& la : labels_up_to(g, scale.max_size)) {
      Count sum = 0;
      const auto table = s.tableau_table(g, la);
      for (const auto& [d, c] : table.entries()) sum += c * minimal_dimension(g, d);
      const Count want = oracles::classical_dimension(g, la);
      rec.expect(sum == want, [&] {
        return show(g, la) + ": sum of multiplicities times dimensions=" + str(sum) + " Weyl=" + str(want);
      });
      if (rec.failed()) return rec.finish();
    }
  return rec.finish();
}

CheckReport check_stable_minimal(const EquivalenceScale& scale, const Subjects& s) {
  Recorder rec("stable/minimal consistency");
  for (const auto& g : groups_for(scale)) {
    const int k = g.rank;
    const BlockSpec ones{std::vector<int>(static_cast<size_t>(k), 1)};
    const auto unit = g.with_rank(1);
    for (const auto& la : labels_up_to(g, scale.max_size)) {
      // the stable range for all-ones blocks
      std::vector<HoweRank> ranks;
      if (g.family == Family::Orthogonal) {
        if (!length_ok(la, 1, 0, 0)) continue;
        ranks.push_back(HoweRank::single(1));
      } else if (g.family == Family::Symplectic) {
        for (int n = 1; n <= 2; ++n)
          if (length_ok(la, n, 0, 0)) ranks.push_back(HoweRank::single(n));
      } else {
        if (!length_ok(la, 0, 1, 1)) continue;
        ranks.push_back(HoweRank::pair(1, 1));
      }
      const auto table = s.tableau_table(g, la);
      for (const auto& howe : ranks)
        for (const auto& d : weights_up_to(g, label_size(la) + 1)) {
          std::vector<Label> mus;
          for (int x : d) mus.push_back(rank_one_label(unit, x));
          const Count st = stable_branch(g, ones, la, mus, howe);
          const Count t = table.at(d);
          rec.expect(st == t, [&] {
            return show(g, la) + " delta=" + weight(d) + " n=" + std::to_string(howe.n) +
                   ": stable=" + str(st) + " tableaux=" + str(t);
          });
          if (rec.failed()) return rec.finish();
        }
    }
  }
  return rec.finish();
}

CheckReport check_transitivity(const EquivalenceScale& scale, const Subjects& s) {
  Recorder rec("transitivity");
  std::map<std::pair<std::string, Label>, WeightTable> cache;
  auto table_of = [&](const GroupType& g, const Label& l) -> const WeightTable& {
    auto key = std::make_pair(g.name(), l);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache.emplace(key, s.tableau_table(g, l)).first->second;
  };

  for (const auto& g : groups_for(scale)) {
    const int k = g.rank;
    for (int a = 1; a < k; ++a) {
      const int b = k - a;
      const int slack = 1 + std::min(a, b);
      const BlockSpec blocks{{a, b}};
      const auto ga = g.with_rank(a), gb = g.with_rank(b);
      std::vector<HoweRank> ranks;
      if (g.family == Family::Orthogonal) {
        for (int n = 1; 2 * n <= slack; ++n) ranks.push_back(HoweRank::single(n));
      } else if (g.family == Family::Symplectic) {
        for (int n = 1; n <= slack; ++n) ranks.push_back(HoweRank::single(n));
      } else {
        for (int p = 1; p < slack; ++p)
          for (int q = 1; p + q <= slack; ++q) ranks.push_back(HoweRank::pair(p, q));
      }
      for (const auto& howe : ranks)
        for (const auto& la : labels_up_to(g, scale.max_size)) {
          if (!length_ok(la, howe.n, howe.p, howe.q)) continue;
          const int size = label_size(la);
          WeightTable composed;
          for (const auto& m1 : labels_up_to(ga, size)) {
            if (!length_ok(m1, howe.n, howe.p, howe.q) || !label_inside(la, m1)) continue;
            for (const auto& m2 : labels_up_to(gb, size - label_size(m1))) {
              if (!length_ok(m2, howe.n, howe.p, howe.q) || !label_inside(la, m2)) continue;
              const Count c = stable_branch(g, blocks, la, {m1, m2}, howe);
              if (c == 0) continue;
              for (const auto& [d1, c1] : table_of(ga, m1).entries())
                for (const auto& [d2, c2] : table_of(gb, m2).entries()) {
                  auto d = d1;
                  d.insert(d.end(), d2.begin(), d2.end());
                  composed.add(d, c * c1 * c2);
                }
            }
          }
          const auto& direct = table_of(g, la);
          rec.expect(composed == direct, [&] {
            std::string where;
            for (const auto& [d, c] : direct.entries())
              if (composed.at(d) != c) {
                where = " delta=" + weight(d) + ": composed=" + str(composed.at(d)) + " tableaux=" + str(c);
                break;
              }
            if (where.empty())
              for (const auto& [d, c] : composed.entries())
                if (direct.at(d) != c) {
                  where = " delta=" + weight(d) + ": composed=" + str(c) + " tableaux=0";
                  break;
                }
            std::string howe_text = g.family == Family::GeneralLinear
                                        ? " p=" + std::to_string(howe.p) + " q=" + std::to_string(howe.q)
                                        : " n=" + std::to_string(howe.n);
            return show(g, la) + " blocks=" + std::to_string(a) + "," + std::to_string(b) + howe_text + where;
          });
          if (rec.failed()) return rec.finish();
        }
    }
  }
  return rec.finish();
}

CheckReport check_closed_forms(int max_a, int max_rank, const Subjects& s) {
  Recorder rec("one-row and one-column closed forms");
  for (int k = 1; k <= max_rank; ++k) {
    for (auto family : {Family::Orthogonal, Family::Symplectic}) {
      const GroupType g{family, k};
      for (int a = 0; a <= max_a; ++a)
        for (bool column : {false, true}) {
          if (column && a > k) continue;
          const Partition la = column ? Partition(std::vector<int>(static_cast<size_t>(a), 1)) : Partition{a};
          if (!in_k_hat(g, la)) continue;
          const auto table = s.tableau_table(g, la);
          for (const auto& d : weights_up_to(g, a + 1)) {
            const Count closed = column ? multiplicity_one_column(g, a, d) : multiplicity_one_row(g, a, d);
            const Count t = table.at(d);
            rec.expect(closed == t, [&] {
              return show(g, la) + " delta=" + weight(d) + ": closed form=" + str(closed) + " tableaux=" + str(t);
            });
            if (rec.failed()) return rec.finish();
          }
        }
    }
    const auto g = GroupType::general_linear(k);
    for (int a = 0; a <= max_a; ++a)
      for (int b = a; b >= 0; --b) {
        const int c = a - b;
        for (bool column : {false, true}) {
          GeneralizedPartition la;
          if (column) {
            if (a > k) continue;
            la = {Partition(std::vector<int>(static_cast<size_t>(b), 1)),
                  Partition(std::vector<int>(static_cast<size_t>(c), 1))};
          } else {
            la = {Partition{b}, Partition{c}};
          }
          if (!in_k_hat(g, la)) continue;
          const auto table = s.tableau_table(g, la);
          for (const auto& d : weights_up_to(g, a + 1)) {
            const Count closed =
                column ? multiplicity_one_column(g, b, c, d) : multiplicity_one_row(g, b, c, d);
            const Count t = table.at(d);
            rec.expect(closed == t, [&] {
              return show(g, la) + " delta=" + weight(d) + ": closed form=" + str(closed) + " tableaux=" + str(t);
            });
            if (rec.failed()) return rec.finish();
          }
        }
      }
  }
  return rec.finish();
}

CheckReport check_associated_symmetry(int max_size, int max_rank) {
  Recorder rec("associated-partition symmetry");
  auto strip_rule = [](const Partition& la, const Partition& mu, int delta) {
    return contains(la, mu) && is_strip(SkewShape(la, mu)) && (la.size() - mu.size()) % 2 == delta;
  };
  for (int k = 2; k <= max_rank; ++k) {
    const auto g = GroupType::orthogonal(k);
    const auto lower = GroupType::orthogonal(k - 1);
    for (const auto& l : labels_up_to(g, max_size)) {
      const auto& la = std::get<Partition>(l);
      const auto bar = associated_partition(la, k);
      const auto here = one_step_branch(g, la);
      const auto there = one_step_branch(g, bar);
      for (const auto& m : labels_up_to(lower, std::max(la.size(), bar.size()) + k)) {
        const auto& mu = std::get<Partition>(m);
        for (int delta : {0, 1}) {
          const auto t = assoc_symmetry_pair(la, mu, delta, k);
          const Count lhs = here.at({mu, delta});
          const Count rhs = there.at({t.mu, t.delta});
          const bool p1 = strip_rule(la, mu, delta);
          const bool p2 = strip_rule(t.lambda, t.mu, t.delta);
          rec.expect(t.lambda == bar && lhs == rhs && p1 == p2 && lhs == (p1 ? 1 : 0), [&] {
            return "O" + std::to_string(k) + " lambda=" + text::format_partition(la) +
                   " mu=" + text::format_partition(mu) + " delta=" + std::to_string(delta) +
                   ": b=" + str(lhs) + " associated b=" + str(rhs) + " strip rule " +
                   (p1 ? "holds" : "fails") + " / " + (p2 ? "holds" : "fails");
          });
          if (rec.failed()) return rec.finish();
        }
      }
    }
  }
  return rec.finish();
}

CheckReport check_howe(int max_rank, int max_degree) {
  Recorder rec("graded dimensions");
  using oracles::HoweSetting;
  for (int d = 0; d <= max_degree; ++d)
    for (int p = 1; p <= max_rank; ++p) {
      for (auto setting : {HoweSetting::Symmetric, HoweSetting::Alternating}) {
        const auto r = oracles::howe_graded_dimensions(setting, p, 0, d);
        rec.expect(r.polynomial_side == r.schur_side, [&] {
          return std::string(setting == HoweSetting::Symmetric ? "SM" : "AM") + " n=" + std::to_string(p) +
                 " d=" + std::to_string(d) + ": " + str(r.polynomial_side) + " vs " + str(r.schur_side);
        });
        if (rec.failed()) return rec.finish();
      }
      for (int q = 1; q <= max_rank; ++q) {
        const auto r = oracles::howe_graded_dimensions(HoweSetting::Mixed, p, q, d);
        rec.expect(r.polynomial_side == r.schur_side, [&] {
          return "MM p=" + std::to_string(p) + " q=" + std::to_string(q) + " d=" + std::to_string(d) + ": " +
                 str(r.polynomial_side) + " vs " + str(r.schur_side);
        });
        if (rec.failed()) return rec.finish();
      }
    }
  return rec.finish();
}

CheckReport check_golden(const Subjects& s) {
  Recorder rec("reference values");
  auto equal = [&](const std::string& what, const Count& got, const Count& want) {
    rec.expect(got == want, [&] { return what + ": got " + str(got) + ", expected " + str(want); });
  };
  equal("c(6531; 521, 43)", s.lr({6, 5, 3, 1}, {5, 2, 1}, {4, 3}), 3);

  std::vector<std::string> words;
  for (const auto& t : lr_tableaux({6, 5, 3, 1}, {5, 2, 1}, {4, 3})) {
    std::string w;
    for (int x : word(t)) w += std::to_string(x);
    words.push_back(w);
  }
  rec.expect(words == std::vector<std::string>{"1111222", "1211212", "1211221"},
             [] { return std::string("LR tableau words of 6531/521 with content 43 differ"); });

  struct Example {
    GroupType group;
    Label lambda;
    WeightVector delta;
    Count count;
    std::vector<std::vector<std::string>> tableaux;
  };
  const std::vector<Example> examples = {
      {GroupType::orthogonal(5), Partition{2, 2}, {0, 0, 0, 0, 0}, 5,
       {{"2,2/4,4"}, {"2,2/5,5"}, {"3,3/4,4"}, {"3,3/5,5"}, {"4,4/5,5"}}},
      {GroupType::general_linear(4), GeneralizedPartition::from_vector({2, 1, -2, -2}), {2, -1, -2, 0}, 1,
       {{"1,1/4", "2,3/3,4"}}},
      {GroupType::symplectic(3), Partition{2, 2}, {0, 0, 0}, 3,
       {{"2,2/2~,2~"}, {"2,3/2~,3~"}, {"3,3/3~,3~"}}},
  };
  for (const auto& e : examples) {
    equal(show(e.group, e.lambda) + " delta=" + weight(e.delta), s.tableau_table(e.group, e.lambda).at(e.delta),
          e.count);
    equal(show(e.group, e.lambda) + " delta=" + weight(e.delta) + " by iteration",
          s.iterated(e.group, e.lambda).at(e.delta), e.count);
    std::vector<std::vector<std::string>> listed;
    for (const auto& t : enumerate_k_tableaux(e.group, e.lambda, e.delta)) listed.push_back(text::format_k_tableau(t));
    rec.expect(listed == e.tableaux, [&] { return show(e.group, e.lambda) + ": listed tableaux differ"; });
  }

  const std::vector<Label> zeros(3, Label{Partition{}});
  equal("stable Sp6 blocks=1,1,1 lambda=2,2 n=2",
        stable_branch(GroupType::symplectic(3), {{1, 1, 1}}, Partition{2, 2}, zeros, HoweRank::single(2)), 3);
  return rec.finish();
}

std::vector<CheckReport> run_suite(Level level, const Subjects& s) {
  const bool full = level == Level::Full;
  const EquivalenceScale scale = full ? EquivalenceScale{8, 6, 5, 4} : EquivalenceScale{};
  std::vector<CheckReport> out;
  out.push_back(check_golden(s));
  out.push_back(check_lr_oracle(full ? 10 : 8, s));
  out.push_back(check_branching_paths(scale, s));
  out.push_back(check_dimension_identity(scale, s));
  out.push_back(check_stable_minimal(scale, s));
  out.push_back(check_transitivity(scale, s));
  out.push_back(check_closed_forms(full ? 10 : 8, full ? 7 : 6, s));
  out.push_back(check_associated_symmetry(full ? 8 : 6, full ? 6 : 5));
  out.push_back(check_howe(full ? 5 : 4, full ? 5 : 4));
  return out;
}

}  // namespace kbranch::checks
