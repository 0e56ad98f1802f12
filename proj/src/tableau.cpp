#include "kbranch/tableau.hpp"

#include <algorithm>

#include "kbranch/count.hpp"

namespace kbranch {

Tableau::Tableau(SkewShape shape, Alphabet alphabet)
    : shape_(std::move(shape)), alphabet_(alphabet) {
  rows_.resize(static_cast<size_t>(shape_.rows()));
  for (int r = 0; r < shape_.rows(); ++r)
    rows_[static_cast<size_t>(r)].assign(
        static_cast<size_t>(shape_.outer().part(r) - shape_.inner().part(r)), 0);
}

Tableau make_tableau(SkewShape shape, Alphabet alphabet, std::vector<std::vector<int>> rows) {
  Tableau t(std::move(shape), alphabet);
  if (static_cast<int>(rows.size()) != t.shape().rows())
    throw ValidationError("tableau row count does not match its shape");
  for (int r = 0; r < t.shape().rows(); ++r) {
    const auto& row = rows[static_cast<size_t>(r)];
    if (static_cast<int>(row.size()) != static_cast<int>(t.row(r).size()))
      throw ValidationError("tableau row length does not match its shape");
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1 || row[j] > alphabet.size)
        throw ValidationError("tableau entry outside the alphabet");
      t.set(r, t.first_column(r) + static_cast<int>(j), row[j]);
    }
  }
  return t;
}

bool is_semistandard(const Tableau& t) {
  const auto& inner = t.shape().inner();
  const auto& outer = t.shape().outer();
  for (int r = 0; r < t.shape().rows(); ++r) {
    for (int c = inner.part(r); c < outer.part(r); ++c) {
      const int v = t.at(r, c);
      if (v < 1 || v > t.alphabet().size) return false;
      if (c > inner.part(r) && t.at(r, c - 1) > v) return false;
      if (r > 0 && c >= inner.part(r - 1) && t.at(r - 1, c) >= v) return false;
    }
  }
  return true;
}

std::vector<int> word(const Tableau& t) {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(t.cell_count()));
  for (int r = 0; r < t.shape().rows(); ++r) {
    auto row = t.row(r);
    w.insert(w.end(), row.rbegin(), row.rend());
  }
  return w;
}

bool is_lattice_word(std::span<const int> w, int alphabet_size) {
  std::vector<int> counts(static_cast<size_t>(alphabet_size) + 2, 0);
  for (int s : w) {
    if (s < 1 || s > alphabet_size) return false;
    ++counts[static_cast<size_t>(s)];
    if (s > 1 && counts[static_cast<size_t>(s)] > counts[static_cast<size_t>(s - 1)]) return false;
  }
  return true;
}

bool is_lr_tableau(const Tableau& t) {
  const auto w = word(t);
  return is_lattice_word(w, t.alphabet().size);
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> counts(static_cast<size_t>(t.alphabet().size), 0);
  for (int r = 0; r < t.shape().rows(); ++r)
    for (int s : t.row(r))
      if (s >= 1) ++counts[static_cast<size_t>(s - 1)];
  return counts;
}

namespace {

struct Cell {
  int row;
  int col;
};

class Enumerator {
 public:
  Enumerator(const SkewShape& shape, const Alphabet& alphabet, const CellFilter& filter,
             const TableauVisitor& visit)
      : t_(shape, alphabet), filter_(filter), visit_(visit) {
    for (int r = 0; r < shape.rows(); ++r)
      for (int c = shape.inner().part(r); c < shape.outer().part(r); ++c) cells_.push_back({r, c});
  }

  bool run() { return fill(0); }

 private:
  bool fill(size_t idx) {
    if (idx == cells_.size()) return visit_(t_);
    const auto [r, c] = cells_[idx];
    const auto& inner = t_.shape().inner();
    int lo = 1;
    if (c > inner.part(r)) lo = std::max(lo, t_.at(r, c - 1));
    if (r > 0 && c >= inner.part(r - 1)) lo = std::max(lo, t_.at(r - 1, c) + 1);
    for (int s = lo; s <= t_.alphabet().size; ++s) {
      t_.set(r, c, s);
      if (filter_ && !filter_(t_, r, c)) continue;
      if (!fill(idx + 1)) {
        t_.set(r, c, 0);
        return false;
      }
    }
    t_.set(r, c, 0);
    return true;
  }

  Tableau t_;
  std::vector<Cell> cells_;
  const CellFilter& filter_;
  const TableauVisitor& visit_;
};

}  // namespace

bool for_each_ssyt(const SkewShape& shape, const Alphabet& alphabet, const CellFilter& filter,
                   const TableauVisitor& visit) {
  return Enumerator(shape, alphabet, filter, visit).run();
}

std::uint64_t count_ssyt(const SkewShape& shape, const Alphabet& alphabet,
                         const CellFilter& filter) {
  std::uint64_t n = 0;
  for_each_ssyt(shape, alphabet, filter, [&](const Tableau&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<Tableau> collect_ssyt(const SkewShape& shape, const Alphabet& alphabet,
                                  const CellFilter& filter) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, alphabet, filter, [&](const Tableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

CellFilter lr_filter(std::span<const int> target_content) {
  std::vector<int> target(target_content.begin(), target_content.end());
  return [target](const Tableau& t, int r, int c) {
    const int s = t.at(r, c);
    if (s > static_cast<int>(target.size())) return false;
    // running count of s, row-major up to (r, c)
    int count = 0;
    for (int rr = 0; rr <= r; ++rr) {
      auto row = t.row(rr);
      const int upto = rr < r ? static_cast<int>(row.size()) : c - t.first_column(r) + 1;
      for (int j = 0; j < upto; ++j)
        if (row[static_cast<size_t>(j)] == s) ++count;
    }
    if (count > target[static_cast<size_t>(s - 1)]) return false;
    if (c + 1 < t.shape().outer().part(r)) return true;
    // row r complete: the word through row r must be a lattice word
    std::vector<int> w;
    for (int rr = 0; rr <= r; ++rr) {
      auto row = t.row(rr);
      w.insert(w.end(), row.rbegin(), row.rend());
    }
    return is_lattice_word(w, t.alphabet().size);
  };
}

std::vector<Tableau> lr_tableaux(const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
  if (!contains(lambda, mu) || lambda.size() != mu.size() + nu.size()) return {};
  SkewShape shape(lambda, mu);
  const auto target = nu.vec();
  return collect_ssyt(shape, Alphabet::plain(nu.length()), lr_filter(target));
}

}  // namespace kbranch
