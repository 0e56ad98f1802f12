#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "kbranch/partition.hpp"

namespace kbranch {

// Totally ordered alphabet 1..size. A barred alphabet of rank k has size 2k
// and reads 1 < 1~ < 2 < 2~ < ... : symbol 2i-1 is i, symbol 2i is i-bar.
struct Alphabet {
  int size = 0;
  bool barred = false;

  static Alphabet plain(int n) { return {n, false}; }
  static Alphabet symplectic(int k) { return {2 * k, true}; }

  static int unbarred_symbol(int i) { return 2 * i - 1; }
  static int barred_symbol(int i) { return 2 * i; }
  // Index i of symbol s in a barred alphabet, ignoring the bar.
  static int base_index(int s) { return (s + 1) / 2; }
  static bool is_barred(int s) { return s % 2 == 0; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Filling of a skew shape. Cells not yet filled hold 0.
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, Alphabet alphabet);

  const SkewShape& shape() const { return shape_; }
  const Alphabet& alphabet() const { return alphabet_; }

  // Entries of skew row r, left to right (columns inner_r .. outer_r - 1).
  std::span<const int> row(int r) const { return rows_[static_cast<size_t>(r)]; }
  int first_column(int r) const { return shape_.inner().part(r); }
  // Entry at absolute column c of row r.
  int at(int r, int c) const { return rows_[static_cast<size_t>(r)][static_cast<size_t>(c - first_column(r))]; }
  void set(int r, int c, int symbol) {
    rows_[static_cast<size_t>(r)][static_cast<size_t>(c - first_column(r))] = symbol;
  }
  int cell_count() const { return shape_.size(); }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  Alphabet alphabet_;
  std::vector<std::vector<int>> rows_;
};

// Builds a tableau from explicit rows; throws ValidationError if the rows do not
// match the skew shape or entries fall outside the alphabet.
Tableau make_tableau(SkewShape shape, Alphabet alphabet, std::vector<std::vector<int>> rows);

bool is_semistandard(const Tableau& t);

// Reading word: rows top to bottom, each row right to left.
std::vector<int> word(const Tableau& t);

// Every prefix of the word has #(i+1) <= #i for all adjacent symbol pairs.
bool is_lattice_word(std::span<const int> w, int alphabet_size);
bool is_lr_tableau(const Tableau& t);

// Symbol frequencies indexed 0..size-1 (symbol s at index s-1).
std::vector<int> content(const Tableau& t);

// Called after each cell (row, col) is assigned in row-major order; returning
// false prunes every completion of the current partial filling.
using CellFilter = std::function<bool(const Tableau& partial, int row, int col)>;
// Receives each complete filling; returning false stops the enumeration.
using TableauVisitor = std::function<bool(const Tableau& t)>;

// Enumerates every semistandard filling of `shape` over `alphabet` exactly once,
// filling cells row-major and trying symbols in increasing order, so output is
// lexicographic in the row-major entry sequence. Returns false if stopped early.
bool for_each_ssyt(const SkewShape& shape, const Alphabet& alphabet, const CellFilter& filter,
                   const TableauVisitor& visit);

std::uint64_t count_ssyt(const SkewShape& shape, const Alphabet& alphabet,
                         const CellFilter& filter = {});

std::vector<Tableau> collect_ssyt(const SkewShape& shape, const Alphabet& alphabet,
                                  const CellFilter& filter = {});

// Prefix-monotone filter for LR enumeration with a target content: bounds the
// running symbol counts and checks the lattice condition on each completed row.
CellFilter lr_filter(std::span<const int> target_content);

// LR tableaux of shape lambda/mu with content nu (empty if mu ⊄ lambda).
std::vector<Tableau> lr_tableaux(const Partition& lambda, const Partition& mu,
                                 const Partition& nu);

}  // namespace kbranch
