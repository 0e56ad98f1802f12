#include "kbranch/text.hpp"

#include <charconv>

namespace kbranch::text {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view s) {
  s = trim(s);
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& piece : split(s, ',')) out.push_back(parse_int(piece));
  return out;
}

std::string format_int_list(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Partition parse_partition(std::string_view s) {
  s = trim(s);
  if (s.empty() || s == "0") return {};
  auto v = parse_int_list(s);
  for (int x : v)
    if (x < 0) throw ValidationError("partition parts must be non-negative: " + std::string(s));
  return Partition(v);
}

std::string format_partition(const Partition& p) { return p.empty() ? "0" : format_int_list(p.vec()); }

GeneralizedPartition parse_generalized(std::string_view s, int rank) {
  s = trim(s);
  if (auto bar = s.find('|'); bar != std::string_view::npos) {
    GeneralizedPartition g{parse_partition(s.substr(0, bar)), parse_partition(s.substr(bar + 1))};
    if (rank >= 0 && g.min_rank() > rank)
      throw ValidationError("generalized partition " + std::string(s) + " needs rank " +
                            std::to_string(g.min_rank()));
    return g;
  }
  if (s.empty() || s == "0") return {};
  auto v = parse_int_list(s);
  if (rank >= 0 && static_cast<int>(v.size()) != rank)
    throw ValidationError("expected " + std::to_string(rank) + " entries in '" + std::string(s) + "'");
  return GeneralizedPartition::from_vector(v);
}

std::string format_generalized(const GeneralizedPartition& g, int rank) {
  return format_int_list(g.to_vector(rank));
}

GroupType parse_group(std::string_view s) {
  s = trim(s);
  auto numeral = [&](size_t prefix) {
    auto rest = s.substr(prefix);
    if (rest.empty() || rest.front() == '-' || rest.front() == '+')
      throw ParseError("bad group: '" + std::string(s) + "'");
    return parse_int(rest);
  };
  GroupType g;
  if (s.starts_with("GL")) {
    g = GroupType::general_linear(numeral(2));
  } else if (s.starts_with("Sp")) {
    const int n = numeral(2);
    if (n % 2 != 0) throw ValidationError("Sp numeral must be even (it is 2k): " + std::string(s));
    g = GroupType::symplectic(n / 2);
  } else if (s.starts_with("O")) {
    g = GroupType::orthogonal(numeral(1));
  } else {
    throw ParseError("unknown group: '" + std::string(s) + "' (expected O<k>, GL<k> or Sp<2k>)");
  }
  if (g.rank < 1) throw ValidationError("group rank must be positive: " + std::string(s));
  return g;
}

Label parse_label(const GroupType& group, std::string_view s) {
  if (group.family == Family::GeneralLinear) return parse_generalized(s, group.rank);
  return parse_partition(s);
}

std::string format_label(const GroupType& group, const Label& label) {
  if (group.family == Family::GeneralLinear)
    return format_generalized(std::get<GeneralizedPartition>(label), group.rank);
  return format_partition(std::get<Partition>(label));
}

std::vector<Label> parse_label_list(const std::vector<GroupType>& groups, std::string_view s) {
  auto pieces = split(s, ';');
  if (pieces.size() != groups.size())
    throw ValidationError("expected " + std::to_string(groups.size()) + " labels separated by ';', got " +
                          std::to_string(pieces.size()));
  std::vector<Label> out;
  for (size_t i = 0; i < pieces.size(); ++i) out.push_back(parse_label(groups[i], pieces[i]));
  return out;
}

std::string format_label_list(const std::vector<GroupType>& groups, const std::vector<Label>& labels) {
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ';';
    out += format_label(groups[i], labels[i]);
  }
  return out;
}

std::string format_symbol(int symbol, const Alphabet& alphabet) {
  if (!alphabet.barred) return std::to_string(symbol);
  auto out = std::to_string(Alphabet::base_index(symbol));
  if (Alphabet::is_barred(symbol)) out += '~';
  return out;
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (int r = 0; r < t.shape().rows(); ++r) {
    if (r) out += '/';
    bool first = true;
    for (int s : t.row(r)) {
      if (!first) out += ',';
      first = false;
      out += format_symbol(s, t.alphabet());
    }
  }
  return out;
}

std::vector<std::vector<int>> parse_tableau_rows(std::string_view s, const Alphabet& alphabet) {
  std::vector<std::vector<int>> rows;
  s = trim(s);
  if (s.empty()) return rows;
  for (const auto& row : split(s, '/')) {
    std::vector<int> entries;
    for (auto cell : split(row, ',')) {
      std::string_view c = trim(cell);
      bool bar = false;
      if (!c.empty() && c.back() == '~') {
        if (!alphabet.barred) throw ParseError("barred entry in an unbarred tableau: " + std::string(c));
        bar = true;
        c.remove_suffix(1);
      }
      const int v = parse_int(c);
      entries.push_back(alphabet.barred ? (bar ? Alphabet::barred_symbol(v) : Alphabet::unbarred_symbol(v))
                                        : v);
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

std::vector<std::string> format_k_tableau(const KTableau& t) {
  std::vector<std::string> out{format_tableau(t.tableau)};
  if (t.minus) out.push_back(format_tableau(*t.minus));
  return out;
}

}  // namespace kbranch::text
