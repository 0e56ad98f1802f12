#pragma once

// Text forms used on the command line and in reports.
//   partition            "3,1,1"; "0" or "" is the empty partition
//   generalized          "2,1,-2,-2" (exactly k entries) or "plus|minus", e.g. "2,1|2,2"
//   group                "O5", "GL4", "Sp6" (the Sp numeral is 2k)
//   weight / block list  "2,-1,-2,0"
//   label list           entries separated by ";"
//   tableau              rows separated by "/", entries by ","; barred i prints as "i~"
// Malformed text throws ParseError; well-formed text describing an invalid
// object throws ValidationError.

#include <string>
#include <string_view>
#include <vector>

#include "kbranch/branching.hpp"
#include "kbranch/partition.hpp"
#include "kbranch/tableau.hpp"

namespace kbranch::text {

std::vector<int> parse_int_list(std::string_view s);
std::string format_int_list(const std::vector<int>& v);

Partition parse_partition(std::string_view s);
std::string format_partition(const Partition& p);

// rank < 0 accepts vectors of any length.
GeneralizedPartition parse_generalized(std::string_view s, int rank = -1);
std::string format_generalized(const GeneralizedPartition& g, int rank);

GroupType parse_group(std::string_view s);

Label parse_label(const GroupType& group, std::string_view s);
std::string format_label(const GroupType& group, const Label& label);

// One label per entry; groups[i] types entry i. Entry count must match.
std::vector<Label> parse_label_list(const std::vector<GroupType>& groups, std::string_view s);
std::string format_label_list(const std::vector<GroupType>& groups, const std::vector<Label>& labels);

std::string format_symbol(int symbol, const Alphabet& alphabet);
std::string format_tableau(const Tableau& t);
// Rows of symbols, in the encoding of `alphabet`.
std::vector<std::vector<int>> parse_tableau_rows(std::string_view s, const Alphabet& alphabet);

// One string for O and Sp, two (T+ then T-) for GL.
std::vector<std::string> format_k_tableau(const KTableau& t);

std::vector<std::string> split(std::string_view s, char sep);

}  // namespace kbranch::text
