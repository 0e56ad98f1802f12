#include "kbranch/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "kbranch/branching.hpp"
#include "kbranch/checks.hpp"
#include "kbranch/lr.hpp"
#include "kbranch/oracles.hpp"
#include "kbranch/text.hpp"

namespace kbranch {

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kSelftestFailed = 1, kParse = 2, kValidation = 3, kStableRange = 4 };

struct Options {
  std::string group, lambda, weight, blocks, mu, nu;
  std::optional<int> n, p, q;
  bool list = false;
  std::string format = "json";
  std::string level = "quick";
};

// What a command produced: JSON result plus the equivalent TSV rows.
struct Response {
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::vector<std::string>> rows;
  int code = kOk;
};

Json tableau_json(const KTableau& t) {
  auto parts = text::format_k_tableau(t);
  if (parts.size() == 1) return parts[0];
  return Json(parts);
}

std::string tableau_tsv(const KTableau& t) {
  auto parts = text::format_k_tableau(t);
  return parts.size() == 1 ? parts[0] : parts[0] + ";" + parts[1];
}

GroupType group_arg(const Options& o) {
  if (o.group.empty()) throw ValidationError("--group is required");
  return text::parse_group(o.group);
}

Label label_arg(const GroupType& g, const std::string& s) {
  Label la = text::parse_label(g, s);
  if (!in_k_hat(g, la)) throw ValidationError("lambda=" + s + " is not a label for " + g.name());
  return la;
}

WeightVector weight_arg(const GroupType& g, const std::string& s) {
  auto d = text::parse_int_list(s);
  if (!weight_vector_valid(g, d))
    throw ValidationError("weight " + s + " is not valid for the minimal subgroup of " + g.name());
  return d;
}

Response run_branch(const Options& o) {
  Response r;
  const auto g = group_arg(o);
  const auto la = label_arg(g, o.lambda);
  r.inputs["group"] = g.name();
  r.inputs["lambda"] = text::format_label(g, la);
  if (!o.weight.empty()) {
    const auto d = weight_arg(g, o.weight);
    r.inputs["weight"] = text::format_int_list(d);
    r.inputs["list"] = o.list;
    const Count c = k_tableau_count(g, la, d);
    r.result["multiplicity"] = to_string(c);
    std::vector<std::string> row{text::format_int_list(d), to_string(c)};
    if (o.list) {
      Json ts = Json::array();
      for (const auto& t : enumerate_k_tableaux(g, la, d)) {
        ts.push_back(tableau_json(t));
        row.push_back(tableau_tsv(t));
      }
      r.result["tableaux"] = ts;
    }
    r.rows.push_back(row);
    return r;
  }
  r.inputs["list"] = o.list;
  const auto table = k_tableau_table(g, la);
  Json entries = Json::object();
  for (const auto& [d, c] : table.entries()) {
    entries[text::format_int_list(d)] = to_string(c);
    r.rows.push_back({text::format_int_list(d), to_string(c)});
  }
  r.result["table"] = entries;
  if (o.list) {
    Json lists = Json::object();
    size_t i = 0;
    for (const auto& [d, c] : table.entries()) {
      Json ts = Json::array();
      for (const auto& t : enumerate_k_tableaux(g, la, d)) {
        ts.push_back(tableau_json(t));
        r.rows[i].push_back(tableau_tsv(t));
      }
      lists[text::format_int_list(d)] = ts;
      ++i;
    }
    r.result["tableaux"] = lists;
  }
  return r;
}

Response run_tableaux(const Options& o) {
  Response r;
  const auto g = group_arg(o);
  const auto la = label_arg(g, o.lambda);
  if (o.weight.empty()) throw ValidationError("--weight is required");
  const auto d = weight_arg(g, o.weight);
  r.inputs["group"] = g.name();
  r.inputs["lambda"] = text::format_label(g, la);
  r.inputs["weight"] = text::format_int_list(d);
  Json ts = Json::array();
  for (const auto& t : enumerate_k_tableaux(g, la, d)) {
    ts.push_back(tableau_json(t));
    r.rows.push_back(text::format_k_tableau(t));
  }
  r.result["count"] = std::to_string(ts.size());
  r.result["tableaux"] = ts;
  return r;
}

Response run_stable_branch(const Options& o) {
  Response r;
  const auto g = group_arg(o);
  if (o.blocks.empty()) throw ValidationError("--blocks is required");
  const BlockSpec blocks{text::parse_int_list(o.blocks)};
  for (int b : blocks.parts)
    if (b < 1) throw ValidationError("block sizes must be positive");
  if (blocks.parts.empty() || blocks.total() != g.rank)
    throw ValidationError("block sizes must sum to k=" + std::to_string(g.rank));
  const auto la = label_arg(g, o.lambda);
  std::vector<GroupType> factors;
  for (int b : blocks.parts) factors.push_back(g.with_rank(b));
  const auto mus = text::parse_label_list(factors, o.mu);
  HoweRank howe;
  if (g.family == Family::GeneralLinear) {
    if (!o.p || !o.q) throw ValidationError("GL needs --p and --q");
    howe = HoweRank::pair(*o.p, *o.q);
  } else {
    if (!o.n) throw ValidationError(g.name() + " needs --n");
    howe = HoweRank::single(*o.n);
  }
  r.inputs["group"] = g.name();
  r.inputs["blocks"] = text::format_int_list(blocks.parts);
  r.inputs["lambda"] = text::format_label(g, la);
  r.inputs["mu"] = text::format_label_list(factors, mus);
  if (g.family == Family::GeneralLinear) {
    r.inputs["p"] = howe.p;
    r.inputs["q"] = howe.q;
  } else {
    r.inputs["n"] = howe.n;
  }
  const Count c = stable_branch(g, blocks, la, mus, howe);
  r.result["multiplicity"] = to_string(c);
  r.rows.push_back({text::format_label_list(factors, mus), to_string(c)});
  return r;
}

Response run_lrc(const Options& o) {
  Response r;
  const auto la = text::parse_partition(o.lambda);
  const auto mu = text::parse_partition(o.mu);
  const auto nu = text::parse_partition(o.nu);
  r.inputs["lambda"] = text::format_partition(la);
  r.inputs["mu"] = text::format_partition(mu);
  r.inputs["nu"] = text::format_partition(nu);
  r.inputs["list"] = o.list;
  const Count c = lr_coefficient(la, mu, nu);
  r.result["coefficient"] = to_string(c);
  std::vector<std::string> row{text::format_partition(la), to_string(c)};
  if (o.list) {
    Json ts = Json::array();
    for (const auto& t : lr_tableaux(la, mu, nu)) {
      std::string w;
      for (int x : word(t)) w += std::to_string(x);
      ts.push_back(Json{{"tableau", text::format_tableau(t)}, {"word", w}});
      row.push_back(text::format_tableau(t));
    }
    r.result["tableaux"] = ts;
  }
  r.rows.push_back(row);
  return r;
}

Response run_dim(const Options& o) {
  Response r;
  const auto g = group_arg(o);
  const auto la = label_arg(g, o.lambda);
  r.inputs["group"] = g.name();
  r.inputs["lambda"] = text::format_label(g, la);
  const Count d = oracles::classical_dimension(g, la);
  r.result["dimension"] = to_string(d);
  r.rows.push_back({text::format_label(g, la), to_string(d)});
  return r;
}

Response run_selftest(const Options& o, std::ostream& err) {
  Response r;
  checks::Level level;
  if (o.level == "quick")
    level = checks::Level::Quick;
  else if (o.level == "full")
    level = checks::Level::Full;
  else
    throw ParseError("--level must be quick or full");
  r.inputs["level"] = o.level;
  bool all = true;
  Json list = Json::array();
  for (const auto& c : checks::run_suite(level)) {
    Json j{{"name", c.name}, {"passed", c.passed}, {"instances", c.instances}};
    if (!c.passed) {
      j["counterexample"] = c.counterexample;
      err << "FAIL " << c.name << ": " << c.counterexample << "\n";
    }
    list.push_back(j);
    r.rows.push_back({c.name, c.passed ? "PASS" : "FAIL", std::to_string(c.instances), c.counterexample});
    all = all && c.passed;
  }
  r.result["passed"] = all;
  r.result["checks"] = list;
  if (!all) r.code = kSelftestFailed;
  return r;
}

void emit(std::ostream& out, const std::string& format, const std::string& command, const Response& r,
          double elapsed_ms) {
  if (format == "tsv") {
    for (const auto& row : r.rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << "\n";
    }
    return;
  }
  Json doc;
  doc["command"] = command;
  doc["inputs"] = r.inputs;
  doc["result"] = r.result;
  doc["elapsed_ms"] = elapsed_ms;
  doc["version"] = kVersion;
  out << doc.dump(2) << "\n";
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& format, const std::string& command,
                const char* kind, const std::string& message) {
  err << "error: " << message << "\n";
  if (format != "json") return;
  Json doc;
  doc["command"] = command;
  doc["error"] = Json{{"kind", kind}, {"message", message}};
  doc["version"] = kVersion;
  out << doc.dump(2) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching multiplicities for O_k, GL_k and Sp_2k", "kbranch"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "O<k>, GL<k> or Sp<2k>")->required();
  };

  auto* branch = app.add_subcommand("branch", "multiplicity of a minimal-subgroup weight, or the full table");
  add_group(branch);
  branch->add_option("--lambda", o.lambda, "label, e.g. 2,2 or 2,1,-2,-2")->required();
  branch->add_option("--weight", o.weight, "weight vector; omit for the whole table");
  branch->add_flag("--list", o.list, "also list the tableaux");
  add_format(branch);

  auto* stable = app.add_subcommand("stable-branch", "stable branching to a block-diagonal subgroup");
  add_group(stable);
  stable->add_option("--blocks", o.blocks, "block sizes, e.g. 1,1,1")->required();
  stable->add_option("--lambda", o.lambda)->required();
  stable->add_option("--mu", o.mu, "one label per block, separated by ';'")->required();
  stable->add_option("--n", o.n, "Howe rank for O and Sp");
  stable->add_option("--p", o.p, "Howe rank p for GL");
  stable->add_option("--q", o.q, "Howe rank q for GL");
  add_format(stable);

  auto* tableaux = app.add_subcommand("tableaux", "list the tableaux of one weight");
  add_group(tableaux);
  tableaux->add_option("--lambda", o.lambda)->required();
  tableaux->add_option("--weight", o.weight)->required();
  add_format(tableaux);

  auto* lrc = app.add_subcommand("lrc", "Littlewood-Richardson coefficient");
  lrc->add_option("--lambda", o.lambda)->required();
  lrc->add_option("--mu", o.mu)->required();
  lrc->add_option("--nu", o.nu)->required();
  lrc->add_flag("--list", o.list, "also list the LR tableaux");
  add_format(lrc);

  auto* dim = app.add_subcommand("dim", "dimension of an irreducible representation");
  add_group(dim);
  dim->add_option("--lambda", o.lambda)->required();
  add_format(dim);

  auto* selftest = app.add_subcommand("selftest", "cross-check every computation path");
  selftest->add_option("--level", o.level, "quick or full");
  add_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Response r;
    if (chosen == branch)
      r = run_branch(o);
    else if (chosen == stable)
      r = run_stable_branch(o);
    else if (chosen == tableaux)
      r = run_tableaux(o);
    else if (chosen == lrc)
      r = run_lrc(o);
    else if (chosen == dim)
      r = run_dim(o);
    else
      r = run_selftest(o, err);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(out, o.format, command, r, ms);
    return r.code;
  } catch (const ParseError& e) {
    emit_error(out, err, o.format, command, "parse", e.what());
    return kParse;
  } catch (const ValidationError& e) {
    emit_error(out, err, o.format, command, "validation", e.what());
    return kValidation;
  } catch (const StableRangeError& e) {
    emit_error(out, err, o.format, command, "stable_range", e.what());
    return kStableRange;
  }
}

}  // namespace kbranch
