#pragma once

// Command-line front end: lr, chartable, decompose, branch, verify.
// Exit status: 0 success, 1 verification mismatch, 2 usage or parse error.

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weyld/weyld.hpp"

namespace weyld::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxTableRank = 12;

inline const char* grammar_help() {
  return R"(Text grammar (whitespace between tokens is ignored):
  partition   := '[' ( int ( ',' int )* )? ']'       parts positive, weakly decreasing
                 e.g. [3,1]   [2,2,1]   []
  bipartition := '(' partition ',' partition ')'     e.g. ([3,1],[2])
  label       := bipartition sign?                   character of W_n (type D)
                 sign is '+' or '-'; required when both partitions are equal,
                 ignored otherwise. e.g. ([3],[1])   ([2],[2])+   ([2],[2])-
  class (B)   := '(' partition ',' partition ')'     (positive cycles, negative cycles)
  class (D)   := '(' partition ',' partition ( ',' sign )? ')'
                 sign present exactly for split classes, e.g. ([4],[],+)
The trivial character of W_1 is ([1],[]).
Exit status: 0 ok, 1 verification mismatch, 2 usage/parse error.)";
}

namespace detail {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], row[j].size());
  }
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << "  ";
      out << std::setw(static_cast<int>(widths[j])) << (j == 0 ? std::left : std::right) << row[j];
    }
    out << '\n';
  }
}

template <class Labels, class Classes>
void emit_char_table(std::ostream& out, const std::string& format, const std::string& type, int n,
                     const Labels& labels, const Classes& classes,
                     const std::vector<std::vector<Int>>& values) {
  if (format == "table") {
    std::vector<std::vector<std::string>> rows;
    auto& header = rows.emplace_back();
    header.push_back(type + std::to_string(n));
    for (const auto& c : classes) header.push_back(to_string(c));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto& row = rows.emplace_back();
      row.push_back(to_string(labels[i]));
      for (Int v : values[i]) row.push_back(std::to_string(v));
    }
    print_table(out, rows);
    return;
  }
  ordered_json doc;
  doc["type"] = type;
  doc["n"] = n;
  doc["classes"] = ordered_json::array();
  for (const auto& c : classes) doc["classes"].push_back(to_string(c));
  doc["characters"] = ordered_json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) doc["characters"][to_string(labels[i])] = values[i];
  out << doc.dump(2) << '\n';
}

inline IrrLabelD label_for_rank(const std::string& text, int rank_expected, const char* what) {
  IrrLabelD x = parse_d_label(text);
  if (rank(x) != rank_expected)
    throw UsageError(std::string(what) + " " + text + " has rank " + std::to_string(rank(x)) +
                     ", expected " + std::to_string(rank_expected));
  return x;
}

inline ordered_json report_json(const std::vector<VerificationReport>& reports) {
  ordered_json doc;
  std::size_t pairs = 0;
  ordered_json mismatches = ordered_json::array();
  ordered_json runs = ordered_json::array();
  for (const auto& r : reports) {
    pairs += r.pairs_checked;
    runs.push_back({{"n", r.n}, {"a", r.a}, {"b", r.b}, {"pairs_checked", r.pairs_checked},
                    {"mismatches", r.mismatches.size()}});
    for (const auto& m : r.mismatches)
      mismatches.push_back({{"n", r.n},
                            {"a", r.a},
                            {"b", r.b},
                            {"A", to_string(m.left)},
                            {"B", to_string(m.right)},
                            {"X", to_string(m.x)},
                            {"formula", m.formula},
                            {"oracle", m.oracle}});
  }
  doc["status"] = mismatches.empty() ? "pass" : "fail";
  doc["pairs_checked"] = pairs;
  doc["mismatches"] = std::move(mismatches);
  doc["runs"] = std::move(runs);
  return doc;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::ordered_json;
  using detail::UsageError;

  CLI::App app{"Induced characters of type D Weyl groups via Littlewood-Richardson coefficients",
               "weyld"};
  app.footer(grammar_help());
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
  };

  // lr
  std::string lr_alpha, lr_beta, lr_gamma;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c_{alpha,beta}^gamma");
  lr->add_option("--alpha", lr_alpha, "Partition alpha")->required();
  lr->add_option("--beta", lr_beta, "Partition beta")->required();
  lr->add_option("--gamma", lr_gamma, "Partition gamma (omit for the full expansion)");
  add_format(lr);

  // chartable
  std::string ct_type;
  int ct_n = 0;
  auto* chartable = app.add_subcommand("chartable", "Character table of S_n, B_n or D_n");
  chartable->add_option("--type", ct_type, "Group type")
      ->required()
      ->check(CLI::IsMember({"A", "B", "D"}));
  chartable->add_option("--n", ct_n, "Rank")->required()->check(CLI::Range(1, kMaxTableRank));
  add_format(chartable);

  // decompose
  int dq_n = 0, dq_a = 0, dq_b = 0;
  std::string dq_left, dq_right;
  auto* decompose = app.add_subcommand("decompose", "Decompose Ind_{W_a W_b}^{W_n}(A x B)");
  decompose->add_option("--n", dq_n, "Rank of W_n (>= 4)")->required();
  decompose->add_option("--a", dq_a, "Rank of the first factor")->required();
  decompose->add_option("--b", dq_b, "Rank of the second factor")->required();
  decompose->add_option("--A", dq_left, "Label of a character of W_a")->required();
  decompose->add_option("--B", dq_right, "Label of a character of W_b")->required();
  add_format(decompose);

  // branch
  int br_n = 0;
  std::string br_x;
  auto* branch = app.add_subcommand("branch", "Constituents of the restriction to W_{n-1}");
  branch->add_option("--X", br_x, "Bipartition (or label) of a character of W_n")->required();
  branch->add_option("--n", br_n, "Rank; must equal the size of X when given");

  // verify
  int vf_n = 0, vf_a = 0, vf_b = 0;
  bool vf_all = false;
  auto* verify = app.add_subcommand("verify", "Compare the formula with the brute-force oracle");
  auto* vf_n_opt = verify->add_option("--n", vf_n, "Rank 4..6");
  auto* vf_a_opt = verify->add_option("--a", vf_a, "First factor rank")->needs(vf_n_opt);
  auto* vf_b_opt = verify->add_option("--b", vf_b, "Second factor rank")->needs(vf_n_opt);
  auto* vf_all_opt = verify->add_flag("--all", vf_all, "Every (n,a,b) with 4 <= n <= 6");
  vf_all_opt->excludes(vf_n_opt);
  vf_a_opt->needs(vf_b_opt);
  vf_b_opt->needs(vf_a_opt);

  std::vector<const char*> argv{"weyld"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (lr->parsed()) {
      const Partition alpha = parse_partition(lr_alpha);
      const Partition beta = parse_partition(lr_beta);
      if (!lr_gamma.empty()) {
        out << lr_coefficient(alpha, beta, parse_partition(lr_gamma)) << '\n';
        return kExitOk;
      }
      const auto expansion = lr_expand(alpha, beta);
      if (format == "table") {
        std::vector<std::vector<std::string>> rows{{"gamma", "c"}};
        for (const auto& [gamma, c] : expansion) rows.push_back({to_string(gamma), std::to_string(c)});
        detail::print_table(out, rows);
      } else {
        ordered_json doc = ordered_json::object();
        for (const auto& [gamma, c] : expansion) doc[to_string(gamma)] = c;
        out << doc.dump() << '\n';
      }
      return kExitOk;
    }

    if (chartable->parsed()) {
      if (ct_type == "A") {
        const auto t = sym_char_table(ct_n);
        detail::emit_char_table(out, format, "A", ct_n, t.labels, t.classes, t.values);
      } else if (ct_type == "B") {
        const auto t = b_char_table(ct_n);
        detail::emit_char_table(out, format, "B", ct_n, t.labels, t.classes, t.values);
      } else {
        if (ct_n < 2) throw UsageError("chartable --type D needs n >= 2");
        const auto t = d_char_table(ct_n);
        detail::emit_char_table(out, format, "D", ct_n, t.labels, t.classes, t.values);
      }
      return kExitOk;
    }

    if (decompose->parsed()) {
      if (dq_n < 4) throw UsageError("decompose needs n >= 4");
      if (dq_a < 1 || dq_b < 1 || dq_a + dq_b != dq_n)
        throw UsageError("decompose needs a, b >= 1 with a + b = n");
      const InducedQuery q{dq_n, dq_a, dq_b, detail::label_for_rank(dq_left, dq_a, "--A"),
                           detail::label_for_rank(dq_right, dq_b, "--B")};
      const DecompositionResult result = decompose_induced(q);
      if (format == "table") {
        std::vector<std::vector<std::string>> rows{{"X", "multiplicity"}};
        for (const auto& [x, m] : result.multiplicities) rows.push_back({to_string(x), std::to_string(m)});
        detail::print_table(out, rows);
        return kExitOk;
      }
      ordered_json doc;
      doc["multiplicities"] = ordered_json::object();
      for (const auto& [x, m] : result.multiplicities) doc["multiplicities"][to_string(x)] = m;
      doc["metadata"] = {{"method", result.method},
                         {"n", q.n},
                         {"a", q.a},
                         {"b", q.b},
                         {"A", to_string(q.left)},
                         {"B", to_string(q.right)},
                         {"nonzero", result.multiplicities.size()}};
      out << doc.dump(2) << '\n';
      return kExitOk;
    }

    if (branch->parsed()) {
      const Bipartition gamma = parse_label_bipartition(br_x);
      if (branch->count("--n") && br_n != size(gamma))
        throw UsageError("--X " + br_x + " has size " + std::to_string(size(gamma)) +
                         " but --n is " + std::to_string(br_n));
      if (size(gamma) < 4) throw UsageError("branch needs a bipartition of n >= 4");
      ordered_json doc = ordered_json::array();
      for (const auto& member : branch_set(gamma)) doc.push_back(to_string(member));
      out << doc.dump() << '\n';
      return kExitOk;
    }

    if (verify->parsed()) {
      std::vector<VerificationReport> reports;
      if (vf_all) {
        for (int n = 4; n <= kOracleMaxRank; ++n)
          for (auto s : enumerate_splits(n)) reports.push_back(verify_proposition(n, s.a, s.b));
      } else if (verify->count("--n")) {
        if (vf_n < 4 || vf_n > kOracleMaxRank) throw UsageError("verify needs 4 <= n <= 6");
        if (verify->count("--a")) {
          if (vf_a < 1 || vf_b < 1 || vf_a + vf_b != vf_n)
            throw UsageError("verify needs a, b >= 1 with a + b = n");
          reports.push_back(verify_proposition(vf_n, vf_a, vf_b));
        } else {
          for (auto s : enumerate_splits(vf_n)) reports.push_back(verify_proposition(vf_n, s.a, s.b));
        }
      } else {
        throw UsageError("verify needs --n or --all");
      }
      const ordered_json doc = detail::report_json(reports);
      out << doc.dump(2) << '\n';
      return doc["mismatches"].empty() ? kExitOk : kExitMismatch;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for the label grammar\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace weyld::cli
