#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bubblepat/basis.hpp"
#include "bubblepat/classification.hpp"
#include "bubblepat/errors.hpp"
#include "bubblepat/operators.hpp"
#include "bubblepat/oracle.hpp"
#include "bubblepat/permutation.hpp"
#include "bubblepat/verify.hpp"
#include "bubblepat/version.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string perm;
  std::string chain = "B";
  std::string set_input;
  std::string suite;
  std::string out;
  std::string cache;
  std::string highlight;
  int horizon = 0;
  int workers = 1;
  int cap = 0;
  bool json_mode = false;
  bool verify = false;
  bool trace = false;
};

std::vector<int> parse_positions(const std::string& text, int n) {
  std::vector<int> out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw bubblepat::ParseError("bad position '" + token + "'");
    }
    if (used != token.size()) throw bubblepat::ParseError("bad position '" + token + "'");
    if (v < 1 || v > n) {
      throw bubblepat::ParseError("position " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    }
    out.push_back(v);
  }
  return out;
}

std::string basis_cache_name(const bubblepat::PermutationSet& basis, int horizon) {
  std::string key;
  for (const bubblepat::Permutation& p : basis) {
    if (!key.empty()) key.push_back(';');
    key += p.str();
  }
  for (char& c : key) {
    if (c == ' ') c = '.';
    if (c == ';') c = '_';
  }
  return key + "-n" + std::to_string(horizon) + ".csv";
}

std::string join_display(const bubblepat::PermutationSet& ps) {
  std::string out;
  for (const bubblepat::Permutation& p : ps) {
    if (!out.empty()) out += ", ";
    out += p.display();
  }
  return out;
}

struct Outcome {
  json inputs;
  json result;
  std::string human;
  std::string file_payload;  // what --out writes; empty means the report
  int exit_code = 0;
};

Outcome run_apply(const Options& o) {
  Outcome out;
  const bubblepat::Permutation p = bubblepat::parse_permutation(o.perm);
  const bubblepat::OperatorChain chain = bubblepat::OperatorChain::parse(o.chain);
  out.inputs = {{"perm", o.perm}, {"chain", o.chain}, {"trace", o.trace}};

  auto trace = chain.apply_trace(p);
  const bubblepat::Permutation image = trace.empty() ? p : trace.back().second;

  out.result = json::object();
  out.result["image"] = image.str();
  out.result["chain"] = chain.str();
  if (o.trace) {
    auto steps = json::array();
    for (const auto& [op, q] : trace) {
      steps.push_back({{"op", std::string(1, bubblepat::pass_op_letter(op))},
                       {"image", q.str()}});
    }
    out.result["trace"] = std::move(steps);
  } else {
    out.result["trace"] = nullptr;
  }

  std::string human;
  if (o.trace) {
    human += "input: " + p.str() + "\n";
    for (const auto& [op, q] : trace) {
      human += std::string("after ") + bubblepat::pass_op_letter(op) + ": " + q.str() + "\n";
    }
  }
  human += image.display() + "\n";
  out.human = std::move(human);
  return out;
}

Outcome run_classify(const Options& o) {
  Outcome out;
  const bubblepat::Permutation p = bubblepat::parse_permutation(o.perm);
  out.inputs = {{"perm", o.perm}};
  const bubblepat::Classification cls = bubblepat::classify(p);
  out.result = cls;

  std::string human = p.display() + ": " + bubblepat::case_name(cls.kind) +
                      (cls.good() ? " (good)" : " (not a class)") + "\n";
  human += "lr maxima at positions ";
  for (std::size_t i = 0; i < cls.lr_positions.size(); ++i) {
    if (i > 0) human += " ";
    human += std::to_string(cls.lr_positions[i]);
  }
  human += "\n";
  if (cls.decomposition) {
    const auto& d = *cls.decomposition;
    human += "a=" + std::to_string(d.a) + " alpha=(" + bubblepat::word_str(d.alpha) + ")";
    if (d.b) human += " b=" + std::to_string(*d.b);
    human += " beta=(" + bubblepat::word_str(d.beta) + ")";
    if (d.c) human += " c=" + std::to_string(*d.c);
    human += " gamma=(" + bubblepat::word_str(d.gamma) + ")";
    if (d.trailing_max) human += " trailing_max=" + std::to_string(*d.trailing_max);
    human += "\n";
  }
  if (cls.reduced) human += "reduced: " + cls.reduced->display() + "\n";
  out.human = std::move(human);
  return out;
}

Outcome run_basis(const Options& o) {
  Outcome out;
  const bubblepat::PermutationSet patterns = bubblepat::parse_permutation_set(o.set_input);
  auto pattern_names = json::array();
  for (const auto& p : patterns) pattern_names.push_back(p.str());
  out.inputs = {{"patterns", pattern_names},
                {"verify", o.verify},
                {"horizon", o.horizon},
                {"workers", o.workers}};

  const bubblepat::CrossCheck mode =
      o.verify ? bubblepat::CrossCheck::On : bubblepat::CrossCheck::Auto;
  bubblepat::BasisResult r;
  if (patterns.size() == 1) {
    r = bubblepat::inverse_basis(*patterns.begin(), mode, o.horizon, o.workers);
  } else {
    r = bubblepat::inverse_basis_set(patterns, mode, o.horizon, o.workers);
  }
  out.result = r;

  std::string human;
  if (r.outcome == bubblepat::BasisOutcome::Basis) {
    human += "basis (" + std::to_string(r.basis.size()) + "): " + join_display(r.basis) + "\n";
    if (r.case_used) human += "case: " + bubblepat::case_name(r.case_used->kind) + "\n";
  } else {
    const auto& [t1, t2] = *r.witness;
    human += join_display(patterns) + ": not a pattern class\n";
    human += "witness: " + t1.display() + " is contained in " + t2.display() +
             ", the image of " + t2.display() + " avoids the pattern but the image of " +
             t1.display() + " does not\n";
  }
  if (r.cross_checked) human += "cross-checked against the exhaustive scan\n";
  out.human = std::move(human);
  return out;
}

Outcome run_enumerate(const Options& o) {
  Outcome out;
  const bubblepat::PermutationSet patterns = bubblepat::parse_permutation_set(o.set_input);
  const bubblepat::ClassSpec spec(patterns);
  const int horizon = o.horizon > 0 ? o.horizon : 8;

  std::string cache_dir = o.cache;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv("BUBBLEPAT_CACHE")) cache_dir = env;
  }

  auto basis_names = json::array();
  for (const auto& p : spec.basis()) basis_names.push_back(p.str());
  out.inputs = {{"basis", basis_names},
                {"horizon", horizon},
                {"verify", o.verify},
                {"workers", o.workers},
                {"cache", cache_dir}};

  std::filesystem::path cache_file;
  if (!cache_dir.empty()) {
    cache_file = std::filesystem::path(cache_dir) / basis_cache_name(spec.basis(), horizon);
  }

  std::string csv;
  bool from_cache = false;
  if (!o.verify && !cache_file.empty() && std::filesystem::exists(cache_file)) {
    std::ifstream in(cache_file);
    std::stringstream ss;
    ss << in.rdbuf();
    csv = ss.str();
    from_cache = true;
  }

  bubblepat::CountSequence cs;
  if (!from_cache) {
    cs = bubblepat::count_av(spec, horizon);
    if (o.verify) {
      const int check_h = std::min(horizon, 8);
      const bubblepat::CountSequence naive = bubblepat::count_av_naive(spec, check_h);
      for (const auto& [n, c] : naive.counts) {
        if (cs.counts.at(n) != c) {
          throw bubblepat::CrossCheckMismatch(
              "tree count disagrees with the direct scan at length " + std::to_string(n));
        }
      }
    }
    csv = bubblepat::to_csv(cs);
    if (!cache_file.empty()) {
      std::filesystem::create_directories(cache_file.parent_path());
      std::ofstream f(cache_file);
      f << csv;
    }
  }

  out.result = json::object();
  if (!from_cache) {
    out.result = cs;
    out.result["growth_estimate"] = bubblepat::growth_estimate(cs);
  } else {
    out.result["csv"] = csv;
  }
  out.result["from_cache"] = from_cache;
  out.result["verified"] = o.verify;
  out.human = csv;
  out.file_payload = csv;
  return out;
}

Outcome run_verify(const Options& o) {
  Outcome out;
  const bubblepat::Suite suite = bubblepat::parse_suite(o.suite);
  out.inputs = {{"suite", o.suite}, {"horizon", o.horizon}, {"workers", o.workers}};
  const bubblepat::SuiteReport report = bubblepat::run_suite(suite, o.horizon, o.workers);
  out.result = report;
  out.human = bubblepat::render_text(report);
  if (!report.all_passed()) out.exit_code = 3;
  return out;
}

Outcome run_diagram(const Options& o) {
  Outcome out;
  const bubblepat::Permutation p = bubblepat::parse_permutation(o.perm);
  const std::vector<int> marks = parse_positions(o.highlight, p.size());
  out.inputs = {{"perm", o.perm}, {"highlight", marks}};

  std::vector<char> marked(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int pos : marks) marked[static_cast<std::size_t>(pos)] = 1;

  std::vector<std::string> rows;
  for (int v = p.size(); v >= 1; --v) {
    std::string row;
    for (int i = 0; i < p.size(); ++i) {
      if (!row.empty()) row += " ";
      if (p[i] == v) {
        row += marked[static_cast<std::size_t>(i + 1)] ? "#" : "*";
      } else {
        row += ".";
      }
    }
    rows.push_back(row);
  }

  out.result = {{"perm", p.str()}, {"rows", rows}, {"highlight", marks}};
  std::string human;
  for (const std::string& row : rows) human += row + "\n";
  out.human = std::move(human);
  out.file_payload = out.human;
  return out;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json_mode, "Emit a JSON report on stdout");
  sub->add_option("--out", o.out, "Write the command's artifact to this path");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"one-pass bubble sort, pattern classes, and their inverse images"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bubblepat::kVersion));

  CLI::App* apply = app.add_subcommand("apply", "Apply a chain of passes to a permutation");
  apply->add_option("perm", o.perm, "Permutation, e.g. 231 or '2 3 1'")->required();
  apply->add_option("--chain", o.chain, "Word over B and S, applied right to left")
      ->capture_default_str();
  apply->add_flag("--trace", o.trace, "Print the image after each pass");
  add_common(apply, o);

  CLI::App* classify = app.add_subcommand("classify", "Case analysis for one pattern");
  classify->add_option("perm", o.perm, "Pattern to classify")->required();
  add_common(classify, o);

  CLI::App* basis = app.add_subcommand("basis", "Basis or witness for the inverse image");
  basis->add_option("patterns", o.set_input, "Pattern, or comma-separated set of patterns")
      ->required();
  basis->add_flag("--verify", o.verify, "Force the cross-check against the scan");
  basis->add_option("-n,--horizon", o.horizon, "Cross-check scan depth (default length+3)");
  basis->add_option("--workers", o.workers, "Scan threads");
  basis->add_option("--cap", o.cap, "Raise the practical length cap");
  add_common(basis, o);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Count Av(basis) by length");
  enumerate->add_option("basis", o.set_input, "Comma-separated basis")->required();
  enumerate->add_option("-n,--horizon", o.horizon, "Largest length to count (default 8)");
  enumerate->add_flag("--verify", o.verify, "Cross-validate against the direct scan");
  enumerate->add_option("--workers", o.workers, "Scan threads");
  enumerate->add_option("--cache", o.cache, "Cache directory (or env BUBBLEPAT_CACHE)");
  enumerate->add_option("--cap", o.cap, "Raise the practical length cap");
  add_common(enumerate, o);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite,
                     "operators | good-bases | witnesses | gamma | sb | counts")
      ->required();
  verify->add_option("-n,--horizon", o.horizon, "Scan depth or maximum pattern length");
  verify->add_option("--workers", o.workers, "Scan threads");
  verify->add_option("--cap", o.cap, "Raise the practical length cap");
  add_common(verify, o);

  CLI::App* diagram = app.add_subcommand("diagram", "Plot a permutation as a grid");
  diagram->add_option("perm", o.perm, "Permutation to plot")->required();
  diagram->add_option("--highlight", o.highlight, "Comma-separated 1-based positions");
  add_common(diagram, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string command;
  try {
    if (o.cap > 0) bubblepat::set_practical_cap(o.cap);
    if (apply->parsed()) {
      command = "apply";
      outcome = run_apply(o);
    } else if (classify->parsed()) {
      command = "classify";
      outcome = run_classify(o);
    } else if (basis->parsed()) {
      command = "basis";
      outcome = run_basis(o);
    } else if (enumerate->parsed()) {
      command = "enumerate";
      outcome = run_enumerate(o);
    } else if (verify->parsed()) {
      command = "verify";
      outcome = run_verify(o);
    } else if (diagram->parsed()) {
      command = "diagram";
      outcome = run_diagram(o);
    }
  } catch (const bubblepat::HorizonExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const bubblepat::CrossCheckMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bubblepat::NotADownset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bubblepat::ContainsBadPermutation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const bubblepat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bubblepat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  nlohmann::json report = {{"command", command},
                           {"inputs", outcome.inputs},
                           {"result", outcome.result},
                           {"elapsed_ms", elapsed},
                           {"version", bubblepat::kVersion}};

  if (o.json_mode) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << outcome.human;
  }

  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!outcome.file_payload.empty()) {
      f << outcome.file_payload;
    } else {
      f << report.dump(2) << "\n";
    }
  }

  return outcome.exit_code;
}
