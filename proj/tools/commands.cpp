#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "efa/efa_file.hpp"
#include "efa/enumerate.hpp"
#include "efa/hasse.hpp"
#include "efa/models.hpp"
#include "efa/order.hpp"
#include "efa/symbolic.hpp"
#include "efa/theorems.hpp"

namespace efa::cli {

namespace fs = std::filesystem;

namespace {

// Fixed so that witness runs are reproducible.
constexpr std::uint64_t kWitnessSeed = 20240917;

/// Loads a model or reports why not; nullopt means exit 2 was already decided.
std::optional<FiniteEffectAlgebra> load(const fs::path& file, std::ostream& err) {
  try {
    return load_efa(file);
  } catch (const ParseError& e) {
    err << file.string() << ":" << e.line() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << file.string() << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

void print_violations(const FiniteEffectAlgebra& algebra, const ValidationReport& report, std::ostream& out) {
  for (const auto& v : report.violations) {
    out << to_string(v.axiom) << ":";
    for (auto e : v.witness) out << " " << algebra.label(e);
    out << "  " << v.message << "\n";
  }
}

bool write_text(const fs::path& file, const std::string& text, std::ostream& err) {
  std::ofstream f(file);
  f << text;
  if (!f) {
    err << "cannot write " << file.string() << "\n";
    return false;
  }
  return true;
}

}  // namespace

int cmd_check(const fs::path& file, std::ostream& out, std::ostream& err) {
  auto algebra = load(file, err);
  if (!algebra) return kUsage;
  const auto report = validate(*algebra);
  if (!report.valid()) {
    out << "invalid: " << report.violations.size() << " violation(s)\n";
    print_violations(*algebra, report, out);
    return kInvalid;
  }
  const auto theorems = run_all(Model(*algebra));
  out << "valid effect algebra with " << algebra->size() << " elements\n";
  if (!theorems.passed()) {
    for (const auto& c : theorems.checks)
      if (c.status == CheckStatus::fail) out << "theorem check failed: " << c.id << "\n";
    return kTheoremFailure;
  }
  return kOk;
}

int cmd_props(const fs::path& file, bool json, std::ostream& out, std::ostream& err) {
  auto algebra = load(file, err);
  if (!algebra) return kUsage;
  const auto report = model_report(file.stem().string(), *algebra);
  if (json) {
    out << report.dump(2) << "\n";
  } else if (!report["valid"].get<bool>()) {
    out << "invalid model\n";
    print_violations(*algebra, validate(*algebra), out);
  } else {
    for (const auto& [key, value] : report["profile"].items()) {
      if (value.is_boolean())
        out << std::left << std::setw(26) << key << (value.get<bool>() ? "true" : "false") << "\n";
    }
    out << std::left << std::setw(26) << "atoms";
    for (const auto& a : report["profile"]["atoms"]) out << a.get<std::string>() << " ";
    out << "\n\n";
    for (const auto& t : report["theorems"])
      out << std::left << std::setw(40) << t["id"].get<std::string>() << t["status"].get<std::string>() << "\n";
  }
  if (!report["valid"].get<bool>()) return kInvalid;
  for (const auto& t : report["theorems"])
    if (t["status"] == "fail") return kTheoremFailure;
  return kOk;
}

int cmd_hasse(const fs::path& file, const fs::path& dot, std::ostream& out, std::ostream& err) {
  auto algebra = load(file, err);
  if (!algebra) return kUsage;
  const auto report = validate(*algebra);
  if (!report.valid()) {
    print_violations(*algebra, report, err);
    return kInvalid;
  }
  if (!write_text(dot, to_dot(Model(*algebra), file.stem().string()), err)) return kUsage;
  out << "wrote " << dot.string() << "\n";
  return kOk;
}

int cmd_example(const std::string& name, const std::vector<std::string>& params, const fs::path& file,
                std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::string> aliases{
      {"chain", "chain"},
      {"boolean", "boolean"},
      {"boolean_algebra", "boolean"},
      {"even_subsets", "even_subsets"},
      {"even_subset_omp", "even_subsets"},
      {"horizontal_sum", "horizontal_sum"},
  };
  const auto it = aliases.find(name);
  if (it == aliases.end()) {
    err << "unknown example '" << name << "'; known: chain, boolean, even_subsets, horizontal_sum\n";
    return kUsage;
  }
  std::string recipe;
  if (it->second == "horizontal_sum") {
    if (params.size() != 2) {
      err << "horizontal_sum takes two operand recipes, e.g. chain:2 chain:3\n";
      return kUsage;
    }
    recipe = "horizontal_sum(" + params[0] + "," + params[1] + ")";
  } else {
    if (params.size() != 1) {
      err << name << " takes one integer parameter\n";
      return kUsage;
    }
    recipe = it->second + ":" + params[0];
  }
  try {
    const auto algebra = build(ModelRecipe::parse(recipe));
    std::ostringstream text;
    text << "# " << recipe << "\n";
    write_efa(text, algebra);
    if (!write_text(file, text.str(), err)) return kUsage;
    out << "wrote " << recipe << " (" << algebra.size() << " elements) to " << file.string() << "\n";
    return kOk;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_size < 2 || args.max_size > kMaxEnumerationSize) {
    err << "--max-size must be in 2.." << kMaxEnumerationSize << "\n";
    return kUsage;
  }
  if (args.out_dir) {
    std::error_code ec;
    fs::create_directories(*args.out_dir, ec);
    if (ec) {
      err << "cannot create " << args.out_dir->string() << ": " << ec.message() << "\n";
      return kUsage;
    }
  }
  const EnumerationOptions options{std::max(1u, args.jobs)};
  std::map<std::string, std::array<std::size_t, 3>> tally;
  std::size_t failures = 0;
  for (std::size_t n = 2; n <= args.max_size; ++n) {
    const auto batch = enumerate_up_to_iso(n, options);
    out << "order " << n << ": " << batch.models.size() << " models";
    if (batch.duplicates) out << " (" << batch.duplicates << " duplicates removed)";
    out << "\n";
    for (std::size_t i = 0; i < batch.models.size(); ++i) {
      const auto& table = batch.models[i];
      if (args.print_forms) out << "  " << batch.forms[i].hex() << "\n";
      std::ostringstream stem;
      stem << "order" << n << "_" << std::setw(4) << std::setfill('0') << i;
      if (args.out_dir && !write_text(*args.out_dir / (stem.str() + ".efa"), to_efa(table), err)) return kUsage;
      if (!args.verify_theorems) continue;
      bool failed = false;
      for (const auto& c : run_all(Model(table)).checks) {
        ++tally[c.id][static_cast<std::size_t>(c.status)];
        if (c.status == CheckStatus::fail) {
          failed = true;
          err << "theorem " << c.id << " failed on " << stem.str() << "\n";
        }
      }
      if (failed) {
        ++failures;
        err << to_efa(table);
        if (args.out_dir) write_text(*args.out_dir / ("failure_" + stem.str() + ".efa"), to_efa(table), err);
      }
    }
  }
  if (args.verify_theorems) {
    out << "\n" << std::left << std::setw(40) << "check" << std::right << std::setw(8) << "pass" << std::setw(8)
        << "fail" << std::setw(9) << "vacuous" << "\n";
    for (const auto& id : theorem_ids()) {
      const auto& t = tally[id];
      out << std::left << std::setw(40) << id << std::right << std::setw(8) << t[0] << std::setw(8) << t[1]
          << std::setw(9) << t[2] << "\n";
    }
    out << "failures: " << failures << "\n";
  }
  return failures ? kTheoremFailure : kOk;
}

int cmd_search(const std::vector<std::string>& required, const std::vector<std::string>& forbidden,
               std::size_t max_size, std::ostream& out, std::ostream& err) {
  if (max_size < 2 || max_size > kMaxEnumerationSize) {
    err << "--max-size must be in 2.." << kMaxEnumerationSize << "\n";
    return kUsage;
  }
  SearchResult result;
  try {
    result = search({required, forbidden, max_size});
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  if (!result.model) {
    out << "none\n" << result.certificate << " (" << result.models_examined << " models examined)\n";
    return kInvalid;
  }
  out << "found a model of order " << result.model->size() << " after " << result.models_examined
      << " models\n";
  write_efa(out, *result.model);
  return kOk;
}

namespace {

template <class T>
Json refutation_json(const symbolic::Refutation<T>& r) {
  using symbolic::to_string;
  Json j;
  j["candidate"] = to_string(r.candidate);
  j["verdict"] = to_string(r.verdict);
  j["defeater"] = r.defeater ? Json(to_string(*r.defeater)) : Json(nullptr);
  j["witness"] = r.witness ? Json(to_string(*r.witness)) : Json(nullptr);
  j["verified"] = r.verified;
  j["explanation"] = r.explanation;
  return j;
}

template <class Check, class Generate>
int run_defeater(const WitnessArgs& args, Check check, Generate generate, std::ostream& out) {
  std::mt19937_64 rng(kWitnessSeed);
  Json cases = Json::array();
  std::size_t verified = 0;
  for (std::size_t i = 0; i < args.candidates; ++i) {
    const auto r = check(generate(rng, args.depth), args.depth);
    if (r.verified) ++verified;
    if (args.json) {
      cases.push_back(refutation_json(r));
    } else {
      out << symbolic::to_string(r.candidate) << "  ->  " << symbolic::to_string(r.verdict) << ": ";
      if (r.defeater) out << symbolic::to_string(*r.defeater);
      if (r.witness) out << symbolic::to_string(*r.witness);
      out << (r.verified ? "  [verified]" : "  [NOT VERIFIED]") << "\n";
    }
  }
  if (args.json) {
    Json w{{"name", args.name}, {"depth", args.depth}, {"candidates", args.candidates},
           {"refuted", verified}, {"cases", cases}};
    out << witness_report(args.name, std::move(w)).dump(2) << "\n";
  } else {
    out << "refuted " << verified << "/" << args.candidates << " candidates; every defeater re-verified: "
        << (verified == args.candidates ? "yes" : "no") << "\n";
  }
  return verified == args.candidates ? kOk : kTheoremFailure;
}

template <class T>
Json strings(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(symbolic::to_string(x));
  return out;
}

}  // namespace

int cmd_witness(const WitnessArgs& args, std::ostream& out, std::ostream& err) {
  using namespace symbolic;
  if (args.name == "ex34") {
    return run_defeater(
        args, [](const auto& c, auto d) { return ex34_not_orthocomplete(c, d); },
        [](auto& rng, auto d) { return random_ex34_candidate(rng, d); }, out);
  }
  if (args.name == "ex36-meet") {
    return run_defeater(
        args, [](const auto& c, auto d) { return ex36_no_meet(c, d); },
        [](auto& rng, auto d) { return random_ex36_meet_candidate(rng, d); }, out);
  }
  if (args.name == "ex36-sup") {
    return run_defeater(
        args, [](const auto& c, auto d) { return ex36_no_sup_of_singletons(c, d); },
        [](auto& rng, auto d) { return random_ex36_sup_candidate(rng, d); }, out);
  }
  if (args.name == "ex38") {
    const auto r = ex38_not_orthoatomistic(args.target, args.depth);
    if (args.json) {
      Json w{{"name", args.name},
             {"target", to_string(r.target)},
             {"depth", r.depth},
             {"atoms", strings(r.atoms)},
             {"target_reachable", r.target_reachable},
             {"upper_bound_chain", strings(r.upper_bound_chain)},
             {"chain_strictly_decreasing", r.chain_strictly_decreasing},
             {"no_plain_upper_bound", r.no_plain_upper_bound},
             {"verified", r.verified},
             {"explanation", r.explanation}};
      out << witness_report(args.name, std::move(w)).dump(2) << "\n";
    } else {
      out << "atoms: " << strings(r.atoms).dump() << "\n"
          << "target " << to_string(r.target) << " reachable by atom sums: " << (r.target_reachable ? "yes" : "no")
          << "\n"
          << "upper bounds of 1, 1+1, 1+1+1, ...:";
      for (const auto& u : r.upper_bound_chain) out << " " << to_string(u);
      out << "\nstrictly decreasing: " << (r.chain_strictly_decreasing ? "yes" : "no")
          << "\nplain upper bound: " << (r.no_plain_upper_bound ? "none" : "exists") << "\n"
          << r.explanation << "\n"
          << "verified: " << (r.verified ? "yes" : "no") << "\n";
    }
    return r.verified ? kOk : kTheoremFailure;
  }
  if (args.name == "ex39") {
    const auto r = ex39_two_minimal_upper_bounds(args.depth);
    if (args.json) {
      Json w{{"name", args.name},
             {"depth", r.depth},
             {"upper_bounds", strings(r.upper_bounds)},
             {"minimal_upper_bounds", strings(r.minimal_upper_bounds)},
             {"minimal_incomparable", r.minimal_incomparable},
             {"supremum", r.supremum ? Json(to_string(*r.supremum)) : Json(nullptr)},
             {"verified", r.verified},
             {"explanation", r.explanation}};
      out << witness_report(args.name, std::move(w)).dump(2) << "\n";
    } else {
      out << "upper bounds (" << r.upper_bounds.size() << "):\n";
      for (const auto& u : r.upper_bounds) out << "  " << to_string(u) << "\n";
      out << "minimal upper bounds (" << r.minimal_upper_bounds.size() << "):\n";
      for (const auto& u : r.minimal_upper_bounds) out << "  " << to_string(u) << "\n";
      out << "incomparable: " << (r.minimal_incomparable ? "yes" : "no") << "\n"
          << "supremum: " << (r.supremum ? to_string(*r.supremum) : "none") << "\n"
          << "verified: " << (r.verified ? "yes" : "no") << "\n";
    }
    return r.verified ? kOk : kTheoremFailure;
  }
  err << "unknown witness '" << args.name << "'; known: ex34, ex36-meet, ex36-sup, ex38, ex39\n";
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite effect algebras: validation, properties, enumeration, witnesses", "efa"};
  app.require_subcommand(1);

  std::string file, output;
  bool json = false;

  auto* check = app.add_subcommand("check", "Validate a .efa file against the axioms");
  check->add_option("FILE", file)->required();

  auto* props = app.add_subcommand("props", "Print the property profile and theorem checks");
  props->add_option("FILE", file)->required();
  props->add_flag("--json", json, "Emit the JSON report");

  auto* hasse = app.add_subcommand("hasse", "Write the cover relation as a DOT graph");
  hasse->add_option("FILE", file)->required();
  hasse->add_option("-o,--output", output, "Output .dot file")->required();

  std::string example_name;
  std::vector<std::string> example_params;
  auto* example = app.add_subcommand("example", "Write a built-in model as a .efa file");
  example->add_option("NAME", example_name)->required();
  example->add_option("PARAMS", example_params)->required();
  example->add_option("-o,--output", output, "Output .efa file")->required();

  EnumerateArgs en;
  std::string out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all models up to isomorphism");
  enumerate->add_option("--max-size", en.max_size)->required();
  enumerate->add_option("--out", out_dir, "Directory for .efa files");
  enumerate->add_flag("--verify-theorems", en.verify_theorems, "Run every theorem check on every model");
  enumerate->add_option("--jobs", en.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--print-forms", en.print_forms, "Print each canonical form in hex");

  std::vector<std::string> required, forbidden;
  std::size_t search_max = 6;
  auto* search_cmd = app.add_subcommand("search", "Find a model with a property profile");
  search_cmd->add_option("--require", required);
  search_cmd->add_option("--forbid", forbidden);
  search_cmd->add_option("--max-size", search_max)->required();

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Run a symbolic counterexample checker");
  witness->add_option("NAME", wa.name, "ex34 | ex36-meet | ex36-sup | ex38 | ex39")->required();
  witness->add_option("--depth", wa.depth, "Sampling depth");
  witness->add_option("--target", wa.target, "ex38: primed element to decompose");
  witness->add_option("--candidates", wa.candidates, "ex34/ex36: number of random candidates");
  witness->add_flag("--json", wa.json, "Emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  if (check->parsed()) return cmd_check(file, out, err);
  if (props->parsed()) return cmd_props(file, json, out, err);
  if (hasse->parsed()) return cmd_hasse(file, output, out, err);
  if (example->parsed()) return cmd_example(example_name, example_params, output, out, err);
  if (enumerate->parsed()) {
    if (!out_dir.empty()) en.out_dir = out_dir;
    return cmd_enumerate(en, out, err);
  }
  if (search_cmd->parsed()) return cmd_search(required, forbidden, search_max, out, err);
  if (witness->parsed()) return cmd_witness(wa, out, err);
  return kUsage;
}

}  // namespace efa::cli
