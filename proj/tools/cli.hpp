#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "efa/algebra.hpp"

namespace efa::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,         // model fails an axiom, or search found nothing
  kUsage = 2,           // I/O, parse, or usage error
  kTheoremFailure = 3,  // a theorem check failed on a valid model
};

using Json = nlohmann::ordered_json;

/// Full report for one finite model. Invalid models get empty profile,
/// witnesses, and theorems sections.
Json model_report(const std::string& name, const FiniteEffectAlgebra& algebra);

/// Report shell carrying a symbolic checker result under witnesses.witness.
Json witness_report(const std::string& name, Json witness);

int cmd_check(const std::filesystem::path& file, std::ostream& out, std::ostream& err);
int cmd_props(const std::filesystem::path& file, bool json, std::ostream& out, std::ostream& err);
int cmd_hasse(const std::filesystem::path& file, const std::filesystem::path& dot, std::ostream& out,
              std::ostream& err);
int cmd_example(const std::string& name, const std::vector<std::string>& params,
                const std::filesystem::path& file, std::ostream& out, std::ostream& err);

struct EnumerateArgs {
  std::size_t max_size = 4;
  std::optional<std::filesystem::path> out_dir;
  bool verify_theorems = false;
  unsigned jobs = 1;
  bool print_forms = false;
};
int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err);

int cmd_search(const std::vector<std::string>& required, const std::vector<std::string>& forbidden,
               std::size_t max_size, std::ostream& out, std::ostream& err);

struct WitnessArgs {
  std::string name;
  std::uint64_t depth = 20;
  std::uint64_t target = 5;       // ex38 only
  std::size_t candidates = 100;   // ex34 / ex36-*
  bool json = false;
};
int cmd_witness(const WitnessArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace efa::cli
