#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "efa/algebra.hpp"

namespace efa {

// The .efa text format:
//
//   # comment
//   elements: 5
//   one: 4
//   sum: 1 1 2          (1 + 1 = 2; either orientation, omitted pairs undefined)
//   label: 2 two        (optional display label)
//
// Zero is element 0 and its row (a + 0 = a) is filled in by the loader.
// Exactly one `elements:` and one `one:` header are required.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FiniteEffectAlgebra parse_efa(std::istream& in);
FiniteEffectAlgebra parse_efa(const std::string& text);
FiniteEffectAlgebra load_efa(const std::filesystem::path& path);

/// Writes sums with 0 < a <= b only, in row-major order. Labels are written
/// when any differs from the element index.
void write_efa(std::ostream& out, const FiniteEffectAlgebra& algebra);
std::string to_efa(const FiniteEffectAlgebra& algebra);
void save_efa(const FiniteEffectAlgebra& algebra, const std::filesystem::path& path);

}  // namespace efa
