#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace efa::symbolic {

// Finitely representable members of four infinite effect algebras. Carriers
// are concrete: X = N for the finite/cofinite family; blocks X1..X4 are the
// residue classes mod 4 (point (i, k) stands for 4k + i - 1); the X/Y points
// of the balanced family are x0, x1, ... and y0, y1, ...
//
// Every family provides oplus / supplement / le / is_member, with le
// following the definition: u <= v iff v = u + c for some c in the family.

// ---------------------------------------------------------------------------
// Finite and cofinite subsets of N under disjoint union.

struct FinCofElement {
  std::set<std::uint64_t> finite_part;
  bool cofinite = false;  // true: N minus finite_part

  static FinCofElement finite(std::set<std::uint64_t> s) { return {std::move(s), false}; }
  static FinCofElement all_but(std::set<std::uint64_t> s) { return {std::move(s), true}; }

  bool contains(std::uint64_t x) const { return finite_part.contains(x) != cofinite; }
  bool operator==(const FinCofElement&) const = default;
};

bool is_member(const FinCofElement& u);
std::optional<FinCofElement> oplus(const FinCofElement& u, const FinCofElement& v);
FinCofElement supplement(const FinCofElement& u);
bool le(const FinCofElement& u, const FinCofElement& v);
std::string to_string(const FinCofElement& u);

// ---------------------------------------------------------------------------
// Finite perturbations (symmetric differences) of six unions of blocks.

struct BlockPoint {
  int block = 1;  // 1..4
  std::uint64_t index = 0;

  auto operator<=>(const BlockPoint&) const = default;
};

/// Unions of blocks as 4-bit masks, bit i-1 = X_i.
namespace blocks {
inline constexpr std::uint8_t kEmpty = 0b0000;
inline constexpr std::uint8_t kX1X2 = 0b0011;
inline constexpr std::uint8_t kX2X3 = 0b0110;
inline constexpr std::uint8_t kX3X4 = 0b1100;
inline constexpr std::uint8_t kX4X1 = 0b1001;
inline constexpr std::uint8_t kAll = 0b1111;
bool in_base_family(std::uint8_t mask);
}  // namespace blocks

struct BlockElement {
  std::uint8_t base = blocks::kEmpty;
  std::set<BlockPoint> perturbation;  // the set is base XOR perturbation

  bool contains(const BlockPoint& p) const {
    return (((base >> (p.block - 1)) & 1) != 0) != perturbation.contains(p);
  }
  bool operator==(const BlockElement&) const = default;
};

bool is_member(const BlockElement& u);
std::optional<BlockElement> oplus(const BlockElement& u, const BlockElement& v);
BlockElement supplement(const BlockElement& u);
bool le(const BlockElement& u, const BlockElement& v);
std::string to_string(const BlockElement& u);

// ---------------------------------------------------------------------------
// The chain 0 < 1 < 2 < ... < 2' < 1' < 0' with m + n' = (n - m)'.

struct ChainElement {
  std::uint64_t value = 0;
  bool primed = false;

  static ChainElement plain(std::uint64_t n) { return {n, false}; }
  static ChainElement prime(std::uint64_t n) { return {n, true}; }
  bool operator==(const ChainElement&) const = default;
};

inline bool is_member(const ChainElement&) { return true; }
std::optional<ChainElement> oplus(const ChainElement& u, const ChainElement& v);
ChainElement supplement(const ChainElement& u);
bool le(const ChainElement& u, const ChainElement& v);
std::string to_string(const ChainElement& u);

// ---------------------------------------------------------------------------
// Finite sets with as many X points as Y points, and their complements.

enum class Side : std::uint8_t { x, y };

struct TaggedPoint {
  Side side = Side::x;
  std::uint64_t index = 0;

  static TaggedPoint x(std::uint64_t i) { return {Side::x, i}; }
  static TaggedPoint y(std::uint64_t i) { return {Side::y, i}; }
  auto operator<=>(const TaggedPoint&) const = default;
};

struct BalancedElement {
  std::set<TaggedPoint> direct_part;
  bool complement = false;  // true: (X u Y) minus direct_part

  static BalancedElement direct(std::set<TaggedPoint> s) { return {std::move(s), false}; }
  static BalancedElement all_but(std::set<TaggedPoint> s) { return {std::move(s), true}; }

  bool contains(const TaggedPoint& p) const { return direct_part.contains(p) != complement; }
  bool operator==(const BalancedElement&) const = default;
};

bool is_member(const BalancedElement& u);
std::optional<BalancedElement> oplus(const BalancedElement& u, const BalancedElement& v);
BalancedElement supplement(const BalancedElement& u);
bool le(const BalancedElement& u, const BalancedElement& v);
std::string to_string(const BalancedElement& u);

// ---------------------------------------------------------------------------
// Claim checkers. A defeater maps a candidate bound either to a strictly
// better bound of the same kind or to a reason it is not a bound at all.
// Outputs are re-checked with the family's own le/is_member; `verified`
// records the outcome of that re-check.

enum class Verdict { improved, not_a_bound, not_a_member };

std::string to_string(Verdict v);

template <class T>
struct Refutation {
  Verdict verdict = Verdict::not_a_member;
  T candidate;
  std::optional<T> defeater;  // improved: strictly better bound
  std::optional<T> witness;   // not_a_bound: element the candidate fails to bound
  bool verified = false;
  std::string explanation;
};

/// Sampled points checked when verifying that a defeater still bounds an
/// infinite system.
inline constexpr std::uint64_t kDefaultDepth = 20;

/// System {{s} : s even}. Any upper bound of its partial sums is cofinite and
/// misses only odd points; removing one more odd point gives a smaller one.
Refutation<FinCofElement> ex34_not_orthocomplete(const FinCofElement& candidate,
                                                 std::uint64_t depth = kDefaultDepth);

/// Common lower bounds of X1 u X2 and X2 u X3 are finite subsets of X2; any
/// of them grows by a fresh X2 point.
Refutation<BlockElement> ex36_no_meet(const BlockElement& candidate, std::uint64_t depth = kDefaultDepth);

/// Upper bounds of {{x} : x in X1} contain X1 and a second block; excising a
/// point of the second block gives a smaller upper bound.
Refutation<BlockElement> ex36_no_sup_of_singletons(const BlockElement& candidate,
                                                    std::uint64_t depth = kDefaultDepth);

struct ChainReport {
  ChainElement target;
  std::uint64_t depth = 0;
  std::vector<ChainElement> atoms;
  std::vector<ChainElement> atom_sums;  // all sums of atom multisets of total <= depth
  bool target_reachable = true;
  std::vector<ChainElement> upper_bound_chain;  // 0' > 1' > ... > depth'
  bool chain_strictly_decreasing = false;
  bool no_plain_upper_bound = false;
  bool verified = false;
  std::string explanation;
};

/// n' is not a sum of atoms; the system {1, 1, 1, ...} has upper bounds
/// exactly the primed elements, which descend without a minimum.
ChainReport ex38_not_orthoatomistic(std::uint64_t n, std::uint64_t depth = kDefaultDepth);

struct BalancedReport {
  std::uint64_t depth = 0;
  std::vector<BalancedElement> upper_bounds;
  std::vector<BalancedElement> minimal_upper_bounds;
  std::optional<BalancedElement> supremum;
  bool minimal_incomparable = false;
  bool verified = false;
  std::string explanation;
};

/// Pairing f(x_i) = y_{i+1}, system {{x_i, y_{i+1}} : i >= 1}. Upper bounds
/// are complements of balanced subsets of {x0, y0, y1}.
BalancedReport ex39_two_minimal_upper_bounds(std::uint64_t depth = kDefaultDepth);

/// Pairs the X points of a direct balanced set with its Y points in sorted
/// order; the sum of the pairs is the set itself.
std::vector<BalancedElement> ex39_orthoatomistic_witness(const BalancedElement& a);

// Random candidates for the defeaters; about half are genuine bounds.
FinCofElement random_ex34_candidate(std::mt19937_64& rng, std::uint64_t depth = kDefaultDepth);
BlockElement random_ex36_meet_candidate(std::mt19937_64& rng, std::uint64_t depth = kDefaultDepth);
BlockElement random_ex36_sup_candidate(std::mt19937_64& rng, std::uint64_t depth = kDefaultDepth);

}  // namespace efa::symbolic
