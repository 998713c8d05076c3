#include "efa/symbolic.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace efa::symbolic {

namespace {

// Sets given by a finite list plus a complement flag.
template <class T>
struct Cofinite {
  std::set<T> listed;
  bool complement = false;
};

template <class T>
std::set<T> unite(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

template <class T>
std::set<T> intersect(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

template <class T>
std::set<T> subtract(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

template <class T>
Cofinite<T> cof_union(const Cofinite<T>& a, const Cofinite<T>& b) {
  if (!a.complement && !b.complement) return {unite(a.listed, b.listed), false};
  if (!a.complement) return {subtract(b.listed, a.listed), true};
  if (!b.complement) return {subtract(a.listed, b.listed), true};
  return {intersect(a.listed, b.listed), true};
}

template <class T>
Cofinite<T> cof_complement(Cofinite<T> a) {
  a.complement = !a.complement;
  return a;
}

template <class T>
Cofinite<T> cof_intersection(const Cofinite<T>& a, const Cofinite<T>& b) {
  return cof_complement(cof_union(cof_complement(a), cof_complement(b)));
}

template <class T>
Cofinite<T> cof_difference(const Cofinite<T>& a, const Cofinite<T>& b) {
  return cof_intersection(a, cof_complement(b));
}

template <class T>
bool cof_empty(const Cofinite<T>& a) {
  return !a.complement && a.listed.empty();
}

Cofinite<std::uint64_t> view(const FinCofElement& u) { return {u.finite_part, u.cofinite}; }
FinCofElement make_fincof(Cofinite<std::uint64_t> c) { return {std::move(c.listed), c.complement}; }

Cofinite<TaggedPoint> view(const BalancedElement& u) { return {u.direct_part, u.complement}; }
BalancedElement make_balanced(Cofinite<TaggedPoint> c) { return {std::move(c.listed), c.complement}; }

template <class Range, class F>
std::string join_list(const Range& r, F show) {
  std::string out;
  for (const auto& x : r) {
    if (!out.empty()) out += ',';
    out += show(x);
  }
  return out;
}

}  // namespace

// --- finite / cofinite -----------------------------------------------------

bool is_member(const FinCofElement&) { return true; }

std::optional<FinCofElement> oplus(const FinCofElement& u, const FinCofElement& v) {
  if (!cof_empty(cof_intersection(view(u), view(v)))) return std::nullopt;
  return make_fincof(cof_union(view(u), view(v)));
}

FinCofElement supplement(const FinCofElement& u) { return make_fincof(cof_complement(view(u))); }

bool le(const FinCofElement& u, const FinCofElement& v) {
  auto rest = make_fincof(cof_difference(view(v), view(u)));
  return is_member(rest) && oplus(u, rest) == v;
}

std::string to_string(const FinCofElement& u) {
  const auto list = "{" + join_list(u.finite_part, [](auto x) { return std::to_string(x); }) + "}";
  if (!u.cofinite) return list;
  return u.finite_part.empty() ? "N" : "N\\" + list;
}

// --- blocks ----------------------------------------------------------------

bool blocks::in_base_family(std::uint8_t mask) {
  return mask == kEmpty || mask == kX1X2 || mask == kX2X3 || mask == kX3X4 || mask == kX4X1 || mask == kAll;
}

namespace {

bool base_has(std::uint8_t mask, int block) { return ((mask >> (block - 1)) & 1) != 0; }

/// Combines two block sets pointwise: the base by `mask_op`, each listed
/// point by `point_op`.
template <class MaskOp, class PointOp>
BlockElement combine(const BlockElement& u, const BlockElement& v, MaskOp mask_op, PointOp point_op) {
  BlockElement out;
  out.base = static_cast<std::uint8_t>(mask_op(u.base, v.base) & 0xF);
  for (const auto& p : unite(u.perturbation, v.perturbation))
    if (point_op(u.contains(p), v.contains(p)) != base_has(out.base, p.block)) out.perturbation.insert(p);
  return out;
}

BlockElement block_union(const BlockElement& u, const BlockElement& v) {
  return combine(u, v, [](auto a, auto b) { return a | b; }, [](bool a, bool b) { return a || b; });
}

BlockElement block_intersection(const BlockElement& u, const BlockElement& v) {
  return combine(u, v, [](auto a, auto b) { return a & b; }, [](bool a, bool b) { return a && b; });
}

BlockElement block_difference(const BlockElement& u, const BlockElement& v) {
  return combine(u, v, [](auto a, auto b) { return a & ~b; }, [](bool a, bool b) { return a && !b; });
}

const char* base_name(std::uint8_t mask) {
  switch (mask) {
    case blocks::kEmpty: return "0";
    case blocks::kX1X2: return "X1uX2";
    case blocks::kX2X3: return "X2uX3";
    case blocks::kX3X4: return "X3uX4";
    case blocks::kX4X1: return "X4uX1";
    case blocks::kAll: return "X";
    default: return "?";
  }
}

}  // namespace

bool is_member(const BlockElement& u) {
  if (!blocks::in_base_family(u.base)) return false;
  return std::all_of(u.perturbation.begin(), u.perturbation.end(),
                     [](const BlockPoint& p) { return p.block >= 1 && p.block <= 4; });
}

std::optional<BlockElement> oplus(const BlockElement& u, const BlockElement& v) {
  auto common = block_intersection(u, v);
  if (common.base != blocks::kEmpty || !common.perturbation.empty()) return std::nullopt;
  auto sum = block_union(u, v);
  if (!is_member(sum)) return std::nullopt;
  return sum;
}

BlockElement supplement(const BlockElement& u) {
  return {static_cast<std::uint8_t>(~u.base & 0xF), u.perturbation};
}

bool le(const BlockElement& u, const BlockElement& v) {
  auto rest = block_difference(v, u);
  return is_member(rest) && oplus(u, rest) == v;
}

std::string to_string(const BlockElement& u) {
  const auto points = "{" + join_list(u.perturbation, [](const BlockPoint& p) {
                        return "(" + std::to_string(p.block) + "," + std::to_string(p.index) + ")";
                      }) + "}";
  if (u.base == blocks::kEmpty) return points;
  std::string out = base_name(u.base);
  if (!u.perturbation.empty()) out += " ^ " + points;
  return out;
}

// --- primed chain ----------------------------------------------------------

std::optional<ChainElement> oplus(const ChainElement& u, const ChainElement& v) {
  if (!u.primed && !v.primed) return ChainElement::plain(u.value + v.value);
  if (u.primed && v.primed) return std::nullopt;
  const auto& plain = u.primed ? v : u;
  const auto& primed = u.primed ? u : v;
  if (plain.value > primed.value) return std::nullopt;
  return ChainElement::prime(primed.value - plain.value);
}

ChainElement supplement(const ChainElement& u) { return {u.value, !u.primed}; }

bool le(const ChainElement& u, const ChainElement& v) {
  if (!u.primed && !v.primed) return u.value <= v.value;
  if (!u.primed) return true;
  if (!v.primed) return false;
  return v.value <= u.value;
}

std::string to_string(const ChainElement& u) { return std::to_string(u.value) + (u.primed ? "'" : ""); }

// --- balanced sets ---------------------------------------------------------

namespace {

bool balanced(const std::set<TaggedPoint>& s) {
  const auto xs = std::count_if(s.begin(), s.end(), [](const TaggedPoint& p) { return p.side == Side::x; });
  return 2 * static_cast<std::size_t>(xs) == s.size();
}

std::string show_point(const TaggedPoint& p) {
  return (p.side == Side::x ? "x" : "y") + std::to_string(p.index);
}

}  // namespace

bool is_member(const BalancedElement& u) { return balanced(u.direct_part); }

std::optional<BalancedElement> oplus(const BalancedElement& u, const BalancedElement& v) {
  if (!cof_empty(cof_intersection(view(u), view(v)))) return std::nullopt;
  auto sum = make_balanced(cof_union(view(u), view(v)));
  if (!is_member(sum)) return std::nullopt;
  return sum;
}

BalancedElement supplement(const BalancedElement& u) { return make_balanced(cof_complement(view(u))); }

bool le(const BalancedElement& u, const BalancedElement& v) {
  auto rest = make_balanced(cof_difference(view(v), view(u)));
  return is_member(rest) && oplus(u, rest) == v;
}

std::string to_string(const BalancedElement& u) {
  const auto list = "{" + join_list(u.direct_part, show_point) + "}";
  if (!u.complement) return list;
  return u.direct_part.empty() ? "XuY" : "(XuY)\\" + list;
}

// --- checkers --------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::improved: return "improved";
    case Verdict::not_a_bound: return "not_a_bound";
    case Verdict::not_a_member: return "not_a_member";
  }
  return "?";
}

namespace {

template <class T>
bool strictly_below(const T& a, const T& b) {
  return le(a, b) && !(a == b);
}

}  // namespace

Refutation<FinCofElement> ex34_not_orthocomplete(const FinCofElement& candidate, std::uint64_t depth) {
  Refutation<FinCofElement> r;
  r.candidate = candidate;
  const auto& listed = candidate.finite_part;

  // An upper bound of all finite sets of even points contains every even point.
  std::optional<std::uint64_t> missing_even;
  if (!candidate.cofinite) {
    std::uint64_t e = 0;
    while (listed.contains(e)) e += 2;
    missing_even = e;
  } else {
    auto it = std::find_if(listed.begin(), listed.end(), [](auto x) { return x % 2 == 0; });
    if (it != listed.end()) missing_even = *it;
  }
  if (missing_even) {
    r.verdict = Verdict::not_a_bound;
    r.witness = FinCofElement::finite({*missing_even});
    r.verified = !le(*r.witness, candidate);
    r.explanation = "{" + std::to_string(*missing_even) + "} is a partial sum not below " + to_string(candidate);
    return r;
  }

  std::uint64_t p = 1;
  while (listed.contains(p)) p += 2;
  auto smaller = candidate;
  smaller.finite_part.insert(p);
  r.verdict = Verdict::improved;
  r.defeater = smaller;
  bool still_bound = true;
  for (std::uint64_t s = 0; s <= 2 * depth; s += 2) {
    still_bound = still_bound && le(FinCofElement::finite({s}), smaller);
    // Finite partial sums of the first few evens.
    std::set<std::uint64_t> prefix;
    for (std::uint64_t t = 0; t <= s; t += 2) prefix.insert(t);
    still_bound = still_bound && le(FinCofElement::finite(prefix), smaller);
  }
  r.verified = is_member(smaller) && strictly_below(smaller, candidate) && still_bound;
  r.explanation = to_string(smaller) + " is a strictly smaller upper bound (removed odd point " +
                  std::to_string(p) + ")";
  return r;
}

Refutation<BlockElement> ex36_no_meet(const BlockElement& candidate, std::uint64_t depth) {
  Refutation<BlockElement> r;
  r.candidate = candidate;
  const BlockElement left{blocks::kX1X2, {}};
  const BlockElement right{blocks::kX2X3, {}};
  if (!is_member(candidate)) {
    r.verdict = Verdict::not_a_member;
    r.verified = !blocks::in_base_family(candidate.base) || !is_member(candidate);
    r.explanation = "base is not one of the six block unions";
    return r;
  }
  for (const auto* bound : {&left, &right}) {
    if (!le(candidate, *bound)) {
      r.verdict = Verdict::not_a_bound;
      r.witness = *bound;
      r.verified = !le(candidate, *bound);
      r.explanation = to_string(candidate) + " is not below " + to_string(*bound);
      if ((candidate.base & ~bound->base & 0xF) != 0) r.explanation += " (infinitely many points remain)";
      return r;
    }
  }
  // Lower bound of both: base empty and every listed point in X2.
  std::uint64_t k = 0;
  while (candidate.perturbation.contains(BlockPoint{2, k})) ++k;
  auto larger = candidate;
  larger.perturbation.insert(BlockPoint{2, k});
  r.verdict = Verdict::improved;
  r.defeater = larger;
  r.verified = is_member(larger) && strictly_below(candidate, larger) && le(larger, left) && le(larger, right) &&
               candidate.base == blocks::kEmpty;
  (void)depth;
  r.explanation = to_string(larger) + " is a strictly larger common lower bound (added (2," + std::to_string(k) + "))";
  return r;
}

Refutation<BlockElement> ex36_no_sup_of_singletons(const BlockElement& candidate, std::uint64_t depth) {
  Refutation<BlockElement> r;
  r.candidate = candidate;
  if (!is_member(candidate)) {
    r.verdict = Verdict::not_a_member;
    r.verified = true;
    r.explanation = "base is not one of the six block unions";
    return r;
  }
  // Some point of X1 outside the candidate, if any.
  std::optional<BlockPoint> outside;
  if (!base_has(candidate.base, 1)) {
    std::uint64_t k = 0;
    while (candidate.contains(BlockPoint{1, k})) ++k;
    outside = BlockPoint{1, k};
  } else {
    for (const auto& p : candidate.perturbation)
      if (p.block == 1) {
        outside = p;
        break;
      }
  }
  if (outside) {
    r.verdict = Verdict::not_a_bound;
    r.witness = BlockElement{blocks::kEmpty, {*outside}};
    r.verified = !le(*r.witness, candidate);
    r.explanation = to_string(*r.witness) + " is not below " + to_string(candidate);
    return r;
  }

  int other = 0;
  for (int b = 2; b <= 4 && other == 0; ++b)
    if (base_has(candidate.base, b)) other = b;
  std::uint64_t k = 0;
  while (candidate.perturbation.contains(BlockPoint{other, k})) ++k;
  auto smaller = candidate;
  smaller.perturbation.insert(BlockPoint{other, k});
  r.verdict = Verdict::improved;
  r.defeater = smaller;
  bool still_bound = true;
  for (std::uint64_t i = 0; i <= depth; ++i) still_bound = still_bound && le(BlockElement{0, {{1, i}}}, smaller);
  r.verified = is_member(smaller) && strictly_below(smaller, candidate) && still_bound;
  r.explanation = to_string(smaller) + " is a strictly smaller upper bound (excised (" + std::to_string(other) + "," +
                  std::to_string(k) + "))";
  return r;
}

ChainReport ex38_not_orthoatomistic(std::uint64_t n, std::uint64_t depth) {
  ChainReport r;
  r.target = ChainElement::prime(n);
  r.depth = depth;

  std::vector<ChainElement> window;
  for (std::uint64_t k = 0; k <= depth; ++k) {
    window.push_back(ChainElement::plain(k));
    window.push_back(ChainElement::prime(k));
  }
  const auto zero = ChainElement::plain(0);
  for (const auto& x : window) {
    if (x == zero) continue;
    const bool minimal = std::none_of(window.begin(), window.end(), [&](const ChainElement& y) {
      return !(y == zero) && strictly_below(y, x);
    });
    if (minimal) r.atoms.push_back(x);
  }

  // Closure of {0} under adding an atom, bounded by total multiplicity <= depth.
  std::vector<ChainElement> frontier{zero};
  std::vector<ChainElement> reached{zero};
  for (std::uint64_t step = 0; step < depth; ++step) {
    std::vector<ChainElement> next;
    for (const auto& s : frontier)
      for (const auto& a : r.atoms)
        if (auto t = oplus(s, a); t && std::find(reached.begin(), reached.end(), *t) == reached.end()) {
          reached.push_back(*t);
          next.push_back(*t);
        }
    frontier = std::move(next);
  }
  r.atom_sums = reached;
  r.target_reachable = std::find(reached.begin(), reached.end(), r.target) != reached.end();
  const bool sums_plain = std::none_of(reached.begin(), reached.end(), [](const auto& s) { return s.primed; });

  // Partial sums of {1, 1, 1, ...}: 0, 1, ..., depth + 1.
  std::vector<ChainElement> partial;
  for (std::uint64_t k = 0; k <= depth + 1; ++k) partial.push_back(ChainElement::plain(k));
  auto bounds_all = [&](const ChainElement& u) {
    return std::all_of(partial.begin(), partial.end(), [&](const auto& p) { return le(p, u); });
  };
  bool primed_bounds = true;
  for (std::uint64_t m = 0; m <= depth; ++m) {
    r.upper_bound_chain.push_back(ChainElement::prime(m));
    primed_bounds = primed_bounds && bounds_all(ChainElement::prime(m));
  }
  r.chain_strictly_decreasing = true;
  for (std::size_t i = 0; i + 1 < r.upper_bound_chain.size(); ++i)
    r.chain_strictly_decreasing =
        r.chain_strictly_decreasing && strictly_below(r.upper_bound_chain[i + 1], r.upper_bound_chain[i]);
  r.no_plain_upper_bound = true;
  for (std::uint64_t j = 0; j <= depth; ++j)
    r.no_plain_upper_bound = r.no_plain_upper_bound && !bounds_all(ChainElement::plain(j));

  r.verified = r.atoms == std::vector<ChainElement>{ChainElement::plain(1)} && !r.target_reachable && sums_plain &&
               primed_bounds && r.chain_strictly_decreasing && r.no_plain_upper_bound;
  const auto d = std::to_string(depth);
  r.explanation = to_string(r.target) + (r.target_reachable ? " reachable" : " unreachable") +
                  " by atom sums; decreasing upper-bound chain 0' > 1' > ... > " + d + "' verified to depth " + d;
  return r;
}

BalancedReport ex39_two_minimal_upper_bounds(std::uint64_t depth) {
  BalancedReport r;
  r.depth = depth;
  const auto x0 = TaggedPoint::x(0), y0 = TaggedPoint::y(0), y1 = TaggedPoint::y(1);

  // Partial sums {x1,y2} + ... + {xk,y(k+1)} for k <= depth.
  std::vector<BalancedElement> partial{BalancedElement{}};
  for (std::uint64_t i = 1; i <= depth; ++i) {
    auto next = oplus(partial.back(), BalancedElement::direct({TaggedPoint::x(i), TaggedPoint::y(i + 1)}));
    if (!next) throw std::logic_error("pairs of the system are not orthogonal");
    partial.push_back(*next);
  }
  auto bounds_all = [&](const BalancedElement& u) {
    return std::all_of(partial.begin(), partial.end(), [&](const auto& p) { return le(p, u); });
  };

  // A direct (finite) set misses all pairs beyond its largest index, so only
  // complements qualify, and their removed part avoids every pair.
  const std::vector<TaggedPoint> residue{x0, y0, y1};
  bool scan_ok = true;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::set<TaggedPoint> removed;
    for (unsigned i = 0; i < 3; ++i)
      if (mask & (1u << i)) removed.insert(residue[i]);
    auto u = BalancedElement::all_but(removed);
    if (!is_member(u)) continue;
    if (bounds_all(u))
      r.upper_bounds.push_back(u);
    else
      scan_ok = false;
  }

  for (const auto& u : r.upper_bounds) {
    const bool minimal = std::none_of(r.upper_bounds.begin(), r.upper_bounds.end(),
                                      [&](const auto& v) { return strictly_below(v, u); });
    if (minimal) r.minimal_upper_bounds.push_back(u);
  }
  for (const auto& u : r.upper_bounds)
    if (std::all_of(r.upper_bounds.begin(), r.upper_bounds.end(), [&](const auto& v) { return le(u, v); }))
      r.supremum = u;

  if (r.minimal_upper_bounds.size() == 2) {
    const auto& a = r.minimal_upper_bounds[0];
    const auto& b = r.minimal_upper_bounds[1];
    r.minimal_incomparable = !le(a, b) && !le(b, a) && !(a == b);
  }
  r.verified = scan_ok && r.upper_bounds.size() == 3 && r.minimal_upper_bounds.size() == 2 &&
               r.minimal_incomparable && !r.supremum;
  r.explanation = std::to_string(r.upper_bounds.size()) + " upper bounds, " +
                  std::to_string(r.minimal_upper_bounds.size()) + " minimal and incomparable; supremum: " +
                  (r.supremum ? to_string(*r.supremum) : "none");
  return r;
}

std::vector<BalancedElement> ex39_orthoatomistic_witness(const BalancedElement& a) {
  if (a.complement) throw std::invalid_argument("ex39 witness needs a direct (finite) element");
  if (!is_member(a)) throw std::invalid_argument("element is not balanced: " + to_string(a));
  std::vector<TaggedPoint> xs, ys;
  for (const auto& p : a.direct_part) (p.side == Side::x ? xs : ys).push_back(p);
  std::vector<BalancedElement> out;
  BalancedElement acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.push_back(BalancedElement::direct({xs[i], ys[i]}));
    auto next = oplus(acc, out.back());
    if (!next) throw std::logic_error("pairing atoms are not orthogonal");
    acc = *next;
  }
  if (!(acc == a)) throw std::logic_error("pairing does not sum back to the element");
  return out;
}

FinCofElement random_ex34_candidate(std::mt19937_64& rng, std::uint64_t depth) {
  std::uniform_int_distribution<std::uint64_t> point(0, 2 * depth + 1);
  std::uniform_int_distribution<int> count(0, 5), kind(0, 3);
  FinCofElement u;
  const int k = kind(rng);
  u.cofinite = k != 3;
  for (int i = count(rng); i > 0; --i) {
    auto p = point(rng);
    if (k <= 1) p |= 1;  // odd points only: a genuine upper bound
    u.finite_part.insert(p);
  }
  return u;
}

BlockElement random_ex36_meet_candidate(std::mt19937_64& rng, std::uint64_t depth) {
  static constexpr std::uint8_t bases[] = {blocks::kEmpty, blocks::kX1X2, blocks::kX2X3,
                                           blocks::kX3X4,  blocks::kX4X1, blocks::kAll};
  std::uniform_int_distribution<std::uint64_t> index(0, depth);
  std::uniform_int_distribution<int> count(0, 5), kind(0, 3), block(1, 4), base(0, 5);
  BlockElement u;
  const int k = kind(rng);
  if (k <= 1) {
    for (int i = count(rng); i > 0; --i) u.perturbation.insert({2, index(rng)});
  } else {
    u.base = bases[base(rng)];
    for (int i = count(rng); i > 0; --i) u.perturbation.insert({block(rng), index(rng)});
  }
  return u;
}

BlockElement random_ex36_sup_candidate(std::mt19937_64& rng, std::uint64_t depth) {
  static constexpr std::uint8_t with_x1[] = {blocks::kX1X2, blocks::kX4X1, blocks::kAll};
  static constexpr std::uint8_t bases[] = {blocks::kEmpty, blocks::kX1X2, blocks::kX2X3,
                                           blocks::kX3X4,  blocks::kX4X1, blocks::kAll};
  std::uniform_int_distribution<std::uint64_t> index(0, depth);
  std::uniform_int_distribution<int> count(0, 5), kind(0, 3), block(1, 4), other(2, 4), pick3(0, 2), base(0, 5);
  BlockElement u;
  const int k = kind(rng);
  if (k <= 1) {
    u.base = with_x1[pick3(rng)];
    for (int i = count(rng); i > 0; --i) u.perturbation.insert({other(rng), index(rng)});
  } else {
    u.base = bases[base(rng)];
    for (int i = count(rng); i > 0; --i) u.perturbation.insert({block(rng), index(rng)});
  }
  return u;
}

}  // namespace efa::symbolic
