#include "efa/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>

#include "efa/order.hpp"

namespace efa {

namespace {

constexpr std::size_t kMaxCanonicalSize = 10;

std::uint32_t bit(unsigned v) { return std::uint32_t{1} << v; }

/// Relabeling that sends the unit to n-1 and keeps the other nonzero elements in order.
std::vector<Element> unit_last(const FiniteEffectAlgebra& algebra) {
  const auto n = algebra.size();
  std::vector<Element> map(n);
  Element next = 1;
  for (Element a = 0; a < n; ++a) {
    if (a == kZero)
      map[a] = kZero;
    else if (a == algebra.one())
      map[a] = static_cast<Element>(n - 1);
    else
      map[a] = next++;
  }
  return map;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

CanonicalForm canonical_form(const FiniteEffectAlgebra& algebra) {
  const auto n = algebra.size();
  if (n > kMaxCanonicalSize) throw EnumerationCapExceeded("canonical_form supports at most 10 elements");
  auto report = validate(algebra);
  if (!report.valid()) throw InvalidAlgebra(std::move(report));

  const auto base = algebra.relabeled(unit_last(algebra));
  const auto m = n - 2;
  // perm[i] = image of middle element i (1-based); inverse used to pull cells back.
  std::vector<Element> perm(n), inverse(n);
  std::iota(perm.begin(), perm.end(), Element{0});

  std::string best;
  std::string candidate(1 + m * (m + 1) / 2, '\0');
  candidate[0] = static_cast<char>(n);
  do {
    for (Element x = 0; x < n; ++x) inverse[perm[x]] = x;
    std::size_t pos = 1;
    for (Element i = 1; i <= m; ++i) {
      for (Element j = i; j <= m; ++j) {
        auto v = base.sum(inverse[i], inverse[j]);
        candidate[pos++] = static_cast<char>(v ? perm[*v] : 0);
      }
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin() + 1, perm.begin() + 1 + static_cast<long>(m)));
  return CanonicalForm{best};
}

namespace {

/// Depth-first completion of a partial sum table with the unit at n-1.
///
/// Each cell (a, b), 1 <= a <= b <= n-2, carries a domain bitmask: bit 0 is
/// "undefined", bit v is element v. Cells touching 0 or the unit are fixed.
/// Propagation enforces
///   - nonzero a, b: a + b not in {0, a, b} (cancellation against a + 0);
///   - injective rows (a + b = a + c implies b = c);
///   - exactly one supplement per element;
///   - strong associativity on every triple whose premise is known.
/// A branch is cut as soon as some relabeling of the middle elements maps
/// the known prefix of the table to something lexicographically smaller.
class TableSearch {
 public:
  using Leaf = std::pair<CanonicalForm, FiniteEffectAlgebra>;

  TableSearch(std::size_t n, const std::vector<std::vector<Element>>& perms)
      : n_(n), one_(static_cast<Element>(n - 1)), m_(n - 2), dom_(n * n, 0), perms_(&perms) {
    for (Element a = 1; a <= m_; ++a) {
      for (Element b = a; b <= m_; ++b) {
        std::uint32_t mask = bit(0);
        for (Element v = 1; v < n_; ++v)
          if (v != a && v != b) mask |= bit(v);
        dom_[index(a, b)] = mask;
        cells_.emplace_back(a, b);
      }
    }
  }

  bool initialize() {
    for (auto [a, b] : cells_) queue_.push_back(index(a, b));
    return propagate();
  }

  /// Explores the subtree. With split_depth set, nodes at that depth are
  /// stored as tasks instead of being expanded.
  void run(std::size_t depth, std::optional<std::size_t> split_depth) {
    ++nodes_;
    if (!canonical_prefix()) return;
    if (split_depth && depth == *split_depth) {
      tasks_.push_back(dom_);
      return;
    }
    auto open = std::find_if(cells_.begin(), cells_.end(),
                             [&](auto cell) { return !single(dom_[index(cell.first, cell.second)]); });
    if (open == cells_.end()) {
      leaf();
      return;
    }
    const auto idx = index(open->first, open->second);
    const auto choices = dom_[idx];
    for (unsigned v = 0; v < 32; ++v) {
      if (!(choices & bit(v))) continue;
      const auto mark = trail_.size();
      if (restrict(idx, bit(v)) && propagate()) run(depth + 1, split_depth);
      undo(mark);
    }
  }

  void load(const std::vector<std::uint32_t>& dom) { dom_ = dom; }

  std::vector<Leaf>& leaves() { return leaves_; }
  std::vector<std::vector<std::uint32_t>>& tasks() { return tasks_; }
  std::size_t nodes() const { return nodes_; }

 private:
  static constexpr int kUnknown = -1;
  static constexpr int kUndefined = -2;

  static bool single(std::uint32_t d) { return std::has_single_bit(d); }

  std::size_t index(Element a, Element b) const {
    if (a > b) std::swap(a, b);
    return a * n_ + b;
  }
  bool middle(Element x) const { return x != kZero && x != one_; }

  int known(Element x, Element y) const {
    if (x == kZero) return static_cast<int>(y);
    if (y == kZero) return static_cast<int>(x);
    if (x == one_ || y == one_) return kUndefined;
    const auto d = dom_[index(x, y)];
    if (!single(d)) return kUnknown;
    const auto v = std::countr_zero(d);
    return v == 0 ? kUndefined : v;
  }

  bool restrict(std::size_t idx, std::uint32_t mask) {
    const auto old = dom_[idx];
    const auto next = old & mask;
    if (next == old) return true;
    if (next == 0) return false;
    trail_.emplace_back(idx, old);
    dom_[idx] = next;
    queue_.push_back(idx);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      dom_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
    queue_.clear();
  }

  bool propagate() {
    while (!queue_.empty()) {
      const auto idx = queue_.back();
      queue_.pop_back();
      if (!process(idx)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  bool supplement_row(Element x) {
    std::size_t count = 0, last = 0;
    for (Element y = 1; y <= m_; ++y) {
      const auto idx = index(x, y);
      if (dom_[idx] & bit(one_)) {
        ++count;
        last = idx;
      }
    }
    if (count == 0) return false;
    if (count == 1) return restrict(last, bit(one_));
    return true;
  }

  // (a + b) + c exists  =>  b + c exists and a + (b + c) = (a + b) + c.
  bool triple(Element a, Element b, Element c) {
    const int d = known(a, b);
    if (d < 0) return true;
    const int e = known(static_cast<Element>(d), c);
    if (e < 0) return true;
    const int f = known(b, c);
    if (f == kUndefined) return false;
    if (f == kUnknown) {
      const auto options = dom_[index(b, c)];
      std::uint32_t mask = 0;
      for (Element g = 1; g <= m_; ++g)
        if ((options & bit(g)) && (dom_[index(a, g)] & bit(static_cast<unsigned>(e)))) mask |= bit(g);
      return restrict(index(b, c), mask);
    }
    if (!middle(static_cast<Element>(f))) return false;
    return restrict(index(a, static_cast<Element>(f)), bit(static_cast<unsigned>(e)));
  }

  bool process(std::size_t idx) {
    const auto x = static_cast<Element>(idx / n_);
    const auto y = static_cast<Element>(idx % n_);
    if (!supplement_row(x) || !supplement_row(y)) return false;
    const auto d = dom_[idx];
    if (!single(d)) return true;
    const auto v = static_cast<unsigned>(std::countr_zero(d));
    if (v != 0) {
      for (Element z = 1; z <= m_; ++z) {
        for (Element row : {x, y}) {
          const auto other = index(row, z);
          if (other != idx && !restrict(other, ~bit(v))) return false;
        }
      }
    }
    const std::pair<Element, Element> orientations[2] = {{x, y}, {y, x}};
    for (std::size_t k = 0; k < (x == y ? 1u : 2u); ++k) {
      const auto [p, q] = orientations[k];
      for (Element z = 1; z <= m_; ++z) {
        if (!triple(p, q, z) || !triple(z, p, q)) return false;
      }
      for (Element a = 1; a <= m_; ++a) {
        for (Element b = 1; b <= m_; ++b) {
          const int s = known(a, b);
          if (s == static_cast<int>(p) && !triple(a, b, q)) return false;
          if (s == static_cast<int>(q) && !triple(p, a, b)) return false;
        }
      }
    }
    return true;
  }

  int code(Element i, Element j) const {
    const auto d = dom_[index(i, j)];
    return single(d) ? std::countr_zero(d) : kUnknown;
  }

  bool canonical_prefix() const {
    for (const auto& perm : *perms_) {
      for (auto [i, j] : cells_) {
        const int mine = code(i, j);
        if (mine == kUnknown) break;
        const int theirs = code(perm[n_ + i], perm[n_ + j]);
        if (theirs == kUnknown) break;
        const int mapped = theirs == 0 ? 0 : static_cast<int>(perm[static_cast<Element>(theirs)]);
        if (mapped < mine) return false;
        if (mapped > mine) break;
      }
    }
    return true;
  }

  void leaf() {
    FiniteEffectAlgebra table(n_, one_);
    std::string bytes(1, static_cast<char>(n_));
    for (auto [a, b] : cells_) {
      const auto v = code(a, b);
      bytes += static_cast<char>(v);
      if (v != 0) table.set_sum(a, b, static_cast<Element>(v));
    }
    leaves_.emplace_back(CanonicalForm{std::move(bytes)}, std::move(table));
  }

  std::size_t n_;
  Element one_;
  Element m_;
  std::vector<std::uint32_t> dom_;
  std::vector<std::pair<Element, Element>> cells_;
  std::vector<std::pair<std::size_t, std::uint32_t>> trail_;
  std::vector<std::size_t> queue_;
  // Each entry: [0, n) the permutation, [n, 2n) its inverse.
  const std::vector<std::vector<Element>>* perms_;
  std::vector<Leaf> leaves_;
  std::vector<std::vector<std::uint32_t>> tasks_;
  std::size_t nodes_ = 0;
};

std::vector<std::vector<Element>> middle_permutations(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  const auto m = static_cast<long>(n - 2);
  while (std::next_permutation(perm.begin() + 1, perm.begin() + 1 + m)) {
    std::vector<Element> entry(2 * n);
    for (Element x = 0; x < n; ++x) {
      entry[x] = perm[x];
      entry[n + perm[x]] = x;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

EnumerationResult enumerate_up_to_iso(std::size_t n, const EnumerationOptions& options) {
  if (n < 2 || n > kMaxEnumerationSize)
    throw EnumerationCapExceeded("enumeration order must be in 2.." + std::to_string(kMaxEnumerationSize));

  const auto perms = middle_permutations(n);
  std::vector<TableSearch::Leaf> leaves;
  EnumerationResult result;
  result.size = n;

  TableSearch root(n, perms);
  if (root.initialize()) {
    if (options.jobs <= 1) {
      root.run(0, std::nullopt);
      leaves = std::move(root.leaves());
      result.nodes = root.nodes();
    } else {
      root.run(0, options.split_depth);
      leaves = std::move(root.leaves());
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> nodes{root.nodes()};
      std::mutex merge;
      auto& tasks = root.tasks();
      auto worker = [&] {
        TableSearch search(n, perms);
        for (auto t = next++; t < tasks.size(); t = next++) {
          search.load(tasks[t]);
          // The task root was already counted and checked by the splitting pass.
          search.run(options.split_depth, std::nullopt);
        }
        nodes += search.nodes();
        std::lock_guard lock(merge);
        for (auto& leaf : search.leaves()) leaves.push_back(std::move(leaf));
      };
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < options.jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      result.nodes = nodes - tasks.size();
    }
  }

  std::sort(leaves.begin(), leaves.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  for (auto& [form, table] : leaves) {
    auto report = validate(table);
    if (!report.valid()) throw std::logic_error("enumerator emitted an invalid table: " + report.violations[0].message);
    if (canonical_form(table) != form) throw std::logic_error("enumerator emitted a non-canonical table");
    if (!result.forms.empty() && result.forms.back() == form) {
      ++result.duplicates;
      continue;
    }
    result.forms.push_back(form);
    result.models.push_back(std::move(table));
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> count_up_to(std::size_t n, const EnumerationOptions& options) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 2; k <= n; ++k) out.emplace_back(k, enumerate_up_to_iso(k, options).models.size());
  return out;
}

SearchResult search(const SearchConstraint& constraint, const EnumerationOptions& options) {
  const auto& names = property_names();
  for (const auto* list : {&constraint.required, &constraint.forbidden})
    for (const auto& name : *list)
      if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::invalid_argument("unknown property '" + name + "'");

  SearchResult result;
  for (std::size_t k = 2; k <= constraint.max_size; ++k) {
    auto batch = enumerate_up_to_iso(k, options);
    for (auto& table : batch.models) {
      ++result.models_examined;
      Model model(table);
      auto p = profile(model);
      const bool ok =
          std::all_of(constraint.required.begin(), constraint.required.end(), [&](const auto& q) { return *p.flag(q); }) &&
          std::none_of(constraint.forbidden.begin(), constraint.forbidden.end(), [&](const auto& q) { return *p.flag(q); });
      if (ok) {
        result.model = std::move(table);
        result.profile = std::move(p);
        return result;
      }
    }
  }
  result.certificate = "no model of order <= " + std::to_string(constraint.max_size);
  return result;
}

}  // namespace efa
