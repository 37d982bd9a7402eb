// SPDX-License-Identifier: Apache-2.0

#include "patgen/checker.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "patgen/diag.hpp"

namespace patgen {

// ── LassoModel ──────────────────────────────────────────────────────────────

LassoModel::LassoModel(std::vector<State> prefix, std::vector<State> loop)
    : prefix_(std::move(prefix)), loop_(std::move(loop)) {
  if (loop_.empty()) {
    throw std::invalid_argument("lasso model needs a non-empty loop");
  }
}

const State& LassoModel::state_at(std::size_t position) const {
  if (position < prefix_.size()) return prefix_[position];
  position -= prefix_.size();
  if (position < loop_.size()) return loop_[position];
  throw std::out_of_range("lasso position out of range");
}

namespace {

void append_state(std::string& out, const State& state) {
  out += " {";
  bool first = true;
  for (const auto& atom : state) {
    if (!first) out += ',';
    first = false;
    out += atom;
  }
  out += '}';
}

}  // namespace

std::string LassoModel::to_string() const {
  std::string out = "prefix:";
  for (const auto& state : prefix_) append_state(out, state);
  out += " | loop:";
  for (const auto& state : loop_) append_state(out, state);
  return out;
}

// ── Compiled formula sets ───────────────────────────────────────────────────

namespace {

// Flattened view of a formula set: every distinct subformula gets one slot,
// children before parents, so a single ascending pass evaluates bottom-up.
struct CompiledSet {
  std::vector<std::string> atoms;  // sorted; index = bit position
  std::unordered_map<std::string, int> atom_bit;

  std::vector<Formula> closure;  // children precede parents
  std::unordered_map<Formula, int, FormulaHash> index;
  std::vector<Formula::Kind> kind;
  std::vector<int> left;           // child slot (-1 if none)
  std::vector<int> right;          // right child slot (-1 if none)
  std::vector<int> atom;           // atom bit (Atom slots only)
  std::vector<int> temporal_slot;  // dense index among <> and [] slots, or -1
  int temporal_count = 0;
  std::vector<int> roots;  // slots of the input formulas
};

int compile_formula(CompiledSet& c, const Formula& f) {
  auto it = c.index.find(f);
  if (it != c.index.end()) return it->second;
  int l = -1;
  int r = -1;
  if (f.is_unary()) {
    l = compile_formula(c, f.operand());
  } else if (f.is_binary()) {
    l = compile_formula(c, f.lhs());
    r = compile_formula(c, f.rhs());
  }
  int slot = static_cast<int>(c.closure.size());
  c.closure.push_back(f);
  c.index.emplace(f, slot);
  c.kind.push_back(f.kind());
  c.left.push_back(l);
  c.right.push_back(r);
  bool temporal = f.kind() == Formula::Kind::Eventually ||
                  f.kind() == Formula::Kind::Always;
  c.temporal_slot.push_back(temporal ? c.temporal_count++ : -1);
  if (f.kind() == Formula::Kind::Atom) {
    c.atom.push_back(c.atom_bit.at(f.atom_name()));
  } else {
    c.atom.push_back(-1);
  }
  return slot;
}

CompiledSet compile(const std::vector<Formula>& formulas) {
  CompiledSet c;
  std::set<std::string> atom_set;
  for (const auto& f : formulas) {
    auto atoms = atoms_of(f);
    atom_set.insert(atoms.begin(), atoms.end());
  }
  c.atoms.assign(atom_set.begin(), atom_set.end());
  for (std::size_t i = 0; i < c.atoms.size(); ++i) {
    c.atom_bit.emplace(c.atoms[i], static_cast<int>(i));
  }
  for (const auto& f : formulas) {
    c.roots.push_back(compile_formula(c, f));
  }
  return c;
}

// ── Direct evaluation over an explicit state sequence ───────────────────────

// Truth tables packed one bit per position; handles total sizes up to 64.
class DirectEvaluator {
 public:
  explicit DirectEvaluator(const CompiledSet& c) : c_(c), bits_(c.closure.size()) {}

  // seq holds prefix states then loop states as atom bitmasks.
  bool satisfied(const std::vector<std::uint32_t>& seq, int prefix_len) {
    const int t = static_cast<int>(seq.size());
    const std::uint64_t all =
        t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
    const std::uint64_t prefix_mask = (std::uint64_t{1} << prefix_len) - 1;
    const std::uint64_t loop_mask = all ^ prefix_mask;

    const std::size_t n = c_.closure.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
      std::uint64_t out = 0;
      switch (c_.kind[idx]) {
        case Formula::Kind::Atom: {
          const int bit = c_.atom[idx];
          for (int i = 0; i < t; ++i) {
            if ((seq[i] >> bit) & 1u) out |= std::uint64_t{1} << i;
          }
          break;
        }
        case Formula::Kind::Not:
          out = ~bits_[c_.left[idx]] & all;
          break;
        case Formula::Kind::And:
          out = bits_[c_.left[idx]] & bits_[c_.right[idx]];
          break;
        case Formula::Kind::Or:
          out = bits_[c_.left[idx]] | bits_[c_.right[idx]];
          break;
        case Formula::Kind::Implies:
          out = (~bits_[c_.left[idx]] & all) | bits_[c_.right[idx]];
          break;
        case Formula::Kind::Eventually: {
          const std::uint64_t child = bits_[c_.left[idx]];
          // Every loop position sees the whole loop again, so <>g is one
          // shared value there; prefix positions fold right to left.
          out = (child & loop_mask) != 0 ? loop_mask : 0;
          for (int i = prefix_len - 1; i >= 0; --i) {
            const bool here = ((child >> i) & 1u) != 0;
            const bool next = ((out >> (i + 1)) & 1u) != 0;
            if (here || next) out |= std::uint64_t{1} << i;
          }
          break;
        }
        case Formula::Kind::Always: {
          const std::uint64_t child = bits_[c_.left[idx]];
          out = (child & loop_mask) == loop_mask ? loop_mask : 0;
          for (int i = prefix_len - 1; i >= 0; --i) {
            const bool here = ((child >> i) & 1u) != 0;
            const bool next = ((out >> (i + 1)) & 1u) != 0;
            if (here && next) out |= std::uint64_t{1} << i;
          }
          break;
        }
      }
      bits_[idx] = out;
    }
    for (int root : c_.roots) {
      if ((bits_[root] & 1u) == 0) return false;
    }
    return true;
  }

 private:
  const CompiledSet& c_;
  std::vector<std::uint64_t> bits_;
};

// ── Canonical enumeration ───────────────────────────────────────────────────

constexpr std::uint64_t kCountCap = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kCountCap / a) return kCountCap;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  if (b > kCountCap - a) return kCountCap;
  return a + b;
}

// Number of (prefix, loop) candidates within the bounds for `states`
// distinct states per position; saturates instead of overflowing.
std::uint64_t candidate_count(std::uint64_t states, int max_prefix,
                              int max_loop) {
  std::uint64_t total = 0;
  std::uint64_t seqs = 1;
  const long long t_max =
      static_cast<long long>(max_prefix) + static_cast<long long>(max_loop);
  for (long long t = 1; t <= t_max; ++t) {
    seqs = saturating_mul(seqs, states);
    const long long p_lo = std::max<long long>(0, t - max_loop);
    const long long p_hi = std::min<long long>(max_prefix, t - 1);
    if (p_hi < p_lo) continue;
    const auto ways = static_cast<std::uint64_t>(p_hi - p_lo + 1);
    total = saturating_add(total, saturating_mul(ways, seqs));
    if (total == kCountCap) break;
  }
  return total;
}

struct DirectSearchOutcome {
  std::optional<std::pair<int, std::vector<std::uint32_t>>> witness;
  bool completed = false;  // the whole requested range was enumerated
};

// Enumerates candidates in the canonical order — total size ascending,
// prefix length ascending, lexicographic over the state sequence — for
// total sizes in [t_lo, t_hi], stopping at the first satisfying lasso or
// after `budget` candidates.
DirectSearchOutcome enumerate_direct(const CompiledSet& c, int max_prefix,
                                     int max_loop, int t_lo, int t_hi,
                                     std::uint64_t budget) {
  DirectSearchOutcome outcome;
  const auto states = std::uint32_t{1} << c.atoms.size();
  DirectEvaluator eval(c);
  std::uint64_t used = 0;
  for (int t = t_lo; t <= t_hi; ++t) {
    if (t > 64) return outcome;  // budget always runs out first in practice
    for (int p = std::max(0, t - max_loop); p <= std::min(max_prefix, t - 1);
         ++p) {
      std::vector<std::uint32_t> seq(static_cast<std::size_t>(t), 0);
      for (;;) {
        if (used == budget) return outcome;
        ++used;
        if (eval.satisfied(seq, p)) {
          outcome.witness = {p, seq};
          return outcome;
        }
        // Odometer: the last position varies fastest.
        int i = t - 1;
        while (i >= 0 && seq[i] + 1 == states) {
          seq[i] = 0;
          --i;
        }
        if (i < 0) break;
        ++seq[i];
      }
    }
  }
  outcome.completed = true;
  return outcome;
}

// ── Abstract search (loop sets + prefix truth vectors) ──────────────────────
//
// Loop positions all see the same future — the set of valuations that recur
// forever — so the truth of every subformula at a loop position depends
// only on that position's valuation and the recurring set S.  A prefix
// position's truth vector follows from its valuation and the successor's
// truth vector.  Searching over (S, prefix length) therefore covers every
// lasso within the bounds while visiting exponentially fewer candidates,
// and the minimal total size found equals the minimal total size over raw
// state sequences (collapsing duplicate loop valuations never grows a
// witness).

using TruthVec = std::vector<std::uint64_t>;  // one bit per closure slot

struct TruthVecHash {
  std::size_t operator()(const TruthVec& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t block : v) {
      h ^= block;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline bool vec_get(const TruthVec& v, int bit) {
  return (v[static_cast<std::size_t>(bit) >> 6] >>
          (static_cast<std::size_t>(bit) & 63)) &
         1u;
}

inline void vec_set(TruthVec& v, int bit, bool value) {
  const std::size_t block = static_cast<std::size_t>(bit) >> 6;
  const std::uint64_t mask = std::uint64_t{1} << (static_cast<std::size_t>(bit) & 63);
  if (value) {
    v[block] |= mask;
  } else {
    v[block] &= ~mask;
  }
}

class AbstractSearch {
 public:
  AbstractSearch(const CompiledSet& c, SearchBounds bounds,
                 std::uint64_t step_limit)
      : c_(c),
        bounds_(bounds),
        step_limit_(step_limit),
        full_blocks_((c.closure.size() + 63) / 64),
        temporal_blocks_(
            std::max<std::size_t>(1, (static_cast<std::size_t>(c.temporal_count) + 63) / 64)) {}

  // Minimal total witness size within the bounds, or nullopt when no lasso
  // within the bounds satisfies the set.  Throws BoundOverflowError when
  // the step limit is hit first.
  std::optional<int> minimal_total() {
    const auto universe = std::uint32_t{1} << c_.atoms.size();
    const int max_set =
        static_cast<int>(std::min<std::uint64_t>(bounds_.max_loop, universe));
    int best = std::numeric_limits<int>::max();

    std::vector<std::uint32_t> subsets;
    subsets.reserve((std::size_t{1} << universe) - 1);
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << universe); ++m) {
      if (__builtin_popcount(m) <= max_set) subsets.push_back(m);
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                       return __builtin_popcount(a) < __builtin_popcount(b);
                     });

    for (std::uint32_t subset : subsets) {
      const int s = __builtin_popcount(subset);
      if (s >= best) break;  // sorted by size: nothing later can improve
      explore_set(subset, s, best);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
  }

 private:
  // Truth vectors shared by every position of a loop whose recurring
  // valuation set is `subset`: one vector per member valuation.
  std::vector<TruthVec> loop_vectors(std::uint32_t subset) {
    std::vector<std::uint32_t> vals;
    for (std::uint32_t v = 0; v < 32; ++v) {
      if ((subset >> v) & 1u) vals.push_back(v);
    }
    std::vector<TruthVec> vecs(vals.size(), TruthVec(full_blocks_, 0));
    const std::size_t n = c_.closure.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
      switch (c_.kind[idx]) {
        case Formula::Kind::Atom:
          for (std::size_t k = 0; k < vals.size(); ++k) {
            vec_set(vecs[k], static_cast<int>(idx),
                    ((vals[k] >> c_.atom[idx]) & 1u) != 0);
          }
          break;
        case Formula::Kind::Not:
          for (auto& vec : vecs) {
            vec_set(vec, static_cast<int>(idx), !vec_get(vec, c_.left[idx]));
          }
          break;
        case Formula::Kind::And:
          for (auto& vec : vecs) {
            vec_set(vec, static_cast<int>(idx),
                    vec_get(vec, c_.left[idx]) && vec_get(vec, c_.right[idx]));
          }
          break;
        case Formula::Kind::Or:
          for (auto& vec : vecs) {
            vec_set(vec, static_cast<int>(idx),
                    vec_get(vec, c_.left[idx]) || vec_get(vec, c_.right[idx]));
          }
          break;
        case Formula::Kind::Implies:
          for (auto& vec : vecs) {
            vec_set(vec, static_cast<int>(idx),
                    !vec_get(vec, c_.left[idx]) || vec_get(vec, c_.right[idx]));
          }
          break;
        case Formula::Kind::Eventually: {
          // The future of a loop position is the whole recurring set, so
          // the value is shared by every member.
          bool any = false;
          for (const auto& vec : vecs) any = any || vec_get(vec, c_.left[idx]);
          for (auto& vec : vecs) vec_set(vec, static_cast<int>(idx), any);
          break;
        }
        case Formula::Kind::Always: {
          bool all = true;
          for (const auto& vec : vecs) all = all && vec_get(vec, c_.left[idx]);
          for (auto& vec : vecs) vec_set(vec, static_cast<int>(idx), all);
          break;
        }
      }
    }
    return vecs;
  }

  // Truth vector of a position with valuation v whose successor position
  // has the given temporal truths.
  TruthVec step(std::uint32_t v, const TruthVec& next_temporal) {
    TruthVec out(full_blocks_, 0);
    const std::size_t n = c_.closure.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
      bool value = false;
      switch (c_.kind[idx]) {
        case Formula::Kind::Atom:
          value = ((v >> c_.atom[idx]) & 1u) != 0;
          break;
        case Formula::Kind::Not:
          value = !vec_get(out, c_.left[idx]);
          break;
        case Formula::Kind::And:
          value = vec_get(out, c_.left[idx]) && vec_get(out, c_.right[idx]);
          break;
        case Formula::Kind::Or:
          value = vec_get(out, c_.left[idx]) || vec_get(out, c_.right[idx]);
          break;
        case Formula::Kind::Implies:
          value = !vec_get(out, c_.left[idx]) || vec_get(out, c_.right[idx]);
          break;
        case Formula::Kind::Eventually:
          value = vec_get(out, c_.left[idx]) ||
                  vec_get(next_temporal, c_.temporal_slot[idx]);
          break;
        case Formula::Kind::Always:
          value = vec_get(out, c_.left[idx]) &&
                  vec_get(next_temporal, c_.temporal_slot[idx]);
          break;
      }
      vec_set(out, static_cast<int>(idx), value);
    }
    return out;
  }

  bool accepts(const TruthVec& full) const {
    for (int root : c_.roots) {
      if (!vec_get(full, root)) return false;
    }
    return true;
  }

  TruthVec project(const TruthVec& full) const {
    TruthVec proj(temporal_blocks_, 0);
    const std::size_t n = c_.closure.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
      if (c_.temporal_slot[idx] >= 0) {
        vec_set(proj, c_.temporal_slot[idx], vec_get(full, static_cast<int>(idx)));
      }
    }
    return proj;
  }

  void charge(std::uint64_t amount) {
    steps_ += amount;
    if (steps_ > step_limit_) {
      throw BoundOverflowError(
          "satisfiability search exceeded its step limit before covering "
          "the requested bounds");
    }
  }

  void explore_set(std::uint32_t subset, int set_size, int& best) {
    charge(static_cast<std::uint64_t>(set_size));
    std::vector<TruthVec> members = loop_vectors(subset);

    // Prefix length 0: position 0 is the first loop position.
    for (const auto& full : members) {
      if (accepts(full)) {
        best = std::min(best, set_size);
        return;
      }
    }

    // BFS over successor truth vectors; only the temporal bits matter for
    // the next step, so states are deduplicated on that projection.
    std::unordered_set<TruthVec, TruthVecHash> seen;
    std::vector<TruthVec> frontier;
    for (const auto& full : members) {
      TruthVec proj = project(full);
      if (seen.insert(proj).second) frontier.push_back(std::move(proj));
    }

    const auto universe = std::uint32_t{1} << c_.atoms.size();
    for (int level = 1; level <= bounds_.max_prefix; ++level) {
      if (set_size + level >= best) return;
      std::vector<TruthVec> next_frontier;
      for (const auto& tau : frontier) {
        for (std::uint32_t v = 0; v < universe; ++v) {
          charge(1);
          TruthVec full = step(v, tau);
          if (accepts(full)) {
            best = std::min(best, set_size + level);
            return;
          }
          TruthVec proj = project(full);
          if (seen.insert(proj).second) next_frontier.push_back(std::move(proj));
        }
      }
      if (next_frontier.empty()) return;  // saturated: deeper prefixes add nothing
      frontier = std::move(next_frontier);
    }
  }

  const CompiledSet& c_;
  SearchBounds bounds_;
  std::uint64_t step_limit_;
  std::size_t full_blocks_;
  std::size_t temporal_blocks_;
  std::uint64_t steps_ = 0;
};

LassoModel model_from_masks(const CompiledSet& c,
                            const std::vector<std::uint32_t>& seq,
                            int prefix_len) {
  auto state_of = [&](std::uint32_t mask) {
    State state;
    for (std::size_t i = 0; i < c.atoms.size(); ++i) {
      if ((mask >> i) & 1u) state.insert(c.atoms[i]);
    }
    return state;
  };
  std::vector<State> prefix;
  std::vector<State> loop;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (static_cast<int>(i) < prefix_len) {
      prefix.push_back(state_of(seq[i]));
    } else {
      loop.push_back(state_of(seq[i]));
    }
  }
  return LassoModel(std::move(prefix), std::move(loop));
}

}  // namespace

// ── eval_at ─────────────────────────────────────────────────────────────────

bool eval_at(const Formula& f, const LassoModel& m, std::size_t position) {
  if (position >= m.size()) {
    throw std::out_of_range("position outside the unrolled lasso");
  }
  CompiledSet c = compile({f});
  const std::size_t total = m.size();
  const std::size_t prefix_len = m.prefix().size();

  std::vector<std::vector<char>> table(c.closure.size(),
                                       std::vector<char>(total, 0));
  for (std::size_t idx = 0; idx < c.closure.size(); ++idx) {
    auto& row = table[idx];
    switch (c.kind[idx]) {
      case Formula::Kind::Atom: {
        const std::string& name = c.closure[idx].atom_name();
        for (std::size_t i = 0; i < total; ++i) {
          row[i] = m.state_at(i).count(name) ? 1 : 0;
        }
        break;
      }
      case Formula::Kind::Not:
        for (std::size_t i = 0; i < total; ++i) {
          row[i] = !table[c.left[idx]][i];
        }
        break;
      case Formula::Kind::And:
        for (std::size_t i = 0; i < total; ++i) {
          row[i] = table[c.left[idx]][i] && table[c.right[idx]][i];
        }
        break;
      case Formula::Kind::Or:
        for (std::size_t i = 0; i < total; ++i) {
          row[i] = table[c.left[idx]][i] || table[c.right[idx]][i];
        }
        break;
      case Formula::Kind::Implies:
        for (std::size_t i = 0; i < total; ++i) {
          row[i] = !table[c.left[idx]][i] || table[c.right[idx]][i];
        }
        break;
      case Formula::Kind::Eventually: {
        const auto& child = table[c.left[idx]];
        // A loop position's future wraps around the whole loop.
        char any = 0;
        for (std::size_t i = prefix_len; i < total; ++i) any |= child[i];
        for (std::size_t i = prefix_len; i < total; ++i) row[i] = any;
        for (std::size_t i = prefix_len; i-- > 0;) {
          row[i] = child[i] || row[i + 1];
        }
        break;
      }
      case Formula::Kind::Always: {
        const auto& child = table[c.left[idx]];
        char all = 1;
        for (std::size_t i = prefix_len; i < total; ++i) {
          all = all && child[i];
        }
        for (std::size_t i = prefix_len; i < total; ++i) row[i] = all;
        for (std::size_t i = prefix_len; i-- > 0;) {
          row[i] = child[i] && row[i + 1];
        }
        break;
      }
    }
  }
  return table[c.roots.front()][position] != 0;
}

// ── Bounds ──────────────────────────────────────────────────────────────────

SearchBounds completeness_threshold(int atom_count) {
  if (atom_count < 0) {
    throw std::invalid_argument("negative atom count");
  }
  constexpr long long cap = std::numeric_limits<int>::max();
  long long prefix = 1;
  long long loop = 1;
  for (int i = 0; i < atom_count; ++i) {
    prefix = std::min(prefix * 4, cap);
    loop = std::min(loop * 2, cap);
  }
  return {static_cast<int>(prefix), static_cast<int>(loop)};
}

// ── check_sat ───────────────────────────────────────────────────────────────

std::string CheckResult::to_string() const {
  std::ostringstream out;
  switch (verdict) {
    case Verdict::Satisfiable:
      out << "satisfiable";
      if (witness) out << "; witness: " << witness->to_string();
      break;
    case Verdict::Unsatisfiable:
      out << "unsatisfiable (exhaustive for prefix <= " << bounds.max_prefix
          << ", loop <= " << bounds.max_loop << ")";
      break;
    case Verdict::Unknown:
      out << "unknown (no model with prefix <= " << bounds.max_prefix
          << ", loop <= " << bounds.max_loop
          << "; bounds below the completeness threshold)";
      break;
  }
  return out.str();
}

CheckResult check_sat(const std::vector<Formula>& formulas,
                      SearchBounds bounds, SearchLimits limits) {
  if (formulas.empty()) {
    throw std::invalid_argument("no formulas to check");
  }
  if (bounds.max_prefix < 0) {
    throw std::invalid_argument("max_prefix must be non-negative");
  }
  if (bounds.max_loop < 1) {
    throw std::invalid_argument("max_loop must be at least 1");
  }

  CompiledSet c = compile(formulas);
  const int n = static_cast<int>(c.atoms.size());
  if (n > 31) {
    throw std::invalid_argument(
        "formula set has too many distinct atoms for bounded search (limit "
        "31)");
  }

  const SearchBounds threshold = completeness_threshold(n);
  const bool covers_threshold = bounds.max_prefix >= threshold.max_prefix &&
                                bounds.max_loop >= threshold.max_loop;

  auto finish_satisfiable = [&](const std::vector<std::uint32_t>& seq,
                                int prefix_len) {
    LassoModel witness = model_from_masks(c, seq, prefix_len);
    for (const auto& f : formulas) {
      if (!eval_at(f, witness, 0)) {
        throw std::logic_error(
            "internal error: search produced a model that fails "
            "re-verification");
      }
    }
    CheckResult result;
    result.verdict = CheckResult::Verdict::Satisfiable;
    result.witness = std::move(witness);
    result.exhaustive = false;
    result.bounds = bounds;
    return result;
  };

  auto finish_negative = [&](bool covered_everything) {
    CheckResult result;
    if (covered_everything && covers_threshold) {
      result.verdict = CheckResult::Verdict::Unsatisfiable;
    } else {
      result.verdict = CheckResult::Verdict::Unknown;
    }
    result.exhaustive = covered_everything;
    result.bounds = bounds;
    return result;
  };

  const std::uint64_t total_candidates = candidate_count(
      std::uint64_t{1} << n, bounds.max_prefix, bounds.max_loop);
  // Total sizes beyond 65 never get evaluated: with at least two states the
  // candidate budget is spent long before, and enumerate_direct stops there.
  const int max_total = static_cast<int>(
      std::min<long long>(static_cast<long long>(bounds.max_prefix) +
                              static_cast<long long>(bounds.max_loop),
                          65));

  if (total_candidates <= limits.max_candidates) {
    // Small enough to enumerate outright in the canonical order.
    DirectSearchOutcome outcome =
        enumerate_direct(c, bounds.max_prefix, bounds.max_loop, 1, max_total,
                         total_candidates);
    if (outcome.witness) {
      return finish_satisfiable(outcome.witness->second,
                                outcome.witness->first);
    }
    return finish_negative(true);
  }

  if (n <= 4) {
    // Abstract search decides the bounds exactly and yields the minimal
    // total witness size; the canonical first witness is then recovered by
    // enumerating that size only.
    AbstractSearch search(c, bounds, limits.max_abstract_steps);
    std::optional<int> minimal = search.minimal_total();
    if (!minimal) {
      return finish_negative(true);
    }
    DirectSearchOutcome outcome =
        enumerate_direct(c, bounds.max_prefix, bounds.max_loop, *minimal,
                         *minimal, limits.max_candidates);
    if (!outcome.witness) {
      if (outcome.completed) {
        throw std::logic_error(
            "internal error: witness size was established but no witness "
            "was found at that size");
      }
      throw BoundOverflowError(
          "a model exists but recovering the first witness exceeded the "
          "candidate limit");
    }
    return finish_satisfiable(outcome.witness->second,
                              outcome.witness->first);
  }

  // Too many atoms for the abstract route: enumerate with a budget and be
  // honest when it runs out.
  DirectSearchOutcome outcome = enumerate_direct(
      c, bounds.max_prefix, bounds.max_loop, 1, max_total,
      limits.max_candidates);
  if (outcome.witness) {
    return finish_satisfiable(outcome.witness->second, outcome.witness->first);
  }
  if (outcome.completed) {
    return finish_negative(true);
  }
  throw BoundOverflowError(
      "satisfiability search exhausted its candidate limit before covering "
      "the requested bounds; tighten the bounds or raise the limits");
}

CheckResult check_pattern(const PatternDefinition& def, SearchBounds bounds,
                          SearchLimits limits) {
  return check_sat(consistency_obligations(def), bounds, limits);
}

CheckResult check_specification(const Specification& spec, SearchBounds bounds,
                                SearchLimits limits) {
  if (spec.empty()) {
    throw std::invalid_argument(
        "the specification is empty; nothing to check");
  }
  return check_sat(spec.formulas(), bounds, limits);
}

}  // namespace patgen
