#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "hopfcalc/errors.hpp"
#include "hopfcalc/fusion.hpp"
#include "hopfcalc/signature.hpp"

namespace hopfcalc {

struct SearchOptions {
  AxiomProfile profile = AxiomProfile::hopf_profile();
  long long budget = 10'000'000;  // node limit
  int threads = 0;                // 0 = hardware concurrency
  int max_basis = 12;
  int frontier_depth = 3;
};

struct SearchOutcome {
  enum class Status { Feasible, Infeasible, Inconclusive };
  Status status = Status::Inconclusive;
  long long nodes = 0;
  std::optional<FusionDatum> witness;
  std::map<std::string, long long> failures;  // refutations per constraint kind
  std::string first_failure;
  int dual_patterns = 0;
  int subproblems = 0;

  std::string status_name() const {
    switch (status) {
      case Status::Feasible: return "feasible";
      case Status::Infeasible: return "infeasible";
      default: return "inconclusive";
    }
  }
};

namespace detail {

/// Dualities of a sorted degree list up to relabeling inside each degree
/// block: the first f elements of a block are self-dual, the rest are paired
/// with their neighbour. Index 0 (the unit) is always self-dual.
inline std::vector<std::vector<int>> canonical_dual_patterns(const std::vector<int>& degrees) {
  std::vector<std::pair<int, int>> blocks;  // (start, size)
  for (int i = 0; i < static_cast<int>(degrees.size());) {
    int j = i;
    while (j < static_cast<int>(degrees.size()) && degrees[static_cast<std::size_t>(j)] == degrees[static_cast<std::size_t>(i)]) ++j;
    blocks.emplace_back(i, j - i);
    i = j;
  }
  std::vector<std::vector<int>> out{std::vector<int>(degrees.size())};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto [start, m] = blocks[b];
    std::vector<std::vector<int>> next;
    for (const auto& base : out)
      for (int f = m; f >= (b == 0 ? 1 : 0); --f) {
        if ((m - f) % 2 != 0) continue;
        auto d = base;
        for (int t = 0; t < f; ++t) d[static_cast<std::size_t>(start + t)] = start + t;
        for (int t = f; t < m; t += 2) {
          d[static_cast<std::size_t>(start + t)] = start + t + 1;
          d[static_cast<std::size_t>(start + t + 1)] = start + t;
        }
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

/// Static description of the constraint network for one degree list and
/// duality: Frobenius orbits of triples as variables, degree rows, and
/// deferred checks that fire once their variables are fixed.
struct SearchModel {
  enum class Kind { Associativity, StabilizerOrder, StabilizerExponent, NrDichotomy };
  struct Row {
    std::vector<std::pair<int, int>> terms;  // (variable, coefficient)
    int target = 0;
  };
  struct Check {
    Kind kind;
    std::array<int, 4> args{};
    std::vector<int> deps;
  };

  int r = 0;
  std::vector<int> degrees, dual;
  AxiomProfile profile;
  std::vector<int> var_of;                           // triple -> variable
  std::vector<std::vector<int>> members;             // variable -> triples
  std::vector<int> init_lo, init_hi;
  std::vector<Row> rows;
  std::vector<std::vector<int>> rows_of;             // variable -> rows
  std::vector<Check> checks;
  std::vector<std::vector<int>> checks_of;           // variable -> checks
  std::vector<int> order;                            // branching order

  int triple(int i, int j, int k) const { return (i * r + j) * r + k; }
  int var(int i, int j, int k) const { return var_of[static_cast<std::size_t>(triple(i, j, k))]; }
  int deg(int i) const { return degrees[static_cast<std::size_t>(i)]; }
  int star(int i) const { return dual[static_cast<std::size_t>(i)]; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::Associativity: return "associativity";
      case Kind::StabilizerOrder: return "stabilizer-order";
      case Kind::StabilizerExponent: return "stabilizer-exponent";
      default: return "nr-dichotomy";
    }
  }

  SearchModel(std::vector<int> deg, std::vector<int> du, AxiomProfile prof)
      : r(static_cast<int>(deg.size())), degrees(std::move(deg)), dual(std::move(du)), profile(prof) {
    build_orbits();
    build_bounds();
    build_rows();
    build_checks();
    build_order();
  }

 private:
  void build_orbits() {
    var_of.assign(static_cast<std::size_t>(r * r * r), -1);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
          if (var(i, j, k) >= 0) continue;
          const int v = static_cast<int>(members.size());
          std::vector<int> orbit;
          std::vector<std::array<int, 3>> todo{{i, j, k}};
          var_of[static_cast<std::size_t>(triple(i, j, k))] = v;
          while (!todo.empty()) {
            auto [a, b, c] = todo.back();
            todo.pop_back();
            orbit.push_back(triple(a, b, c));
            const std::array<std::array<int, 3>, 2> next{{{star(a), c, b}, {b, star(c), star(a)}}};
            for (const auto& t : next) {
              auto& slot = var_of[static_cast<std::size_t>(triple(t[0], t[1], t[2]))];
              if (slot < 0) {
                slot = v;
                todo.push_back(t);
              }
            }
          }
          std::sort(orbit.begin(), orbit.end());
          members.push_back(std::move(orbit));
        }
  }

  void build_bounds() {
    const int nv = static_cast<int>(members.size());
    init_lo.assign(static_cast<std::size_t>(nv), 0);
    init_hi.assign(static_cast<std::size_t>(nv), 1 << 20);
    auto fix = [&](int v, int value) {
      init_lo[static_cast<std::size_t>(v)] = std::max(init_lo[static_cast<std::size_t>(v)], value);
      init_hi[static_cast<std::size_t>(v)] = std::min(init_hi[static_cast<std::size_t>(v)], value);
    };
    for (int v = 0; v < nv; ++v)
      for (int t : members[static_cast<std::size_t>(v)]) {
        const int a = t / (r * r), b = t / r % r, c = t % r;
        auto& hi = init_hi[static_cast<std::size_t>(v)];
        hi = std::min(hi, deg(a) * deg(b) / deg(c));
        if (deg(c) == 1 && b == star(a)) hi = std::min(hi, 1);
        if ((deg(a) == 1 && deg(c) != deg(b)) || (deg(b) == 1 && deg(c) != deg(a))) hi = 0;
      }
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        fix(var(0, j, k), j == k ? 1 : 0);
        fix(var(j, 0, k), j == k ? 1 : 0);
        fix(var(j, k, 0), k == star(j) ? 1 : 0);
      }
  }

  void build_rows() {
    rows_of.assign(members.size(), {});
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Row row;
        row.target = deg(i) * deg(j);
        std::map<int, int> coef;
        for (int k = 0; k < r; ++k) coef[var(i, j, k)] += deg(k);
        for (auto [v, c] : coef) {
          row.terms.emplace_back(v, c);
          rows_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(rows.size()));
        }
        rows.push_back(std::move(row));
      }
  }

  void add_check(Kind kind, std::array<int, 4> args, std::vector<int> deps) {
    std::sort(deps.begin(), deps.end());
    deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
    checks.push_back({kind, args, std::move(deps)});
  }

  void build_checks() {
    for (int i = 1; i < r; ++i)
      for (int j = 1; j < r; ++j)
        for (int k = 1; k < r; ++k)
          for (int l = 0; l < r; ++l) {
            std::vector<int> deps;
            for (int t = 0; t < r; ++t) {
              deps.push_back(var(i, j, t));
              deps.push_back(var(t, k, l));
              deps.push_back(var(j, k, t));
              deps.push_back(var(i, t, l));
            }
            add_check(Kind::Associativity, {i, j, k, l}, std::move(deps));
          }
    if (profile.hopf) {
      std::vector<int> ones, group_table;
      for (int g = 0; g < r; ++g)
        if (deg(g) == 1) ones.push_back(g);
      for (int g : ones)
        for (int h : ones)
          for (int k = 0; k < r; ++k) group_table.push_back(var(g, h, k));
      std::vector<int> all_stabs;
      for (int x = 0; x < r; ++x)
        for (int g : ones) all_stabs.push_back(var(g, x, x));
      for (int i = 1; i < r; ++i) {
        std::vector<int> stab;
        for (int g : ones) stab.push_back(var(g, i, i));
        add_check(Kind::StabilizerOrder, {i, 0, 0, 0}, stab);
        auto deps = stab;
        deps.insert(deps.end(), group_table.begin(), group_table.end());
        add_check(Kind::StabilizerExponent, {i, 0, 0, 0}, std::move(deps));
        if (deg(i) == 2) {
          auto nr = all_stabs;
          for (int k = 0; k < r; ++k) nr.push_back(var(i, star(i), k));
          for (int x = 0; x < r; ++x)
            if (deg(x) == 3)
              for (int k = 0; k < r; ++k) nr.push_back(var(x, x, k));
          add_check(Kind::NrDichotomy, {i, 0, 0, 0}, std::move(nr));
        }
      }
    }
    checks_of.assign(members.size(), {});
    for (std::size_t c = 0; c < checks.size(); ++c)
      for (int v : checks[c].deps) checks_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
  }

  void build_order() {
    const int nv = static_cast<int>(members.size());
    std::vector<std::tuple<int, int, int, int>> keys;
    for (int v = 0; v < nv; ++v) {
      int best_dual = -1, max_deg = 0;
      for (int t : members[static_cast<std::size_t>(v)]) {
        const int a = t / (r * r), b = t / r % r, c = t % r;
        if (b == star(a) && (best_dual < 0 || deg(a) < best_dual)) best_dual = deg(a);
        max_deg = std::max({max_deg, deg(a), deg(b), deg(c)});
      }
      const int rep = members[static_cast<std::size_t>(v)].front();
      if (best_dual >= 0) keys.emplace_back(0, best_dual, rep, v);
      else keys.emplace_back(1, max_deg, rep, v);
    }
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) order.push_back(std::get<3>(k));
  }
};

/// Mutable search state over a shared model, with a trail for undo.
class SearchState {
 public:
  explicit SearchState(const SearchModel& m)
      : m_(m),
        lo_(m.members.size(), 0),
        hi_(m.members.size(), 1 << 20),
        pending_(m.checks.size()),
        cur_(m.degrees, m.dual, 0),
        in_queue_(m.rows.size(), 0) {
    for (std::size_t c = 0; c < m.checks.size(); ++c) pending_[c] = static_cast<int>(m.checks[c].deps.size());
  }

  long long nodes = 0;
  std::map<std::string, long long> failures;
  std::string first_failure;

  /// Applies the initial bounds; false when the model is refuted at the root.
  bool init() {
    for (std::size_t v = 0; v < m_.members.size(); ++v)
      if (!tighten(static_cast<int>(v), m_.init_lo[v], m_.init_hi[v])) return false;
    for (std::size_t row = 0; row < m_.rows.size(); ++row) enqueue(static_cast<int>(row));
    return propagate();
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [v, lo, hi] = trail_.back();
      trail_.pop_back();
      const auto sv = static_cast<std::size_t>(v);
      if (lo_[sv] == hi_[sv] && lo != hi)
        for (int c : m_.checks_of[sv]) ++pending_[static_cast<std::size_t>(c)];
      lo_[sv] = lo;
      hi_[sv] = hi;
    }
  }

  bool assign(int v, int value) {
    if (!tighten(v, value, value)) return false;
    return propagate();
  }

  int next_unfixed() const {
    for (int v : m_.order)
      if (lo_[static_cast<std::size_t>(v)] != hi_[static_cast<std::size_t>(v)]) return v;
    return -1;
  }
  int lo(int v) const { return lo_[static_cast<std::size_t>(v)]; }
  int hi(int v) const { return hi_[static_cast<std::size_t>(v)]; }

  FusionDatum datum() const {
    FusionDatum f(m_.degrees, m_.dual, 0);
    for (std::size_t v = 0; v < m_.members.size(); ++v)
      for (int t : m_.members[v]) f.constants[static_cast<std::size_t>(t)] = lo_[v];
    return f;
  }

  void fail(const std::string& kind, const std::string& detail) {
    ++failures[kind];
    if (first_failure.empty()) first_failure = kind + ": " + detail;
  }

 private:
  const SearchModel& m_;
  std::vector<int> lo_, hi_;
  std::vector<std::tuple<int, int, int>> trail_;
  std::vector<int> pending_;
  FusionDatum cur_;
  std::vector<int> queue_;
  std::vector<char> in_queue_;

  void enqueue(int row) {
    if (!in_queue_[static_cast<std::size_t>(row)]) {
      in_queue_[static_cast<std::size_t>(row)] = 1;
      queue_.push_back(row);
    }
  }

  void clear_queue() {
    for (int row : queue_) in_queue_[static_cast<std::size_t>(row)] = 0;
    queue_.clear();
  }

  bool tighten(int v, int lo, int hi) {
    const auto sv = static_cast<std::size_t>(v);
    lo = std::max(lo, lo_[sv]);
    hi = std::min(hi, hi_[sv]);
    if (lo == lo_[sv] && hi == hi_[sv]) return true;
    if (lo > hi) {
      fail("bounds", "variable " + std::to_string(v) + " has no value left");
      return false;
    }
    const bool was_fixed = lo_[sv] == hi_[sv];
    trail_.emplace_back(v, lo_[sv], hi_[sv]);
    lo_[sv] = lo;
    hi_[sv] = hi;
    for (int row : m_.rows_of[sv]) enqueue(row);
    if (!was_fixed && lo == hi) return on_fixed(v);
    return true;
  }

  bool on_fixed(int v) {
    const auto sv = static_cast<std::size_t>(v);
    for (int t : m_.members[sv]) cur_.constants[static_cast<std::size_t>(t)] = lo_[sv];
    for (int c : m_.checks_of[sv]) --pending_[static_cast<std::size_t>(c)];
    for (int c : m_.checks_of[sv])
      if (pending_[static_cast<std::size_t>(c)] <= 1 && !evaluate(c)) return false;
    return true;
  }

  bool evaluate(int c) {
    const auto& ck = m_.checks[static_cast<std::size_t>(c)];
    const bool complete = pending_[static_cast<std::size_t>(c)] == 0;
    const int i = ck.args[0];
    switch (ck.kind) {
      case SearchModel::Kind::Associativity: {
        const int j = ck.args[1], k = ck.args[2], l = ck.args[3];
        long long amin = 0, amax = 0, bmin = 0, bmax = 0;
        for (int t = 0; t < m_.r; ++t) {
          const int x = m_.var(i, j, t), y = m_.var(t, k, l), z = m_.var(j, k, t), w = m_.var(i, t, l);
          amin += static_cast<long long>(lo(x)) * lo(y);
          amax += static_cast<long long>(hi(x)) * hi(y);
          bmin += static_cast<long long>(lo(z)) * lo(w);
          bmax += static_cast<long long>(hi(z)) * hi(w);
        }
        if (amax < bmin || bmax < amin) {
          fail("associativity", triple(i, j, k) + " at " + std::to_string(l));
          return false;
        }
        return true;
      }
      case SearchModel::Kind::StabilizerOrder: {
        if (!complete) return true;
        const int s = static_cast<int>(left_stabilizer(cur_, i).size());
        if ((m_.deg(i) * m_.deg(i)) % s != 0) {
          fail("stabilizer-order", "|G[" + std::to_string(i) + "]| = " + std::to_string(s));
          return false;
        }
        return true;
      }
      case SearchModel::Kind::StabilizerExponent: {
        if (!complete) return true;
        const auto grp = group_of_group_likes(cur_);
        if (!grp) {
          fail("group-like-closure", "degree-1 elements do not form a group");
          return false;
        }
        const auto ones = cur_.group_likes();
        for (int g : left_stabilizer(cur_, i)) {
          const int pos = static_cast<int>(std::find(ones.begin(), ones.end(), g) - ones.begin());
          if (m_.deg(i) % grp->element_order(pos) != 0) {
            fail("stabilizer-exponent", "element " + std::to_string(g) + " stabilizes " + std::to_string(i));
            return false;
          }
        }
        return true;
      }
      case SearchModel::Kind::NrDichotomy: {
        if (!complete) return true;
        const std::string why = nr_violation(cur_, i);
        if (!why.empty()) {
          fail("nr-dichotomy", "element " + std::to_string(i) + ": " + why);
          return false;
        }
        return true;
      }
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const int row_id = queue_.back();
      queue_.pop_back();
      in_queue_[static_cast<std::size_t>(row_id)] = 0;
      const auto& row = m_.rows[static_cast<std::size_t>(row_id)];
      long long mn = 0, mx = 0;
      for (auto [v, c] : row.terms) {
        mn += static_cast<long long>(c) * lo(v);
        mx += static_cast<long long>(c) * hi(v);
      }
      if (mn > row.target || mx < row.target) {
        const int i = row_id / m_.r, j = row_id % m_.r;
        fail("degree", "row (" + std::to_string(i) + "," + std::to_string(j) + ")");
        clear_queue();
        return false;
      }
      for (auto [v, c] : row.terms) {
        const long long nhi = lo(v) + (row.target - mn) / c;
        const long long nlo = hi(v) - (mx - row.target) / c;
        if (nhi < hi(v) || nlo > lo(v)) {
          if (!tighten(v, static_cast<int>(std::max<long long>(nlo, lo(v))), static_cast<int>(std::min<long long>(nhi, hi(v))))) {
            clear_queue();
            return false;
          }
          break;  // bounds changed; the row was re-queued
        }
      }
    }
    return true;
  }
};

struct Decision {
  int var;
  int value;
};

struct SubproblemResult {
  enum class Status { Feasible, Infeasible, Aborted, Skipped } status = Status::Skipped;
  long long nodes = 0;
  std::optional<FusionDatum> witness;
  std::map<std::string, long long> failures;
  std::string first_failure;
};

class Searcher {
 public:
  Searcher(const SearchModel& m, long long budget, const std::atomic<bool>* stop)
      : m_(m), state_(m), budget_(budget), stop_(stop) {}

  SearchState& state() { return state_; }

  enum class Result { Found, Exhausted, Aborted };

  /// Depth-first search; with frontier_depth >= 0 records the decision paths
  /// at that depth instead of descending.
  Result dfs(std::vector<Decision>& path, int frontier_depth, std::vector<std::vector<Decision>>* frontier) {
    if (stop_ && (state_.nodes & 1023) == 0 && stop_->load(std::memory_order_relaxed)) return Result::Aborted;
    const int v = state_.next_unfixed();
    if (frontier && (v < 0 || static_cast<int>(path.size()) == frontier_depth)) {
      frontier->push_back(path);
      return Result::Exhausted;
    }
    if (v < 0) return leaf();
    const int lo = state_.lo(v), hi = state_.hi(v);
    for (int value = lo; value <= hi; ++value) {
      if (++state_.nodes > budget_) return Result::Aborted;
      const auto mk = state_.mark();
      if (state_.assign(v, value)) {
        path.push_back({v, value});
        const Result r = dfs(path, frontier_depth, frontier);
        path.pop_back();
        if (r != Result::Exhausted) return r;
      }
      state_.undo(mk);
    }
    return Result::Exhausted;
  }

  std::optional<FusionDatum> witness;

 private:
  const SearchModel& m_;
  SearchState state_;
  long long budget_;
  const std::atomic<bool>* stop_;

  Result leaf() {
    FusionDatum f = state_.datum();
    const FusionReport rep = verify_fusion_datum(f, m_.profile);
    if (rep.passed()) {
      witness = std::move(f);
      return Result::Found;
    }
    for (const auto& c : rep.checks)
      if (!c.passed) {
        state_.fail(c.axiom, c.detail);
        break;
      }
    return Result::Exhausted;
  }
};

inline SubproblemResult solve_subproblem(const SearchModel& m, const std::vector<Decision>& path, long long budget,
                                         const std::atomic<bool>* stop) {
  Searcher s(m, budget, stop);
  SubproblemResult out;
  bool ok = s.state().init();
  for (const auto& d : path) ok = ok && s.state().assign(d.var, d.value);
  if (!ok) throw Error("frontier replay failed");
  std::vector<Decision> p;
  const auto r = s.dfs(p, -1, nullptr);
  out.nodes = s.state().nodes;
  out.failures = s.state().failures;
  out.first_failure = s.state().first_failure;
  if (r == Searcher::Result::Found) {
    out.status = SubproblemResult::Status::Feasible;
    out.witness = s.witness;
  } else if (r == Searcher::Result::Aborted) {
    out.status = SubproblemResult::Status::Aborted;
  } else {
    out.status = SubproblemResult::Status::Infeasible;
  }
  return out;
}

}  // namespace detail

/// Decides whether some fusion datum of the given type satisfies the profile.
/// Verdict, node count and witness do not depend on the thread count.
inline SearchOutcome search_fusion(const AlgebraTypeSignature& type, const SearchOptions& opt = {}) {
  if (type.basis_size() > opt.max_basis)
    throw SearchBoundExceeded("basis size " + std::to_string(type.basis_size()) + " exceeds the search bound " +
                              std::to_string(opt.max_basis));
  using detail::Decision;
  using detail::SubproblemResult;
  const auto degrees = type.degree_list();
  const auto patterns = detail::canonical_dual_patterns(degrees);

  SearchOutcome out;
  out.dual_patterns = static_cast<int>(patterns.size());
  std::vector<std::unique_ptr<detail::SearchModel>> models;
  std::vector<std::pair<int, std::vector<Decision>>> subproblems;
  long long frontier_nodes = 0;
  auto merge_failures = [&](const std::map<std::string, long long>& f, const std::string& first) {
    for (const auto& [k, v] : f) out.failures[k] += v;
    if (out.first_failure.empty()) out.first_failure = first;
  };

  for (std::size_t p = 0; p < patterns.size(); ++p) {
    models.push_back(std::make_unique<detail::SearchModel>(degrees, patterns[p], opt.profile));
    detail::Searcher s(*models.back(), opt.budget - frontier_nodes, nullptr);
    std::vector<std::vector<Decision>> frontier;
    if (s.state().init()) {
      std::vector<Decision> path;
      if (s.dfs(path, opt.frontier_depth, &frontier) == detail::Searcher::Result::Aborted) {
        out.nodes = opt.budget;
        out.status = SearchOutcome::Status::Inconclusive;
        return out;
      }
    }
    frontier_nodes += s.state().nodes;
    merge_failures(s.state().failures, s.state().first_failure);
    for (auto& f : frontier) subproblems.emplace_back(static_cast<int>(p), std::move(f));
  }
  out.subproblems = static_cast<int>(subproblems.size());

  const long long budget = opt.budget - frontier_nodes;
  std::vector<SubproblemResult> results(subproblems.size());
  std::vector<char> done(subproblems.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> cutoff{subproblems.size()};  // results past this index are irrelevant
  std::vector<std::unique_ptr<std::atomic<bool>>> stops;
  for (std::size_t i = 0; i < subproblems.size(); ++i) stops.push_back(std::make_unique<std::atomic<bool>>(false));
  std::mutex mu;
  std::size_t prefix = 0;
  long long prefix_nodes = 0;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= subproblems.size() || i > cutoff.load()) return;
      auto res = detail::solve_subproblem(*models[static_cast<std::size_t>(subproblems[i].first)], subproblems[i].second,
                                          budget, stops[i].get());
      std::lock_guard<std::mutex> lock(mu);
      results[i] = std::move(res);
      done[i] = 1;
      while (prefix < subproblems.size() && done[prefix]) {
        const auto& r = results[prefix];
        prefix_nodes += r.nodes;
        if (r.status != SubproblemResult::Status::Infeasible || prefix_nodes > budget) {
          cutoff.store(prefix);
          for (std::size_t j = prefix + 1; j < subproblems.size(); ++j) stops[j]->store(true);
          prefix = subproblems.size();
          break;
        }
        ++prefix;
      }
    }
  };
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min<int>(threads, static_cast<int>(subproblems.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  long long nodes = frontier_nodes;
  for (std::size_t i = 0; i < subproblems.size(); ++i) {
    const auto& r = results[i];
    nodes += r.nodes;
    merge_failures(r.failures, r.first_failure);
    if (nodes > opt.budget || r.status == SubproblemResult::Status::Aborted) {
      out.nodes = std::min(nodes, opt.budget);
      out.status = SearchOutcome::Status::Inconclusive;
      return out;
    }
    if (r.status == SubproblemResult::Status::Feasible) {
      out.nodes = nodes;
      out.status = SearchOutcome::Status::Feasible;
      out.witness = r.witness;
      return out;
    }
  }
  out.nodes = nodes;
  out.status = SearchOutcome::Status::Infeasible;
  return out;
}

}  // namespace hopfcalc
