// Copyright 2026 Minorcast Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minorcast/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <optional>

namespace minorcast {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::feasible:
      return "feasible";
    case SolveStatus::infeasible:
      return "infeasible";
    case SolveStatus::timeout:
      return "timeout";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t neg_part(std::int64_t c) { return c < 0 ? c : 0; }
constexpr std::int64_t pos_part(std::int64_t c) { return c > 0 ? c : 0; }

struct Row {
  std::int64_t lo = kNegInf;
  std::int64_t hi = kPosInf;
  std::int64_t min_act = 0;  // over all completions of the partial assignment
  std::int64_t max_act = 0;
  std::int64_t max_abs = 0;  // largest |coeff|, used as the scan guard
  std::int32_t begin = 0;    // into the flat term arrays
  std::int32_t end = 0;
  bool sat = false;  // satisfied under every completion; monotone per branch
};

// A constraint row usable for objective bounding: every coefficient is
// positive and every member variable carries a positive objective
// coefficient, so meeting the row's unmet lower bound costs at least
// ceil(need / max_coeff) * min_obj more objective units. Rows are chosen
// with pairwise disjoint supports, which makes the per-row costs additive.
struct FloorRow {
  int row;
  std::int64_t max_coeff;
  std::int64_t min_obj;
};

class Engine {
 public:
  Engine(Model& model, const SolveLimits& limits)
      : model_(model), limits_(limits) {}

  SolveOutcome run() {
    start_ = Clock::now();
    build();
    SolveOutcome out = search();
    out.stats = stats_;
    out.stats.wall_s = elapsed();
    if (out.assignment) {
      verify(*out.assignment);
      model_.set_warm_start(*out.assignment);
    }
    return out;
  }

 private:
  // ------------------------------------------------------------------
  // Setup

  void build() {
    const int nvars = model_.num_variables();
    assign_.assign(static_cast<size_t>(nvars), -1);
    occ_begin_.assign(static_cast<size_t>(nvars) + 1, 0);
    obj_coeff_.assign(static_cast<size_t>(nvars), 0);

    const auto& constraints = model_.constraints();
    rows_.reserve(constraints.size() + 1);
    for (const auto& c : constraints) push_row(c.terms, c.lower, c.upper);
    obj_row_ = -1;
    if (model_.has_objective() && !model_.objective().empty()) {
      obj_row_ = static_cast<int>(rows_.size());
      push_row(model_.objective(), kNegInf, kPosInf);
      for (const auto& [coeff, var] : model_.objective())
        obj_coeff_[static_cast<size_t>(var)] = coeff;
    }

    // Occurrence lists, grouped per variable in row order.
    std::vector<int> fill(static_cast<size_t>(nvars), 0);
    for (VarId v : term_var_) ++occ_begin_[static_cast<size_t>(v) + 1];
    for (size_t v = 1; v < occ_begin_.size(); ++v)
      occ_begin_[v] += occ_begin_[v - 1];
    occ_row_.resize(term_var_.size());
    occ_coeff_.resize(term_var_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (std::int32_t t = rows_[r].begin; t < rows_[r].end; ++t) {
        VarId v = term_var_[static_cast<size_t>(t)];
        int slot =
            occ_begin_[static_cast<size_t>(v)] + fill[static_cast<size_t>(v)]++;
        occ_row_[static_cast<size_t>(slot)] = static_cast<int>(r);
        occ_coeff_[static_cast<size_t>(slot)] =
            term_coeff_[static_cast<size_t>(t)];
      }
    }

    for (size_t r = 0; r < rows_.size(); ++r) {
      Row& row = rows_[r];
      if (static_cast<int>(r) == obj_row_) continue;
      if (row.min_act >= row.lo && row.max_act <= row.hi)
        row.sat = true;  // root-level, never undone
    }

    // Branching works through rows in ascending support order, so the
    // tightest decisions come first and leave the rest to propagation.
    for (size_t r = 0; r < rows_.size(); ++r)
      if (static_cast<int>(r) != obj_row_)
        branch_order_.push_back(static_cast<int>(r));
    std::stable_sort(branch_order_.begin(), branch_order_.end(),
                     [this](int a, int b) {
                       const auto sa = rows_[static_cast<size_t>(a)].end -
                                       rows_[static_cast<size_t>(a)].begin;
                       const auto sb = rows_[static_cast<size_t>(b)].end -
                                       rows_[static_cast<size_t>(b)].begin;
                       if (sa != sb) return sa < sb;
                       return a < b;
                     });
    for (int r : branch_order_)
      if (rows_[static_cast<size_t>(r)].lo != kNegInf)
        demand_rows_.push_back(r);
    row_act_.assign(rows_.size(), 0);

    if (obj_row_ >= 0) {
      std::vector<std::uint8_t> used(static_cast<size_t>(nvars), 0);
      for (int r : branch_order_) {
        const Row& row = rows_[static_cast<size_t>(r)];
        if (row.lo == kNegInf || row.begin == row.end) continue;
        std::int64_t max_c = 0;
        std::int64_t min_obj = kPosInf;
        bool fits = true;
        for (std::int32_t t = row.begin; t < row.end && fits; ++t) {
          const std::int64_t c = term_coeff_[static_cast<size_t>(t)];
          const VarId v = term_var_[static_cast<size_t>(t)];
          const std::int64_t o = obj_coeff_[static_cast<size_t>(v)];
          if (c <= 0 || o <= 0 || used[static_cast<size_t>(v)]) fits = false;
          max_c = std::max(max_c, c);
          min_obj = std::min(min_obj, o);
        }
        if (!fits) continue;
        for (std::int32_t t = row.begin; t < row.end; ++t)
          used[static_cast<size_t>(term_var_[static_cast<size_t>(t)])] = 1;
        floor_rows_.push_back({r, max_c, min_obj});
      }
    }

    in_queue_.assign(rows_.size(), 0);
  }

  void push_row(const std::vector<std::pair<std::int64_t, VarId>>& terms,
                std::int64_t lo, std::int64_t hi) {
    Row row;
    row.lo = lo;
    row.hi = hi;
    row.begin = static_cast<std::int32_t>(term_var_.size());
    for (const auto& [coeff, var] : terms) {
      term_var_.push_back(var);
      term_coeff_.push_back(coeff);
      row.min_act += neg_part(coeff);
      row.max_act += pos_part(coeff);
      row.max_abs =
          std::max<std::int64_t>(row.max_abs, coeff < 0 ? -coeff : coeff);
    }
    row.end = static_cast<std::int32_t>(term_var_.size());
    rows_.push_back(row);
  }

  // ------------------------------------------------------------------
  // Trail. Events are variable fixes (>= 0) and row satisfactions (< 0).

  static std::int32_t row_event(int r) { return -(r + 1); }

  std::int64_t row_hi(int r) const {
    return r == obj_row_ ? obj_cap_ : rows_[static_cast<size_t>(r)].hi;
  }

  // Applies the assignment, updates activities and marks newly satisfied
  // rows and queues rows that may force further values. Returns false when
  // some row became unsatisfiable; updates always run to completion so the
  // trail stays invertible.
  bool fix(VarId v, std::uint8_t value) {
    assert(assign_[static_cast<size_t>(v)] < 0);
    assign_[static_cast<size_t>(v)] = static_cast<std::int8_t>(value);
    trail_.push_back(v);
    ++stats_.propagations;

    bool ok = true;
    const int begin = occ_begin_[static_cast<size_t>(v)];
    const int end = occ_begin_[static_cast<size_t>(v) + 1];
    for (int slot = begin; slot < end; ++slot) {
      const int r = occ_row_[static_cast<size_t>(slot)];
      const std::int64_t c = occ_coeff_[static_cast<size_t>(slot)];
      Row& row = rows_[static_cast<size_t>(r)];
      if (value) {
        row.min_act += c - neg_part(c);
        row.max_act += c - pos_part(c);
      } else {
        row.min_act -= neg_part(c);
        row.max_act -= pos_part(c);
      }
      if (row.sat) continue;
      if (row.min_act > row_hi(r) || row.max_act < row.lo) {
        ok = false;
        bump(r);
        continue;
      }
      if (r != obj_row_ && row.min_act >= row.lo && row.max_act <= row.hi) {
        row.sat = true;
        trail_.push_back(row_event(r));
        continue;
      }
      enqueue(r);
    }
    return ok;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      std::int32_t event = trail_.back();
      trail_.pop_back();
      if (event < 0) {
        rows_[static_cast<size_t>(-event - 1)].sat = false;
        continue;
      }
      const VarId v = event;
      const std::uint8_t value =
          static_cast<std::uint8_t>(assign_[static_cast<size_t>(v)]);
      const int begin = occ_begin_[static_cast<size_t>(v)];
      const int end = occ_begin_[static_cast<size_t>(v) + 1];
      for (int slot = begin; slot < end; ++slot) {
        const int r = occ_row_[static_cast<size_t>(slot)];
        const std::int64_t c = occ_coeff_[static_cast<size_t>(slot)];
        Row& row = rows_[static_cast<size_t>(r)];
        if (value) {
          row.min_act -= c - neg_part(c);
          row.max_act -= c - pos_part(c);
        } else {
          row.min_act += neg_part(c);
          row.max_act += pos_part(c);
        }
      }
      assign_[static_cast<size_t>(v)] = -1;
    }
    for (size_t q = qhead_; q < queue_.size(); ++q)
      in_queue_[static_cast<size_t>(queue_[q])] = 0;
    queue_.clear();
    qhead_ = 0;
  }

  // ------------------------------------------------------------------
  // Propagation

  void enqueue(int r) {
    if (in_queue_[static_cast<size_t>(r)]) return;
    const Row& row = rows_[static_cast<size_t>(r)];
    // A row can only force values when one of its bounds is within the
    // largest single-variable swing.
    if (row.min_act + row.max_abs <= row_hi(r) &&
        (row.lo == kNegInf || row.max_act - row.max_abs >= row.lo))
      return;
    in_queue_[static_cast<size_t>(r)] = 1;
    queue_.push_back(r);
  }

  bool propagate() {
    while (qhead_ < queue_.size()) {
      const int r = queue_[qhead_++];
      in_queue_[static_cast<size_t>(r)] = 0;
      Row& row = rows_[static_cast<size_t>(r)];
      if (row.sat) continue;
      for (std::int32_t t = row.begin; t < row.end && !row.sat; ++t) {
        const VarId w = term_var_[static_cast<size_t>(t)];
        if (assign_[static_cast<size_t>(w)] >= 0) continue;
        const std::int64_t c = term_coeff_[static_cast<size_t>(t)];
        const std::int64_t hi = row_hi(r);
        const bool can0 = row.min_act - neg_part(c) <= hi &&
                          row.max_act - pos_part(c) >= row.lo;
        const bool can1 = row.min_act + c - neg_part(c) <= hi &&
                          row.max_act + c - pos_part(c) >= row.lo;
        if (!can0 && !can1) {
          bump(r);
          return false;
        }
        if (can0 == can1) continue;
        if (!fix(w, can1 ? 1 : 0)) return false;
      }
    }
    return true;
  }

  bool assign_and_propagate(VarId v, std::uint8_t value) {
    if (!fix(v, value)) return false;
    return propagate();
  }

  // ------------------------------------------------------------------
  // Search

  std::int64_t node_bound() const {
    return obj_row_ < 0 ? 0 : rows_[static_cast<size_t>(obj_row_)].min_act;
  }

  // Objective lower bound for the current subtree: fixed contributions
  // plus the unavoidable cost of meeting every floor row's lower bound.
  std::int64_t floor_bound() const {
    if (obj_row_ < 0) return 0;
    std::int64_t bound = rows_[static_cast<size_t>(obj_row_)].min_act;
    for (const FloorRow& f : floor_rows_) {
      const Row& row = rows_[static_cast<size_t>(f.row)];
      const std::int64_t need = row.lo - row.min_act;
      if (need > 0) bound += ((need + f.max_coeff - 1) / f.max_coeff) * f.min_obj;
    }
    return bound;
  }

  std::uint8_t preferred(VarId v) const {
    return obj_coeff_[static_cast<size_t>(v)] < 0 ? 1 : 0;
  }

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  bool out_of_time() {
    if (limits_.time_limit_s <= 0.0) return false;
    if ((++time_probe_ & 255) != 1) return false;
    return elapsed() >= limits_.time_limit_s;
  }

  struct Frame {
    VarId var;
    std::uint8_t first_value;
    bool tried_both;
    size_t mark;
    size_t cur_sat;
    std::int64_t sibling_bound;
  };

  // Lowest bound among subtrees not explored yet, capped by the incumbent.
  std::int64_t open_bound(std::int64_t current) const {
    std::int64_t bound = current;
    for (const auto& f : frames_)
      if (!f.tried_both) bound = std::min(bound, f.sibling_bound);
    if (incumbent_value_ && *incumbent_value_ < bound)
      bound = *incumbent_value_;
    return bound;
  }

  // Valid global lower bound when stopping early: open subtrees, the space
  // pruned by the objective cap, and everything ruled out by completed
  // deepening rounds.
  std::int64_t stop_bound() {
    std::int64_t bound = open_bound(floor_bound());
    if (obj_row_ >= 0 && obj_cap_ < kPosInf)
      bound = std::min(bound, obj_cap_ + 1);
    return std::max(proven_lb_, bound);
  }

  void record_incumbent() {
    std::vector<std::uint8_t> full(assign_.size());
    for (size_t v = 0; v < assign_.size(); ++v)
      full[v] = assign_[v] >= 0 ? static_cast<std::uint8_t>(assign_[v])
                                : preferred(static_cast<VarId>(v));
    const std::int64_t value = model_.objective_value(full);
    assert(!incumbent_value_ || value < *incumbent_value_);
    incumbent_ = std::move(full);
    incumbent_value_ = value;
    if (obj_row_ >= 0) obj_cap_ = value - 1;
  }

  SolveOutcome finish(SolveStatus status, std::int64_t bound) {
    SolveOutcome out;
    out.status = status;
    out.best_bound = bound;
    if (incumbent_) {
      out.assignment = incumbent_;
      out.objective_value = incumbent_value_;
    }
    return out;
  }

  struct Branch {
    VarId var;
    std::uint8_t value;
  };

  // Picks the free variable with the largest sway over row r and the value
  // that moves the activity toward the violated side's bound.
  Branch pick_from(int r, bool raise) const {
    const Row& row = rows_[static_cast<size_t>(r)];
    VarId best = -1;
    std::int64_t best_c = 0;
    for (std::int32_t t = row.begin; t < row.end; ++t) {
      const VarId v = term_var_[static_cast<size_t>(t)];
      if (assign_[static_cast<size_t>(v)] >= 0) continue;
      const std::int64_t c = term_coeff_[static_cast<size_t>(t)];
      const std::int64_t a = c < 0 ? -c : c;
      const std::int64_t b = best_c < 0 ? -best_c : best_c;
      if (best < 0 || a > b || (a == b && v < best)) {
        best = v;
        best_c = c;
      }
    }
    assert(best >= 0);
    const bool positive = best_c > 0;
    return {best, static_cast<std::uint8_t>(raise == positive ? 1 : 0)};
  }

  // Rows that produce conflicts accumulate activity, which pulls the
  // decisions they depend on toward the top of the tree. The sequence
  // counter weights recent conflicts over old ones.
  void bump(int r) { row_act_[static_cast<size_t>(r)] += ++conflict_seq_; }

  // Next decision: first a row whose lower bound still lacks activity
  // (branching toward it builds solutions constructively), picking the
  // most conflict-laden such row; then any row not yet settled on its
  // upper side. The settlement cursor only ever moves forward within a
  // branch because row satisfaction is monotone; frames restore it on
  // backtracking. No candidate row means every row holds under the
  // objective-preferred completion of the free variables.
  std::optional<Branch> pick() {
    int best = -1;
    std::uint64_t best_act = 0;
    for (int r : demand_rows_) {
      const Row& row = rows_[static_cast<size_t>(r)];
      if (row.min_act >= row.lo) continue;
      if (best < 0 || row_act_[static_cast<size_t>(r)] > best_act) {
        best = r;
        best_act = row_act_[static_cast<size_t>(r)];
      }
    }
    if (best >= 0) return pick_from(best, true);
    while (cur_sat_ < branch_order_.size()) {
      const int r = branch_order_[cur_sat_];
      if (rows_[static_cast<size_t>(r)].sat) {
        ++cur_sat_;
        continue;
      }
      return pick_from(r, false);
    }
    return std::nullopt;
  }

  SolveOutcome search() {
    // A retained incumbent from before the latest cuts seeds the pruning
    // bound when it still satisfies everything.
    if (const auto& hint = model_.warm_start();
        hint && static_cast<int>(hint->size()) == model_.num_variables()) {
      bool valid = true;
      for (const auto& c : model_.constraints())
        if (!model_.satisfies(c, *hint)) {
          valid = false;
          break;
        }
      if (valid) {
        incumbent_ = *hint;
        incumbent_value_ = model_.objective_value(*hint);
        if (obj_row_ >= 0) obj_cap_ = *incumbent_value_ - 1;
      }
    }

    bool root_ok = true;
    for (size_t r = 0; r < rows_.size() && root_ok; ++r) {
      const Row& row = rows_[r];
      if (row.min_act > row_hi(static_cast<int>(r)) || row.max_act < row.lo)
        root_ok = false;
      else
        enqueue(static_cast<int>(r));
    }
    if (root_ok) root_ok = propagate();
    if (!root_ok) {
      // Root conflict: with a seeded incumbent the cap emptied the rest of
      // the space, which proves that incumbent optimal.
      if (incumbent_) return finish(SolveStatus::optimal, *incumbent_value_);
      return finish(SolveStatus::infeasible, kPosInf);
    }
    if (incumbent_ && limits_.stop_at_first_solution)
      return finish(SolveStatus::feasible, open_bound(node_bound()));

    // Without an incumbent nothing caps the objective row, so the search
    // has no pruning pressure. Deepen the cap iteratively instead: each
    // round proves there is no solution up to the cap or finds an optimal
    // one outright, because the cap never cuts below the incumbent.
    const size_t root_mark = trail_.size();
    const bool deepen = obj_row_ >= 0 && !incumbent_;
    std::int64_t cap_max = kPosInf;
    std::int64_t step = 1;
    if (deepen) {
      cap_max = rows_[static_cast<size_t>(obj_row_)].max_act;
      obj_cap_ = floor_bound();
    }

    for (;;) {
      bool cap_ok = true;
      if (deepen) {
        enqueue(obj_row_);
        cap_ok = propagate();
      }
      if (cap_ok) {
        if (std::optional<SolveOutcome> out = dfs()) return *out;
      }
      if (incumbent_) return finish(SolveStatus::optimal, *incumbent_value_);
      if (!deepen || obj_cap_ >= cap_max)
        return finish(SolveStatus::infeasible, kPosInf);
      proven_lb_ = obj_cap_ + 1;
      undo_to(root_mark);
      frames_.clear();
      cur_sat_ = 0;
      obj_cap_ = std::min(cap_max, obj_cap_ + step);
      step *= 2;
    }
  }

  // Depth-first search under the current objective cap. Returns an outcome
  // to surface immediately, or nullopt once the capped tree is exhausted.
  std::optional<SolveOutcome> dfs() {
    for (;;) {
      if (limits_.node_limit > 0 && stats_.nodes >= limits_.node_limit)
        return finish(SolveStatus::timeout, stop_bound());
      if (out_of_time()) return finish(SolveStatus::timeout, stop_bound());

      // Covers caps tightened after a backtrack in a part of the tree
      // propagation never revisited, and prunes by the floor bound.
      const std::int64_t bound = floor_bound();
      if (obj_row_ >= 0 && bound > obj_cap_) {
        if (!backtrack()) return std::nullopt;
        continue;
      }

      const std::optional<Branch> branch = pick();
      if (!branch) {
        // The preferred completion is objective-minimal for this subtree
        // and satisfies every row, so nothing below can improve on it.
        if (incumbent_value_ && node_bound() >= *incumbent_value_) {
          if (!backtrack()) return std::nullopt;
          continue;
        }
        record_incumbent();
        if (limits_.stop_at_first_solution) {
          const std::int64_t leaf_bound =
              std::max(proven_lb_, open_bound(*incumbent_value_));
          return finish(leaf_bound >= *incumbent_value_ ? SolveStatus::optimal
                                                        : SolveStatus::feasible,
                        leaf_bound);
        }
        if (!backtrack()) return std::nullopt;
        continue;
      }

      const std::int64_t c = obj_coeff_[static_cast<size_t>(branch->var)];
      Frame frame;
      frame.var = branch->var;
      frame.first_value = branch->value;
      frame.tried_both = false;
      frame.mark = trail_.size();
      frame.cur_sat = cur_sat_;
      frame.sibling_bound = std::max(
          bound, node_bound() - neg_part(c) + (branch->value ? 0 : c));
      frames_.push_back(frame);
      ++stats_.nodes;
      if (!assign_and_propagate(branch->var, branch->value)) {
        if (!backtrack()) return std::nullopt;
      }
    }
  }

  // Unwinds to the deepest frame with an untried value and descends into
  // it; false when the tree is exhausted.
  bool backtrack() {
    while (!frames_.empty()) {
      Frame& frame = frames_.back();
      undo_to(frame.mark);
      cur_sat_ = frame.cur_sat;
      if (frame.tried_both) {
        frames_.pop_back();
        continue;
      }
      frame.tried_both = true;
      if (frame.sibling_bound > obj_cap_) {
        frames_.pop_back();
        continue;
      }
      ++stats_.nodes;
      if (assign_and_propagate(frame.var, 1 - frame.first_value)) return true;
    }
    return false;
  }

  void verify(const std::vector<std::uint8_t>& assignment) const {
    for (const auto& c : model_.constraints())
      if (!model_.satisfies(c, assignment))
        throw InternalConsistencyError(
            "solver produced an assignment violating constraint '" + c.tag +
            "'");
  }

  Model& model_;
  const SolveLimits& limits_;
  Clock::time_point start_;
  SolveStats stats_;

  std::vector<Row> rows_;
  std::vector<VarId> term_var_;
  std::vector<std::int64_t> term_coeff_;
  std::vector<int> occ_begin_;
  std::vector<int> occ_row_;
  std::vector<std::int64_t> occ_coeff_;
  std::vector<std::int64_t> obj_coeff_;
  std::vector<int> branch_order_;
  std::vector<int> demand_rows_;
  std::vector<std::uint64_t> row_act_;
  std::uint64_t conflict_seq_ = 0;
  std::vector<FloorRow> floor_rows_;
  int obj_row_ = -1;
  std::int64_t obj_cap_ = kPosInf;
  std::int64_t proven_lb_ = kNegInf;

  std::vector<std::int8_t> assign_;
  std::vector<std::int32_t> trail_;
  std::vector<int> queue_;
  size_t qhead_ = 0;
  std::vector<std::uint8_t> in_queue_;
  size_t cur_sat_ = 0;
  std::vector<Frame> frames_;

  std::optional<std::vector<std::uint8_t>> incumbent_;
  std::optional<std::int64_t> incumbent_value_;
  std::uint64_t time_probe_ = 0;
};

}  // namespace

SolveOutcome solve(Model& model, const SolveLimits& limits) {
  Engine engine(model, limits);
  return engine.run();
}

}  // namespace minorcast

