#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nearalign/core.hpp"
#include "nearalign/hirschberg.hpp"

namespace nearalign {

/// Matched run of an alignment: S[i1, j1] = T[i2, j2], 1-based local coordinates.
struct Run {
    Position i1 = 0;
    Position j1 = 0;
    Position i2 = 0;
    Position j2 = 0;

    Position length() const { return j1 - i1 + 1; }
    friend bool operator==(const Run&, const Run&) = default;
};

/// Leftmost maximal run of at least d+1 consecutive matched pairs in the
/// alignment of two windows of length window_len described by `script`.
std::optional<Run> detect_run(const EditScript& script, std::size_t window_len, Cost d);

struct ExactOptions {
    /// Skip the alignment-based run search when no diagonal of the window
    /// carries d+1 consecutive equal pairs. False reruns it every step.
    bool cached = true;
};

struct ExactStats {
    std::size_t max_window = 0;             // x - b + 1 after each step
    std::size_t max_window_within_d = 0;    // same, restricted to steps with window ed <= d
    std::size_t max_buffered = 0;           // symbols kept per stream
    std::size_t max_frontier_ops = 0;       // longest op list held by the prefix frontier
    std::size_t alignments = 0;             // budget-2d window alignments computed
    std::size_t cuts = 0;
    std::size_t trims = 0;
    std::size_t window_bound_violations = 0; // steps breaking the (2d+1)(d+2) / (d+1)(d+2) limits
};

// One-pass exact engine. Keeps a sliding window [b, x] of the streams plus a
// prefix frontier: for every cell of the L-shaped boundary just before b and
// every budget k <= d, the smallest start c < b whose alignment reaches that
// cell within cost k, with the ops of one such path.
class ExactEngine
{
  public:
    explicit ExactEngine(Cost d, ExactOptions options = {});
    ~ExactEngine();
    ExactEngine(ExactEngine&&) noexcept;
    ExactEngine& operator=(ExactEngine&&) noexcept;

    void step(Symbol s_sym, Symbol t_sym);
    std::optional<NearAlignment> result() const;

    Cost d() const { return d_; }
    Position x() const { return x_; }
    Position b() const { return b_; }
    std::size_t window_length() const { return static_cast<std::size_t>(x_ + 1 - b_); }
    /// ed(S[b, x], T[b, x]) when it is at most 2d.
    std::optional<Cost> window_distance() const { return window_ed_; }
    const ExactStats& stats() const { return stats_; }

    /// Ops held by the frontier entry (offset t in [-d, d], budget k); empty
    /// when the entry has no start.
    std::vector<EditOp> frontier_ops(int t, int k) const;
    Position frontier_start(int t, int k) const;

  private:
    struct OpNode;
    struct Entry {
        Position start = 0; // 0: no start reaches the cell within budget
        std::shared_ptr<const OpNode> ops;
        std::size_t count = 0;
    };

    Entry& entry(std::vector<Entry>& g, std::int64_t t, std::int64_t k) const;
    const Entry& entry(const std::vector<Entry>& g, std::int64_t t, std::int64_t k) const;
    Symbol s_at(Position i) const { return s_buf_[i - buf_start_]; }
    Symbol t_at(Position j) const { return t_buf_[j - buf_start_]; }

    void fold_column();
    void advance_to(Position new_b);
    bool diagonal_run_possible() const;
    void settle();
    void update_best(const SuffixCosts& costs);
    static std::vector<EditOp> collect(const Entry& e);

    Cost d_;
    ExactOptions options_;
    Position x_ = 0;
    Position b_ = 1;
    Position buf_start_ = 1; // max(1, b - d)
    std::string s_buf_;
    std::string t_buf_;
    std::vector<Entry> frontier_; // (2d+1) offsets x (d+1) budgets
    std::vector<Entry> scratch_;
    bool frontier_empty_ = true;
    std::optional<Cost> window_ed_;

    Position best_start_ = 0;
    Position best_length_ = 0;
    EditScript best_script_;
    ExactStats stats_;
};

} // namespace nearalign
