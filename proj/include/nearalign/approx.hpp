#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "nearalign/core.hpp"
#include "nearalign/sketch.hpp"

namespace nearalign {

class InvalidEpsilon : public InvalidParams {
  public:
    using InvalidParams::InvalidParams;
};

class InvalidWindow : public InvalidParams {
  public:
    using InvalidParams::InvalidParams;
};

struct ApproxStats {
    std::size_t max_live_checkpoints = 0; // distinct scheduled positions
    std::size_t max_live_sketches = 0;
    std::size_t sketches_created = 0;
};

namespace detail {

// Sketches keyed by start position; one sketch per position however many
// schedule entries point at it.
class SketchPool
{
  public:
    /// drop_dead: forget a position as soon as its sketch exceeds d, even
    /// while schedule entries still reference it.
    SketchPool(Cost d, std::size_t threads, bool drop_dead);
    ~SketchPool();
    SketchPool(SketchPool&&) noexcept;
    SketchPool& operator=(SketchPool&&) noexcept;

    /// Adds a reference to the position, creating its sketch on first use.
    void acquire(Position pos);
    void release(Position pos);

    /// Feeds pair x to every live sketch and drops those that exceed d.
    void update(Symbol s_sym, Symbol t_sym);

    /// Smallest live start c with x - c + 1 > floor_length.
    std::optional<Position> best_start(Position x, Position floor_length) const;

    std::size_t positions() const { return slots_.size(); }
    std::size_t live_sketches() const { return live_; }
    std::size_t created() const { return created_; }

  private:
    struct Slot {
        std::unique_ptr<BandedSketch> sketch;
        std::size_t refs = 0;
    };

    Cost d_;
    std::map<Position, Slot> slots_;
    std::vector<BandedSketch*> scratch_;
    struct Arena;
    std::unique_ptr<Arena> arena_;
    bool drop_dead_;
    std::size_t live_ = 0;
    std::size_t created_ = 0;
};

} // namespace detail

class MultiplicativeEngine
{
  public:
    /// threads > 1 fans sketch updates out over a private task arena.
    MultiplicativeEngine(Cost d, double epsilon, std::size_t threads = 1);

    void step(Symbol s_sym, Symbol t_sym);
    std::optional<NearAlignment> result() const;

    double alpha() const { return alpha_; }
    int k0() const { return k0_; }
    /// floor(alpha (1+alpha)^(k-2)).
    Position spacing(int k) const;
    /// 2 (1+alpha)^k.
    double retention(int k) const;

    Position x() const { return x_; }

    struct Entry {
        Position pos;
        int level; // 0 marks the permanent checkpoint at position 1
    };
    /// Every scheduled (position, level) pair, by level then position.
    std::vector<Entry> schedule() const;
    /// Positions of one level in ascending order.
    std::vector<Position> level_positions(int k) const;
    int max_level() const { return k0_ + static_cast<int>(levels_.size()) - 1; }

    std::size_t live_checkpoints() const { return pool_.positions(); }
    std::size_t live_sketches() const { return pool_.live_sketches(); }
    const ApproxStats& stats() const { return stats_; }

  private:
    struct Level {
        Position spacing;
        double retention;
        std::vector<Position> positions; // ascending; expired ones erased from the front
        std::size_t head = 0;
    };

    void compact(Level& level);

    Cost d_;
    double epsilon_;
    double alpha_;
    int k0_;
    Position x_ = 0;
    std::vector<Level> levels_; // levels_[i] is level k0 + i, created once spacing <= x
    detail::SketchPool pool_;
    Position best_start_ = 0;
    Position best_length_ = 0;
    ApproxStats stats_;
};

class AdditiveEngine
{
  public:
    AdditiveEngine(Cost d, Position error, std::size_t threads = 1);

    void step(Symbol s_sym, Symbol t_sym);
    std::optional<NearAlignment> result() const;

    Position x() const { return x_; }
    Position error() const { return error_; }
    /// Every multiple of E up to x (sketches may have been discarded).
    std::vector<Position> checkpoint_positions() const;

    std::size_t live_sketches() const { return pool_.live_sketches(); }
    const ApproxStats& stats() const { return stats_; }

  private:
    Cost d_;
    Position error_;
    Position x_ = 0;
    detail::SketchPool pool_;
    Position best_start_ = 0;
    Position best_length_ = 0;
    ApproxStats stats_;
};

} // namespace nearalign
