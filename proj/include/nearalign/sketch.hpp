#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "nearalign/core.hpp"

namespace nearalign {

// Streaming edit distance of S[origin, x] vs T[origin, x] under a budget d.
//
// The band holds the 2d+1 cells of the L-shaped DP frontier at the newest
// index x: offset delta <= 0 is ed(S[origin,x], T[origin,x+delta]) and
// delta > 0 is ed(S[origin,x-delta], T[origin,x]). Both only use symbols that
// have already arrived, so one synchronized pair advances every cell.
// Entries above d are stored as kExceeded.
class BandedSketch
{
  public:
    static constexpr Cost kExceeded = std::numeric_limits<Cost>::max();

    BandedSketch(Cost d, Position origin);

    void update(Symbol s_sym, Symbol t_sym);

    /// ed of the consumed windows, or nullopt once it exceeds d.
    std::optional<Cost> current_distance() const;

    Cost budget() const { return d_; }
    Position origin() const { return origin_; }
    Position steps() const { return steps_; }
    bool dead() const { return dead_; }

    /// Band entry for offset delta in [-d, d].
    Cost at(int delta) const { return band_[static_cast<std::size_t>(delta + d_)]; }
    std::span<const Cost> band() const { return band_; }

    /// Symbols retained per stream to advance the band.
    std::size_t buffered_symbols() const { return s_recent_.size(); }

  private:
    Symbol recent_s(Position local) const { return s_recent_[local % s_recent_.size()]; }
    Symbol recent_t(Position local) const { return t_recent_[local % t_recent_.size()]; }

    Cost d_;
    Position origin_;
    Position steps_ = 0;
    bool dead_ = false;
    std::vector<Cost> band_;
    std::vector<Cost> next_;
    std::vector<Symbol> s_recent_;
    std::vector<Symbol> t_recent_;
};

} // namespace nearalign
