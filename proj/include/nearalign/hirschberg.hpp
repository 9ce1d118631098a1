#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nearalign/core.hpp"

namespace nearalign {

/// Either an optimal script (cost <= d) or nullopt when ed > d.
using AlignmentOutcome = std::optional<EditScript>;

struct HirschbergStats {
    std::size_t max_depth = 0;     // deepest divide level reached (root = 0)
    std::size_t max_row_cells = 0; // widest DP row kept at any level
    std::size_t splits = 0;
};

/// Budget-d alignment of two equal-length windows by banded divide and
/// conquer. Returned positions are 1-based within the windows.
AlignmentOutcome modified_hirschberg(std::string_view s_win, std::string_view t_win, Cost d,
                                     HirschbergStats* stats = nullptr);

/// Same recursion for windows of different lengths (the band is centred on
/// the diagonal connecting the two corners).
AlignmentOutcome align_within_budget(std::string_view a, std::string_view b, Cost budget,
                                     HirschbergStats* stats = nullptr);

/// Exact ed(s, t) when it is at most d, nullopt otherwise. Two rows of the band.
std::optional<Cost> banded_distance(std::string_view s, std::string_view t, Cost d);

/// Smallest 1-based c with ed(s[c..], t[c..]) <= d, from one reverse banded pass.
std::optional<Position> smallest_feasible_start(std::string_view s_win, std::string_view t_win, Cost d);

// Cost-to-go table of an equal-length pair: at(i, j) = ed(s[i..m), t[j..m))
// for 0 <= i, j <= m and |i - j| <= band, filled right to left.
class SuffixCosts
{
  public:
    SuffixCosts(std::string_view s, std::string_view t, Cost band);

    std::size_t size() const { return m_; }
    Cost band() const { return band_; }

    /// nullopt when the cell is outside the band or its cost exceeds the band.
    std::optional<Cost> at(std::size_t i, std::size_t j) const;

    /// Smallest 0-based i >= from with at(i, i) <= budget (budget <= band).
    std::optional<std::size_t> smallest_start(Cost budget, std::size_t from = 0) const;

  private:
    std::size_t m_;
    Cost band_;
    std::vector<Cost> cells_; // (m + 1) rows of 2 * band + 1
};

} // namespace nearalign
