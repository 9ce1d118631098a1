#include "nearalign/hirschberg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

namespace nearalign {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max();
constexpr std::size_t kBaseRows = 4;

Cost plus(Cost a, Cost w) { return a == kInf ? kInf : a + w; }

struct Band {
    std::int64_t lo;
    std::int64_t hi;
    std::size_t width() const { return static_cast<std::size_t>(hi - lo + 1); }
};

// Diagonals j - i that a path of cost <= k from (0,0) to (na,nb) can touch.
Band band_for(std::size_t na, std::size_t nb, Cost k)
{
    const auto shift = static_cast<std::int64_t>(nb) - static_cast<std::int64_t>(na);
    return {std::max<std::int64_t>(-k, shift - k), std::min<std::int64_t>(k, shift + k)};
}

// Row `row` of the prefix DP restricted to `band`; entry [delta - lo] is
// ed(a[0,row), b[0,row+delta)) or kInf.
std::vector<Cost> forward_row(std::string_view a, std::string_view b, Band band, std::size_t row,
                              HirschbergStats* stats)
{
    const auto nb = static_cast<std::int64_t>(b.size());
    std::vector<Cost> prev(band.width(), kInf);
    std::vector<Cost> cur(band.width(), kInf);
    if (stats != nullptr)
        stats->max_row_cells = std::max(stats->max_row_cells, band.width());

    for (std::int64_t delta = std::max<std::int64_t>(band.lo, 0); delta <= std::min(band.hi, nb); ++delta)
        prev[static_cast<std::size_t>(delta - band.lo)] = static_cast<Cost>(delta);

    for (std::size_t i = 1; i <= row; ++i) {
        const auto ii = static_cast<std::int64_t>(i);
        for (std::int64_t delta = band.lo; delta <= band.hi; ++delta) {
            const auto k = static_cast<std::size_t>(delta - band.lo);
            const std::int64_t j = ii + delta;
            Cost best = kInf;
            if (j >= 0 && j <= nb) {
                if (j >= 1) {
                    best = plus(prev[k], a[i - 1] == b[static_cast<std::size_t>(j - 1)] ? 0 : 1);
                    if (delta - 1 >= band.lo)
                        best = std::min(best, plus(cur[k - 1], 1));
                }
                if (delta + 1 <= band.hi)
                    best = std::min(best, plus(prev[k + 1], 1));
            }
            cur[k] = best;
        }
        std::swap(prev, cur);
    }
    return prev;
}

// Small full-matrix alignment with traceback preferring match, substitution,
// deletion, insertion in that order.
void base_align(std::string_view a, std::string_view b, Position a_off, Position b_off, std::vector<EditOp>& out)
{
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    std::vector<Cost> dp((na + 1) * (nb + 1));
    auto at = [&](std::size_t i, std::size_t j) -> Cost& { return dp[i * (nb + 1) + j]; };
    for (std::size_t i = 0; i <= na; ++i)
        at(i, 0) = static_cast<Cost>(i);
    for (std::size_t j = 0; j <= nb; ++j)
        at(0, j) = static_cast<Cost>(j);
    for (std::size_t i = 1; i <= na; ++i)
        for (std::size_t j = 1; j <= nb; ++j)
            at(i, j) = std::min({at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1), at(i - 1, j) + 1, at(i, j - 1) + 1});

    std::vector<EditOp> rev;
    std::size_t i = na;
    std::size_t j = nb;
    while (i > 0 || j > 0) {
        const Cost here = at(i, j);
        if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && here == at(i - 1, j - 1)) {
            --i;
            --j;
        }
        else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
            rev.push_back(EditOp::substitution(a_off + i, a[i - 1], b_off + j, b[j - 1]));
            --i;
            --j;
        }
        else if (i > 0 && here == at(i - 1, j) + 1) {
            rev.push_back(EditOp::deletion(a_off + i, a[i - 1]));
            --i;
        }
        else {
            rev.push_back(EditOp::insertion(b_off + j, b[j - 1]));
            --j;
        }
    }
    out.insert(out.end(), rev.rbegin(), rev.rend());
}

// a and b align with cost exactly k. Ops are appended in path order.
void solve(std::string_view a, std::string_view b, Cost k, Position a_off, Position b_off, std::size_t depth,
           std::vector<EditOp>& out, HirschbergStats* stats)
{
    if (stats != nullptr)
        stats->max_depth = std::max(stats->max_depth, depth);
    if (k == 0)
        return;
    if (a.empty()) {
        for (std::size_t j = 0; j < b.size(); ++j)
            out.push_back(EditOp::insertion(b_off + j + 1, b[j]));
        return;
    }
    if (b.empty()) {
        for (std::size_t i = 0; i < a.size(); ++i)
            out.push_back(EditOp::deletion(a_off + i + 1, a[i]));
        return;
    }
    if (a.size() <= kBaseRows) {
        base_align(a, b, a_off, b_off, out);
        return;
    }

    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t mid = na / 2;
    const Band band = band_for(na, nb, k);
    const auto fwd = forward_row(a, b, band, mid, stats);

    const std::string ra(a.rbegin(), a.rend());
    const std::string rb(b.rbegin(), b.rend());
    const Band rband = band_for(na, nb, k); // symmetric under reversal of both strings
    const auto bwd = forward_row(ra, rb, rband, na - mid, stats);
    const auto shift = static_cast<std::int64_t>(nb) - static_cast<std::int64_t>(na);

    Cost best = kInf;
    std::size_t split = 0;
    Cost left_cost = 0;
    Cost right_cost = 0;
    for (std::int64_t delta = band.lo; delta <= band.hi; ++delta) {
        const std::int64_t j = static_cast<std::int64_t>(mid) + delta;
        if (j < 0 || j > static_cast<std::int64_t>(nb))
            continue;
        const Cost f = fwd[static_cast<std::size_t>(delta - band.lo)];
        // Backward cell (na - mid, nb - j) sits on reversed diagonal shift - delta.
        const std::int64_t rdelta = shift - delta;
        if (rdelta < rband.lo || rdelta > rband.hi)
            continue;
        const Cost g = bwd[static_cast<std::size_t>(rdelta - rband.lo)];
        if (f == kInf || g == kInf)
            continue;
        if (f + g < best) {
            best = f + g;
            split = static_cast<std::size_t>(j);
            left_cost = f;
            right_cost = g;
        }
    }
    assert(best == k);
    if (stats != nullptr)
        ++stats->splits;

    solve(a.substr(0, mid), b.substr(0, split), left_cost, a_off, b_off, depth + 1, out, stats);
    solve(a.substr(mid), b.substr(split), right_cost, a_off + mid, b_off + split, depth + 1, out, stats);
}

std::optional<Cost> distance_within(std::string_view a, std::string_view b, Cost budget)
{
    if (budget < 0)
        return std::nullopt;
    const auto shift = static_cast<std::int64_t>(b.size()) - static_cast<std::int64_t>(a.size());
    if (std::abs(shift) > budget)
        return std::nullopt;
    const Band band = band_for(a.size(), b.size(), budget);
    const auto row = forward_row(a, b, band, a.size(), nullptr);
    const Cost c = row[static_cast<std::size_t>(shift - band.lo)];
    if (c > budget)
        return std::nullopt;
    return c;
}

} // namespace

AlignmentOutcome align_within_budget(std::string_view a, std::string_view b, Cost budget, HirschbergStats* stats)
{
    const auto cost = distance_within(a, b, budget);
    if (!cost)
        return std::nullopt;
    EditScript script;
    solve(a, b, *cost, 0, 0, 0, script.ops, stats);
    return canonicalize(std::move(script));
}

AlignmentOutcome modified_hirschberg(std::string_view s_win, std::string_view t_win, Cost d, HirschbergStats* stats)
{
    if (s_win.size() != t_win.size())
        throw LengthMismatch("modified_hirschberg expects equal-length windows");
    return align_within_budget(s_win, t_win, d, stats);
}

std::optional<Cost> banded_distance(std::string_view s, std::string_view t, Cost d)
{
    return distance_within(s, t, d);
}

SuffixCosts::SuffixCosts(std::string_view s, std::string_view t, Cost band)
    : m_(s.size())
    , band_(band)
{
    if (s.size() != t.size())
        throw LengthMismatch("suffix costs need equal-length windows");
    if (band < 0)
        throw InvalidParams("band must be non-negative");
    cells_.assign((s.size() + 1) * static_cast<std::size_t>(2 * band + 1), kInf);

    const auto m = static_cast<std::int64_t>(m_);
    const auto width = static_cast<std::size_t>(2 * band + 1);
    auto cell = [&](std::int64_t i, std::int64_t j) -> Cost& {
        return cells_[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j - i + band)];
    };
    auto in_band = [&](std::int64_t i, std::int64_t j) { return j >= 0 && j <= m && std::abs(j - i) <= band; };

    for (std::int64_t i = m; i >= 0; --i) {
        for (std::int64_t j = std::min(m, i + band); j >= std::max<std::int64_t>(0, i - band); --j) {
            Cost best = (i == m && j == m) ? 0 : kInf;
            if (i < m && j < m)
                best = std::min(best, plus(cell(i + 1, j + 1), s[static_cast<std::size_t>(i)] ==
                                                                    t[static_cast<std::size_t>(j)]
                                                                ? 0
                                                                : 1));
            if (i < m && in_band(i + 1, j))
                best = std::min(best, plus(cell(i + 1, j), 1));
            if (j < m && in_band(i, j + 1))
                best = std::min(best, plus(cell(i, j + 1), 1));
            cell(i, j) = best > band ? kInf : best;
        }
    }
}

std::optional<Cost> SuffixCosts::at(std::size_t i, std::size_t j) const
{
    const auto ii = static_cast<std::int64_t>(i);
    const auto jj = static_cast<std::int64_t>(j);
    if (i > m_ || j > m_ || std::abs(jj - ii) > band_)
        return std::nullopt;
    const auto width = static_cast<std::size_t>(2 * band_ + 1);
    const Cost c = cells_[i * width + static_cast<std::size_t>(jj - ii + band_)];
    if (c == kInf)
        return std::nullopt;
    return c;
}

std::optional<std::size_t> SuffixCosts::smallest_start(Cost budget, std::size_t from) const
{
    const auto width = static_cast<std::size_t>(2 * band_ + 1);
    for (std::size_t i = from; i < m_; ++i) {
        const Cost c = cells_[i * width + static_cast<std::size_t>(band_)];
        if (c <= budget)
            return i;
    }
    return std::nullopt;
}

std::optional<Position> smallest_feasible_start(std::string_view s_win, std::string_view t_win, Cost d)
{
    if (s_win.size() != t_win.size())
        throw LengthMismatch("smallest_feasible_start expects equal-length windows");
    const SuffixCosts costs(s_win, t_win, d);
    if (const auto i = costs.smallest_start(d))
        return *i + 1;
    return std::nullopt;
}

} // namespace nearalign
