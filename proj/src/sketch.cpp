#include "nearalign/sketch.hpp"

#include <algorithm>

namespace nearalign {

namespace {

constexpr Cost kInf = BandedSketch::kExceeded;

Cost plus(Cost a, Cost w) { return a == kInf ? kInf : a + w; }

Cost checked(Cost d)
{
    if (d < 0)
        throw InvalidParams("budget d must be non-negative");
    return d;
}

} // namespace

BandedSketch::BandedSketch(Cost d, Position origin)
    : d_(checked(d))
    , origin_(origin)
    , band_(static_cast<std::size_t>(2 * d + 1), kInf)
    , next_(band_.size(), kInf)
    , s_recent_(static_cast<std::size_t>(d + 1), 0)
    , t_recent_(static_cast<std::size_t>(d + 1), 0)
{
    if (origin < 1)
        throw InvalidParams("origin is 1-based");
    band_[static_cast<std::size_t>(d)] = 0;
}

void BandedSketch::update(Symbol s_sym, Symbol t_sym)
{
    ++steps_;
    if (dead_)
        return;

    const auto x = static_cast<std::int64_t>(steps_);
    s_recent_[steps_ % s_recent_.size()] = s_sym;
    t_recent_[steps_ % t_recent_.size()] = t_sym;

    const auto d = static_cast<std::int64_t>(d_);
    auto old_at = [&](std::int64_t delta) { return band_[static_cast<std::size_t>(delta + d)]; };
    auto new_at = [&](std::int64_t delta) -> Cost& { return next_[static_cast<std::size_t>(delta + d)]; };

    // Column side: cell (x - delta, x), T[x] is the newest T symbol.
    for (std::int64_t delta = d; delta >= 1; --delta) {
        Cost best = kInf;
        const std::int64_t i = x - delta;
        if (i >= 0) {
            if (i >= 1) {
                const Cost w = recent_s(static_cast<Position>(i)) == t_sym ? 0 : 1;
                best = std::min(best, plus(old_at(delta), w));
                if (delta + 1 <= d)
                    best = std::min(best, plus(new_at(delta + 1), 1));
            }
            best = std::min(best, plus(old_at(delta - 1), 1));
        }
        new_at(delta) = best > d_ ? kInf : best;
    }
    // Row side: cell (x, x + delta), S[x] is the newest S symbol.
    for (std::int64_t delta = -d; delta <= 0; ++delta) {
        Cost best = kInf;
        const std::int64_t j = x + delta;
        if (j >= 0) {
            if (j >= 1) {
                const Cost w = s_sym == recent_t(static_cast<Position>(j)) ? 0 : 1;
                best = std::min(best, plus(old_at(delta), w));
                if (delta - 1 >= -d)
                    best = std::min(best, plus(new_at(delta - 1), 1));
            }
            if (delta < 0)
                best = std::min(best, plus(old_at(delta + 1), 1));
            else if (d >= 1)
                best = std::min(best, plus(new_at(1), 1));
        }
        new_at(delta) = best > d_ ? kInf : best;
    }
    band_.swap(next_);
    dead_ = std::all_of(band_.begin(), band_.end(), [](Cost c) { return c == kInf; });
}

std::optional<Cost> BandedSketch::current_distance() const
{
    const Cost c = at(0);
    if (c == kInf)
        return std::nullopt;
    return c;
}

} // namespace nearalign
