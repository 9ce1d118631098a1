#include "nearalign/approx.hpp"

#include <algorithm>
#include <cmath>

#include <tbb/blocked_range.h>
#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace nearalign {

namespace detail {

struct SketchPool::Arena {
    explicit Arena(std::size_t threads)
        : arena(static_cast<int>(threads))
    {
    }
    tbb::task_arena arena;
};

namespace {
constexpr std::size_t kParallelMin = 64;
}

SketchPool::SketchPool(Cost d, std::size_t threads, bool drop_dead)
    : d_(d)
    , drop_dead_(drop_dead)
{
    if (d < 0)
        throw InvalidParams("budget d must be non-negative");
    const auto usable = std::min<std::size_t>(threads, static_cast<std::size_t>(tbb::info::default_concurrency()));
    if (usable > 1)
        arena_ = std::make_unique<Arena>(usable);
}

SketchPool::~SketchPool() = default;
SketchPool::SketchPool(SketchPool&&) noexcept = default;
SketchPool& SketchPool::operator=(SketchPool&&) noexcept = default;

void SketchPool::acquire(Position pos)
{
    auto& slot = slots_[pos];
    if (slot.refs++ == 0) {
        slot.sketch = std::make_unique<BandedSketch>(d_, pos);
        ++live_;
        ++created_;
    }
}

void SketchPool::release(Position pos)
{
    const auto it = slots_.find(pos);
    if (it == slots_.end())
        return;
    if (--it->second.refs == 0) {
        if (it->second.sketch)
            --live_;
        slots_.erase(it);
    }
}

void SketchPool::update(Symbol s_sym, Symbol t_sym)
{
    scratch_.clear();
    for (auto& [pos, slot] : slots_)
        if (slot.sketch)
            scratch_.push_back(slot.sketch.get());

    if (arena_ && scratch_.size() >= kParallelMin) {
        arena_->arena.execute([&] {
            tbb::parallel_for(tbb::blocked_range<std::size_t>(0, scratch_.size(), 16),
                              [&](const tbb::blocked_range<std::size_t>& r) {
                                  for (std::size_t i = r.begin(); i != r.end(); ++i)
                                      scratch_[i]->update(s_sym, t_sym);
                              });
        });
    }
    else {
        for (auto* sk : scratch_)
            sk->update(s_sym, t_sym);
    }

    // ed over [c, x] never decreases in x, so an exceeded sketch stays exceeded.
    for (auto it = slots_.begin(); it != slots_.end();) {
        auto& slot = it->second;
        if (slot.sketch && !slot.sketch->current_distance()) {
            slot.sketch.reset();
            --live_;
            if (drop_dead_) {
                it = slots_.erase(it);
                continue;
            }
        }
        ++it;
    }
}

std::optional<Position> SketchPool::best_start(Position x, Position floor_length) const
{
    for (const auto& [pos, slot] : slots_) {
        if (x - pos + 1 <= floor_length)
            break;
        if (slot.sketch && slot.sketch->current_distance())
            return pos;
    }
    return std::nullopt;
}

} // namespace detail

namespace {

double alpha_for(double epsilon)
{
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InvalidEpsilon("epsilon must be positive");
    return std::sqrt(1.0 + epsilon) - 1.0;
}

int k0_for(double alpha)
{
    const double raw = std::log((1.0 + alpha) * (1.0 + alpha) / alpha) / std::log1p(alpha);
    return static_cast<int>(std::ceil(raw - 1e-9));
}

} // namespace

MultiplicativeEngine::MultiplicativeEngine(Cost d, double epsilon, std::size_t threads)
    : d_(d)
    , epsilon_(epsilon)
    , alpha_(alpha_for(epsilon))
    , k0_(k0_for(alpha_))
    , pool_(d, threads, false)
{
}

Position MultiplicativeEngine::spacing(int k) const
{
    const double raw = alpha_ * std::pow(1.0 + alpha_, k - 2);
    return static_cast<Position>(std::floor(raw * (1.0 + 1e-12)));
}

double MultiplicativeEngine::retention(int k) const { return 2.0 * std::pow(1.0 + alpha_, k); }

void MultiplicativeEngine::compact(Level& level)
{
    if (level.head > 64 && level.head * 2 > level.positions.size()) {
        level.positions.erase(level.positions.begin(),
                              level.positions.begin() + static_cast<std::ptrdiff_t>(level.head));
        level.head = 0;
    }
}

void MultiplicativeEngine::step(Symbol s_sym, Symbol t_sym)
{
    ++x_;
    if (x_ == 1)
        pool_.acquire(1);

    for (;;) {
        const int k = k0_ + static_cast<int>(levels_.size());
        const Position sp = spacing(k);
        if (sp > x_)
            break;
        if (!levels_.empty() && sp < levels_.back().spacing)
            throw InvalidParams("level spacing lost monotonicity in floating point");
        levels_.push_back(Level{sp, retention(k), {}, 0});
    }

    const auto xd = static_cast<double>(x_);
    for (auto& level : levels_) {
        if (x_ % level.spacing == 0) {
            level.positions.push_back(x_);
            pool_.acquire(x_);
        }
        while (level.head < level.positions.size() &&
               static_cast<double>(level.positions[level.head]) < xd - level.retention) {
            pool_.release(level.positions[level.head]);
            ++level.head;
        }
        compact(level);
    }

    pool_.update(s_sym, t_sym);

    if (const auto c = pool_.best_start(x_, best_length_)) {
        best_start_ = *c;
        best_length_ = x_ - *c + 1;
    }

    stats_.max_live_checkpoints = std::max(stats_.max_live_checkpoints, pool_.positions());
    stats_.max_live_sketches = std::max(stats_.max_live_sketches, pool_.live_sketches());
    stats_.sketches_created = pool_.created();
}

std::optional<NearAlignment> MultiplicativeEngine::result() const
{
    if (best_length_ == 0)
        return std::nullopt;
    return NearAlignment{best_start_, best_start_ + best_length_ - 1, std::nullopt, Mode::multiplicative,
                         ModeParams{d_, epsilon_, std::nullopt}};
}

std::vector<MultiplicativeEngine::Entry> MultiplicativeEngine::schedule() const
{
    std::vector<Entry> out;
    if (x_ >= 1)
        out.push_back({1, 0});
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const auto& level = levels_[i];
        for (std::size_t j = level.head; j < level.positions.size(); ++j)
            out.push_back({level.positions[j], k0_ + static_cast<int>(i)});
    }
    return out;
}

std::vector<Position> MultiplicativeEngine::level_positions(int k) const
{
    const auto i = static_cast<std::size_t>(k - k0_);
    if (k < k0_ || i >= levels_.size())
        return {};
    const auto& level = levels_[i];
    return {level.positions.begin() + static_cast<std::ptrdiff_t>(level.head), level.positions.end()};
}

AdditiveEngine::AdditiveEngine(Cost d, Position error, std::size_t threads)
    : d_(d)
    , error_(error)
    , pool_(d, threads, true)
{
    if (error < 1)
        throw InvalidWindow("additive error E must be at least 1");
}

void AdditiveEngine::step(Symbol s_sym, Symbol t_sym)
{
    ++x_;
    if (x_ % error_ == 0)
        pool_.acquire(x_);
    pool_.update(s_sym, t_sym);
    if (const auto c = pool_.best_start(x_, best_length_)) {
        best_start_ = *c;
        best_length_ = x_ - *c + 1;
    }
    stats_.max_live_checkpoints = std::max(stats_.max_live_checkpoints, pool_.positions());
    stats_.max_live_sketches = std::max(stats_.max_live_sketches, pool_.live_sketches());
    stats_.sketches_created = pool_.created();
}

std::optional<NearAlignment> AdditiveEngine::result() const
{
    if (best_length_ == 0)
        return std::nullopt;
    return NearAlignment{best_start_, best_start_ + best_length_ - 1, std::nullopt, Mode::additive,
                         ModeParams{d_, std::nullopt, error_}};
}

std::vector<Position> AdditiveEngine::checkpoint_positions() const
{
    std::vector<Position> out;
    for (Position c = error_; c <= x_; c += error_)
        out.push_back(c);
    return out;
}

} // namespace nearalign
