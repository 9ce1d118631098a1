#include "nearalign/exact.hpp"

#include <algorithm>

namespace nearalign {

std::optional<Run> detect_run(const EditScript& script, std::size_t window_len, Cost d)
{
    std::vector<bool> s_used(window_len + 1, false);
    std::vector<bool> t_used(window_len + 1, false);
    for (const auto& op : script.ops) {
        if (op.has_s()) {
            if (op.s_pos < 1 || op.s_pos > window_len)
                throw PositionOutOfRange("op outside window");
            s_used[op.s_pos] = true;
        }
        if (op.has_t()) {
            if (op.t_pos < 1 || op.t_pos > window_len)
                throw PositionOutOfRange("op outside window");
            t_used[op.t_pos] = true;
        }
    }

    // Untouched positions of S and T are matched to each other in order.
    const auto need = static_cast<Position>(d) + 1;
    Position i = 1;
    Position j = 1;
    std::optional<Run> current;
    auto flush = [&]() -> std::optional<Run> {
        if (current && current->length() >= need)
            return current;
        current.reset();
        return std::nullopt;
    };
    for (;;) {
        while (i <= window_len && s_used[i])
            ++i;
        while (j <= window_len && t_used[j])
            ++j;
        if (i > window_len || j > window_len)
            break;
        if (current && current->j1 + 1 == i && current->j2 + 1 == j) {
            current->j1 = i;
            current->j2 = j;
        }
        else {
            if (auto run = flush())
                return run;
            current = Run{i, i, j, j};
        }
        ++i;
        ++j;
    }
    return flush();
}

struct ExactEngine::OpNode {
    EditOp op;
    std::shared_ptr<const OpNode> prev;
};

ExactEngine::ExactEngine(Cost d, ExactOptions options)
    : d_(d)
    , options_(options)
{
    if (d < 0)
        throw InvalidParams("budget d must be non-negative");
    const auto cells = static_cast<std::size_t>(2 * d + 1) * static_cast<std::size_t>(d + 1);
    frontier_.resize(cells);
    scratch_.resize(cells);
}

ExactEngine::~ExactEngine() = default;
ExactEngine::ExactEngine(ExactEngine&&) noexcept = default;
ExactEngine& ExactEngine::operator=(ExactEngine&&) noexcept = default;

ExactEngine::Entry& ExactEngine::entry(std::vector<Entry>& g, std::int64_t t, std::int64_t k) const
{
    return g[static_cast<std::size_t>((t + d_) * (d_ + 1) + k)];
}

const ExactEngine::Entry& ExactEngine::entry(const std::vector<Entry>& g, std::int64_t t, std::int64_t k) const
{
    return g[static_cast<std::size_t>((t + d_) * (d_ + 1) + k)];
}

std::vector<EditOp> ExactEngine::collect(const Entry& e)
{
    std::vector<EditOp> out;
    out.reserve(e.count);
    for (const OpNode* n = e.ops.get(); n != nullptr; n = n->prev.get())
        out.push_back(n->op);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<EditOp> ExactEngine::frontier_ops(int t, int k) const { return collect(entry(frontier_, t, k)); }

Position ExactEngine::frontier_start(int t, int k) const { return entry(frontier_, t, k).start; }

// Moves the boundary from b to b+1. Offset t <= 0 names cell (b-1, b-1+t)
// before the fold and (b, b+t) after; t > 0 names (b-1-t, b-1) and (b-t, b).
void ExactEngine::fold_column()
{
    const std::int64_t d = d_;
    const Position b = b_;

    for (std::int64_t k = 0; k <= d; ++k) {
        auto& corner = entry(frontier_, 0, k);
        if (corner.start == 0)
            corner = Entry{b, nullptr, 0};
    }
    frontier_empty_ = false;
    for (auto& e : scratch_)
        e = Entry{};

    auto offer = [](Entry& dst, const Entry& src, const EditOp* op) {
        if (src.start == 0 || (dst.start != 0 && dst.start <= src.start))
            return;
        dst.start = src.start;
        if (op != nullptr) {
            dst.ops = std::make_shared<const OpNode>(OpNode{*op, src.ops});
            dst.count = src.count + 1;
        }
        else {
            dst.ops = src.ops;
            dst.count = src.count;
        }
    };

    const Symbol tb = t_at(b);
    for (std::int64_t t = d; t >= 1; --t) {
        const std::int64_t i = static_cast<std::int64_t>(b) - t;
        if (i < 0)
            continue;
        const auto ip = static_cast<Position>(i);
        const Symbol si = i >= 1 ? s_at(ip) : Symbol{0};
        const EditOp sub = EditOp::substitution(ip, si, b, tb);
        const EditOp del = EditOp::deletion(ip, si);
        const EditOp ins = EditOp::insertion(b, tb);
        const Cost w = si == tb ? 0 : 1;
        for (std::int64_t k = 0; k <= d; ++k) {
            auto& dst = entry(scratch_, t, k);
            if (i >= 1 && k >= w)
                offer(dst, entry(frontier_, t, k - w), w == 1 ? &sub : nullptr);
            if (k >= 1) {
                if (i >= 1 && t + 1 <= d)
                    offer(dst, entry(scratch_, t + 1, k - 1), &del);
                offer(dst, entry(frontier_, t - 1, k - 1), &ins);
            }
        }
    }

    const Symbol sb = s_at(b);
    for (std::int64_t t = -d; t <= 0; ++t) {
        const std::int64_t j = static_cast<std::int64_t>(b) + t;
        if (j < 0)
            continue;
        const auto jp = static_cast<Position>(j);
        const Symbol tj = j >= 1 ? t_at(jp) : Symbol{0};
        const EditOp sub = EditOp::substitution(b, sb, jp, tj);
        const EditOp del = EditOp::deletion(b, sb);
        const EditOp ins = EditOp::insertion(jp, tj);
        const Cost w = sb == tj ? 0 : 1;
        for (std::int64_t k = 0; k <= d; ++k) {
            auto& dst = entry(scratch_, t, k);
            if (j >= 1 && k >= w)
                offer(dst, entry(frontier_, t, k - w), w == 1 ? &sub : nullptr);
            if (k >= 1) {
                if (t < 0)
                    offer(dst, entry(frontier_, t + 1, k - 1), &del);
                else if (d >= 1)
                    offer(dst, entry(scratch_, 1, k - 1), &del);
                if (j >= 1 && t - 1 >= -d)
                    offer(dst, entry(scratch_, t - 1, k - 1), &ins);
            }
        }
    }

    frontier_.swap(scratch_);
    ++b_;
    frontier_empty_ = std::none_of(frontier_.begin(), frontier_.end(), [](const Entry& e) { return e.start != 0; });
    for (const auto& e : frontier_)
        stats_.max_frontier_ops = std::max(stats_.max_frontier_ops, e.count);
}

void ExactEngine::advance_to(Position new_b)
{
    while (b_ < new_b)
        fold_column();
    const Position keep_from = b_ > static_cast<Position>(d_) ? b_ - static_cast<Position>(d_) : 1;
    if (keep_from > buf_start_) {
        const auto drop = static_cast<std::size_t>(keep_from - buf_start_);
        s_buf_.erase(0, drop);
        t_buf_.erase(0, drop);
        buf_start_ = keep_from;
    }
}

bool ExactEngine::diagonal_run_possible() const
{
    const auto need = static_cast<std::size_t>(d_) + 1;
    const auto lo = static_cast<std::int64_t>(b_);
    const auto hi = static_cast<std::int64_t>(x_);
    const std::int64_t band = 2 * static_cast<std::int64_t>(d_);
    for (std::int64_t delta = -band; delta <= band; ++delta) {
        std::size_t run = 0;
        for (std::int64_t i = std::max(lo, lo - delta); i <= std::min(hi, hi - delta); ++i) {
            const bool eq = s_at(static_cast<Position>(i)) == t_at(static_cast<Position>(i + delta));
            run = eq ? run + 1 : 0;
            if (run >= need)
                return true;
        }
    }
    return false;
}

void ExactEngine::settle()
{
    const Cost wide = 2 * d_;
    for (;;) {
        const SuffixCosts costs(s_buf_, t_buf_, wide);
        const auto from = static_cast<std::size_t>(b_ - buf_start_);
        window_ed_ = costs.at(from, from);
        if (!window_ed_) {
            const auto c = costs.smallest_start(wide, from);
            ++stats_.trims;
            advance_to(c ? buf_start_ + *c : x_ + 1);
            continue;
        }

        const std::size_t len = window_length();
        if (len > static_cast<std::size_t>(d_) && (!options_.cached || diagonal_run_possible())) {
            const std::string_view sw = std::string_view(s_buf_).substr(from);
            const std::string_view tw = std::string_view(t_buf_).substr(from);
            const auto script = align_within_budget(sw, tw, wide);
            ++stats_.alignments;
            if (const auto run = detect_run(*script, len, d_)) {
                const Position cut = b_ + std::min(run->j1, run->j2) - 1;
                if (cut > b_) {
                    ++stats_.cuts;
                    advance_to(cut);
                    continue;
                }
            }
        }
        update_best(costs);
        return;
    }
}

void ExactEngine::update_best(const SuffixCosts& costs)
{
    const std::int64_t d = d_;
    const auto base = static_cast<std::int64_t>(buf_start_) - 1;
    const auto bm1 = static_cast<std::int64_t>(b_) - 1;

    struct Exit {
        std::int64_t t;
        std::int64_t i;
        std::int64_t j;
        Cost w;
    };
    std::vector<Exit> exits;
    Position best_c = 0;
    if (!frontier_empty_) {
        for (std::int64_t t = -d; t <= d; ++t) {
            const std::int64_t i = t <= 0 ? bm1 : bm1 - t;
            const std::int64_t j = t <= 0 ? bm1 + t : bm1;
            if (i < base || j < base)
                continue;
            const auto w = costs.at(static_cast<std::size_t>(i - base), static_cast<std::size_t>(j - base));
            if (!w || *w > d_)
                continue;
            const Position c = entry(frontier_, t, d - *w).start;
            if (c == 0)
                continue;
            exits.push_back({t, i, j, *w});
            if (best_c == 0 || c < best_c)
                best_c = c;
        }
    }
    const bool from_prefix = best_c != 0;
    if (!from_prefix) {
        if (const auto c = costs.smallest_start(d_, static_cast<std::size_t>(b_ - buf_start_)))
            best_c = buf_start_ + *c;
    }
    if (best_c == 0 || x_ - best_c + 1 <= best_length_)
        return;

    EditScript script;
    if (from_prefix) {
        const Exit* pick = nullptr;
        std::int64_t pick_k = 0;
        for (const auto& ex : exits) {
            if (entry(frontier_, ex.t, d - ex.w).start != best_c)
                continue;
            std::int64_t k = 0;
            while (entry(frontier_, ex.t, k).start != best_c)
                ++k;
            if (pick == nullptr || k + ex.w < pick_k + pick->w) {
                pick = &ex;
                pick_k = k;
            }
        }
        script.ops = collect(entry(frontier_, pick->t, pick_k));
        const auto sw = std::string_view(s_buf_).substr(static_cast<std::size_t>(pick->i - base));
        const auto tw = std::string_view(t_buf_).substr(static_cast<std::size_t>(pick->j - base));
        const auto tail = align_within_budget(sw, tw, pick->w);
        for (const auto& op : tail->ops)
            script.ops.push_back(op.shifted(pick->i, pick->j));
    }
    else {
        const auto off = static_cast<std::size_t>(best_c - buf_start_);
        const auto tail = align_within_budget(std::string_view(s_buf_).substr(off), std::string_view(t_buf_).substr(off), d_);
        const auto shift = static_cast<std::int64_t>(best_c) - 1;
        for (const auto& op : tail->ops)
            script.ops.push_back(op.shifted(shift, shift));
    }
    best_start_ = best_c;
    best_length_ = x_ - best_c + 1;
    best_script_ = canonicalize(std::move(script));
}

void ExactEngine::step(Symbol s_sym, Symbol t_sym)
{
    ++x_;
    s_buf_.push_back(s_sym);
    t_buf_.push_back(t_sym);
    settle();

    const std::size_t len = window_length();
    stats_.max_window = std::max(stats_.max_window, len);
    if (window_ed_ && *window_ed_ <= d_)
        stats_.max_window_within_d = std::max(stats_.max_window_within_d, len);
    stats_.max_buffered = std::max(stats_.max_buffered, s_buf_.size());
    const auto d = static_cast<std::size_t>(d_);
    const bool within = window_ed_ && *window_ed_ <= d_;
    if (len > (2 * d + 1) * (d + 2) || (within && len > (d + 1) * (d + 2)))
        ++stats_.window_bound_violations;
}

std::optional<NearAlignment> ExactEngine::result() const
{
    if (best_length_ == 0)
        return std::nullopt;
    return NearAlignment{best_start_, best_start_ + best_length_ - 1, best_script_, Mode::exact,
                         ModeParams{d_, std::nullopt, std::nullopt}};
}

} // namespace nearalign
