#include "nearalign/core.hpp"

#include <algorithm>
#include <tuple>

namespace nearalign {

Position EditOp::anchor() const
{
    switch (kind) {
        case EditKind::substitution: return std::min(s_pos, t_pos);
        case EditKind::insertion: return t_pos;
        case EditKind::deletion: return s_pos;
    }
    return 0;
}

EditOp EditOp::shifted(std::int64_t s_shift, std::int64_t t_shift) const
{
    EditOp out = *this;
    if (has_s())
        out.s_pos = static_cast<Position>(static_cast<std::int64_t>(s_pos) + s_shift);
    if (has_t())
        out.t_pos = static_cast<Position>(static_cast<std::int64_t>(t_pos) + t_shift);
    return out;
}

std::string_view mode_name(Mode mode)
{
    switch (mode) {
        case Mode::exact: return "exact";
        case Mode::multiplicative: return "multiplicative";
        case Mode::additive: return "additive";
        case Mode::oracle: return "oracle";
    }
    return "unknown";
}

std::string apply_script(std::string_view s_window, const EditScript& script, Position origin)
{
    const Position s_len = s_window.size();
    std::size_t deletions = 0;
    std::size_t insertions = 0;
    for (const auto& op : script.ops) {
        if (op.kind == EditKind::deletion)
            ++deletions;
        else if (op.kind == EditKind::insertion)
            ++insertions;
    }
    if (deletions > s_len)
        throw PositionOutOfRange("more deletions than window symbols");
    const Position t_len = s_len - deletions + insertions;

    auto check_s = [&](const EditOp& op) {
        if (op.s_pos < origin || op.s_pos >= origin + s_len)
            throw PositionOutOfRange("s_pos " + std::to_string(op.s_pos) + " outside window");
    };
    auto check_t = [&](const EditOp& op) {
        if (op.t_pos < origin || op.t_pos >= origin + t_len)
            throw PositionOutOfRange("t_pos " + std::to_string(op.t_pos) + " outside window");
    };

    std::vector<const EditOp*> s_op(s_len, nullptr);
    std::vector<const EditOp*> t_ins(t_len, nullptr);
    for (const auto& op : script.ops) {
        if (op.has_s()) {
            check_s(op);
            auto& slot = s_op[op.s_pos - origin];
            if (slot != nullptr)
                throw std::invalid_argument("two ops on s_pos " + std::to_string(op.s_pos));
            slot = &op;
        }
        if (op.has_t())
            check_t(op);
        if (op.kind == EditKind::insertion) {
            auto& slot = t_ins[op.t_pos - origin];
            if (slot != nullptr)
                throw std::invalid_argument("two insertions at t_pos " + std::to_string(op.t_pos));
            slot = &op;
        }
    }

    std::string out(t_len, '\0');
    Position t = 0;
    auto skip_inserted = [&] {
        while (t < t_len && t_ins[t] != nullptr) {
            out[t] = t_ins[t]->t_sym;
            ++t;
        }
    };
    for (Position i = 0; i < s_len; ++i) {
        const EditOp* op = s_op[i];
        if (op != nullptr && op->kind == EditKind::deletion)
            continue;
        skip_inserted();
        if (t >= t_len)
            throw std::invalid_argument("script does not describe an alignment of this window");
        if (op != nullptr) {
            if (op->t_pos != origin + t)
                throw std::invalid_argument("substitution at s_pos " + std::to_string(op->s_pos) +
                                            " lands on t_pos " + std::to_string(origin + t));
            out[t] = op->t_sym;
        }
        else {
            out[t] = s_window[i];
        }
        ++t;
    }
    skip_inserted();
    return out;
}

namespace {

auto canonical_key(const EditOp& op)
{
    return std::make_tuple(static_cast<int>(op.kind), op.anchor(), op.s_pos, op.t_pos);
}

} // namespace

EditScript canonicalize(EditScript script)
{
    std::stable_sort(script.ops.begin(), script.ops.end(),
                     [](const EditOp& a, const EditOp& b) { return canonical_key(a) < canonical_key(b); });
    return script;
}

bool is_canonical(const EditScript& script)
{
    return std::is_sorted(script.ops.begin(), script.ops.end(),
                          [](const EditOp& a, const EditOp& b) { return canonical_key(a) < canonical_key(b); });
}

std::string to_string(const EditOp& op)
{
    switch (op.kind) {
        case EditKind::substitution:
            return "sub(" + std::to_string(op.s_pos) + ":" + op.s_sym + "->" + std::to_string(op.t_pos) + ":" +
                   op.t_sym + ")";
        case EditKind::insertion: return "ins(" + std::to_string(op.t_pos) + ":" + op.t_sym + ")";
        case EditKind::deletion: return "del(" + std::to_string(op.s_pos) + ":" + op.s_sym + ")";
    }
    return "?";
}

} // namespace nearalign
