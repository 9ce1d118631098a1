#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nearalign {

// Symbols are raw bytes; sequences of symbols are carried as std::string.
using Symbol = char;
using Position = std::uint64_t; // 1-based stream index, 0 means "absent"
using Cost = std::int32_t;

class PositionOutOfRange : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

class LengthMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class InvalidParams : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct SymbolPair {
    Position index = 0;
    Symbol s_sym = 0;
    Symbol t_sym = 0;
};

enum class EditKind : std::uint8_t { substitution, insertion, deletion };

// A located edit. Positions are global 1-based coordinates: an insertion at
// t_pos means T[t_pos] has no counterpart in S, a deletion at s_pos means
// S[s_pos] has no counterpart in T.
struct EditOp {
    EditKind kind = EditKind::substitution;
    Position s_pos = 0;
    Position t_pos = 0;
    Symbol s_sym = 0;
    Symbol t_sym = 0;

    static EditOp substitution(Position s_pos, Symbol s_sym, Position t_pos, Symbol t_sym)
    {
        return {EditKind::substitution, s_pos, t_pos, s_sym, t_sym};
    }
    static EditOp insertion(Position t_pos, Symbol t_sym) { return {EditKind::insertion, 0, t_pos, 0, t_sym}; }
    static EditOp deletion(Position s_pos, Symbol s_sym) { return {EditKind::deletion, s_pos, 0, s_sym, 0}; }

    bool has_s() const { return kind != EditKind::insertion; }
    bool has_t() const { return kind != EditKind::deletion; }

    /// Smallest position the op touches.
    Position anchor() const;

    /// Same op with S positions moved by s_shift and T positions by t_shift.
    EditOp shifted(std::int64_t s_shift, std::int64_t t_shift) const;

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct EditScript {
    std::vector<EditOp> ops;

    std::size_t cost() const { return ops.size(); }
    bool empty() const { return ops.empty(); }

    friend bool operator==(const EditScript&, const EditScript&) = default;
};

enum class Mode : std::uint8_t { exact, multiplicative, additive, oracle };

std::string_view mode_name(Mode mode);

struct ModeParams {
    Cost d = 0;
    std::optional<double> epsilon;
    std::optional<Position> error;

    friend bool operator==(const ModeParams&, const ModeParams&) = default;
};

// A reported d-near-alignment S[start,end] ~ T[start,end]. Engines return
// std::nullopt instead of a zero-length alignment.
struct NearAlignment {
    Position start = 0;
    Position end = 0;
    std::optional<EditScript> script;
    Mode mode = Mode::exact;
    ModeParams params;

    Position length() const { return end - start + 1; }

    friend bool operator==(const NearAlignment&, const NearAlignment&) = default;
};

/// Applies `script` to the window S[origin, origin + |s_window| - 1] and
/// returns the resulting T window. Throws PositionOutOfRange when an op lies
/// outside the window and std::invalid_argument when ops collide or a
/// substitution lands on a T position other than its own t_pos.
std::string apply_script(std::string_view s_window, const EditScript& script, Position origin = 1);

/// Substitutions, then insertions, then deletions; ascending anchor within a kind.
EditScript canonicalize(EditScript script);

bool is_canonical(const EditScript& script);

std::string to_string(const EditOp& op);

} // namespace nearalign
