#pragma once

#include <optional>
#include <string_view>

#include "nearalign/core.hpp"

namespace nearalign::oracle {

// Unoptimized reference implementations. Nothing here shares code with the
// streaming kernels.

inline constexpr std::size_t kMaxLength = 10000;

struct FullResult {
    Cost cost = 0;
    EditScript script; // canonical, positions 1-based within s and t
};

/// Quadratic Wagner-Fischer with traceback. Throws InvalidParams above kMaxLength.
FullResult full_edit_distance(std::string_view s, std::string_view t);

struct Lmax {
    Position length = 0;
    Position start = 0;
    Position end = 0;

    friend bool operator==(const Lmax&, const Lmax&) = default;
};

/// Longest same-index window with ed <= d, smallest start on ties.
std::optional<Lmax> oracle_lmax(std::string_view s, std::string_view t, Cost d);

/// The same answer from the all-(i, j) double loop; only for tiny inputs.
std::optional<Lmax> naive_lmax(std::string_view s, std::string_view t, Cost d);

std::size_t hamming(std::string_view x, std::string_view y);

} // namespace nearalign::oracle
