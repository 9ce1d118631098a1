#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "nearalign/core.hpp"

namespace nearalign::hardgen {

/// Each bit of x followed by d+1 ones: length |x| * (d + 2).
std::string s_transform(std::string_view x, Cost d);

/// x between two runs of ones with (d+1)n symbols in total, the left run
/// taking the floor half.
std::string t_transform(std::string_view x, Cost d, std::size_t n);

struct HamPair {
    std::string x;
    std::string y;
};

/// x has exactly d ones among n bits; y flips d or d+1 positions of x.
/// Deterministic in seed (std::mt19937_64 with a portable bounded draw).
HamPair sample_ham_pair(std::size_t n, Cost d, std::uint64_t seed);

/// Uniform integer in [0, bound) by rejection; bound >= 1.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);

} // namespace nearalign::hardgen
