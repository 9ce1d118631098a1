#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nearalign/core.hpp"

namespace nearalign::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;

struct RunRequest {
    Mode mode = Mode::exact;
    Cost d = 0;
    std::optional<double> epsilon;
    std::optional<Position> error;
    bool recompute_always = false;
    std::size_t threads = 1;
    bool stats = false;
};

/// Full command line entry point (argv[0] is skipped).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs one alignment mode over two lockstep streams and writes the JSON line to out.
int run_streams(const RunRequest& req, std::istream& s, std::istream& t, std::ostream& out, std::ostream& err);

/// Same, reading interleaved (S, T) byte pairs.
int run_paired(const RunRequest& req, std::istream& paired, std::ostream& out, std::ostream& err);

/// Single-line JSON for a result; absent results become {"mode":..,"length":0}.
std::string serialize(const std::optional<NearAlignment>& result, Mode mode, const ModeParams& params);

struct GenRequest {
    std::string kind; // ham-pair, s-pair or t-pair
    std::size_t n = 0;
    Cost d = 0;
    std::uint64_t seed = 0;
    std::string out; // writes <out>.s and <out>.t
};

/// Writes the pair files and prints a manifest JSON line to out.
int gen(const GenRequest& req, std::ostream& out, std::ostream& err);

} // namespace nearalign::cli
