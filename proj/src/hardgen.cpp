#include "nearalign/hardgen.hpp"

#include <numeric>
#include <vector>

namespace nearalign::hardgen {

std::string s_transform(std::string_view x, Cost d)
{
    if (d < 0)
        throw InvalidParams("d must be non-negative");
    std::string out;
    out.reserve(x.size() * static_cast<std::size_t>(d + 2));
    for (const char bit : x) {
        if (bit != '0' && bit != '1')
            throw InvalidParams("s_transform expects a bit string");
        out.push_back(bit);
        out.append(static_cast<std::size_t>(d + 1), '1');
    }
    return out;
}

std::string t_transform(std::string_view x, Cost d, std::size_t n)
{
    if (d < 0)
        throw InvalidParams("d must be non-negative");
    const std::size_t pad = static_cast<std::size_t>(d + 1) * n;
    const std::size_t left = pad / 2;
    std::string out(left, '1');
    out.append(x);
    out.append(pad - left, '1');
    return out;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw InvalidParams("empty range");
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit)
            return r % bound;
    }
}

namespace {

std::vector<std::size_t> choose(std::mt19937_64& rng, std::size_t n, std::size_t k)
{
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + bounded(rng, n - i)]);
    idx.resize(k);
    return idx;
}

} // namespace

HamPair sample_ham_pair(std::size_t n, Cost d, std::uint64_t seed)
{
    if (d < 0 || static_cast<std::size_t>(d) + 1 > n)
        throw InvalidParams("sample_ham_pair needs 0 <= d and d + 1 <= n");
    std::mt19937_64 rng(seed);
    HamPair out{std::string(n, '0'), {}};
    for (const std::size_t i : choose(rng, n, static_cast<std::size_t>(d)))
        out.x[i] = '1';
    const std::size_t flips = static_cast<std::size_t>(d) + (rng() & 1U);
    out.y = out.x;
    for (const std::size_t i : choose(rng, n, flips))
        out.y[i] = out.y[i] == '0' ? '1' : '0';
    return out;
}

} // namespace nearalign::hardgen
