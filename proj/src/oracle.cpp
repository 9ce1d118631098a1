#include "nearalign/oracle.hpp"

#include <algorithm>
#include <vector>

namespace nearalign::oracle {

namespace {

void guard(std::size_t n)
{
    if (n > kMaxLength)
        throw InvalidParams("oracle input longer than " + std::to_string(kMaxLength));
}

} // namespace

FullResult full_edit_distance(std::string_view s, std::string_view t)
{
    guard(std::max(s.size(), t.size()));
    const std::size_t n = s.size();
    const std::size_t m = t.size();
    std::vector<std::vector<Cost>> dp(n + 1, std::vector<Cost>(m + 1, 0));
    for (std::size_t i = 0; i <= n; ++i)
        dp[i][0] = static_cast<Cost>(i);
    for (std::size_t j = 0; j <= m; ++j)
        dp[0][j] = static_cast<Cost>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const Cost diag = dp[i - 1][j - 1] + (s[i - 1] != t[j - 1] ? 1 : 0);
            dp[i][j] = std::min({diag, dp[i - 1][j] + 1, dp[i][j - 1] + 1});
        }
    }

    FullResult out;
    out.cost = dp[n][m];
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0 && dp[i][j] == dp[i - 1][j - 1] + (s[i - 1] != t[j - 1] ? 1 : 0)) {
            if (s[i - 1] != t[j - 1])
                out.script.ops.push_back(EditOp::substitution(i, s[i - 1], j, t[j - 1]));
            --i;
            --j;
        }
        else if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
            out.script.ops.push_back(EditOp::deletion(i, s[i - 1]));
            --i;
        }
        else {
            out.script.ops.push_back(EditOp::insertion(j, t[j - 1]));
            --j;
        }
    }
    out.script = canonicalize(std::move(out.script));
    return out;
}

std::optional<Lmax> oracle_lmax(std::string_view s, std::string_view t, Cost d)
{
    if (s.size() != t.size())
        throw LengthMismatch("oracle_lmax needs equal lengths");
    guard(s.size());
    if (d < 0)
        throw InvalidParams("d must be non-negative");

    const std::size_t n = s.size();
    const auto big = static_cast<Cost>(n + 2 * static_cast<std::size_t>(d) + 2);
    std::optional<Lmax> best;

    // For start i, row r holds ed(s[i, i+r), t[i, i+c)) for every c within d of r.
    std::vector<Cost> prev;
    std::vector<Cost> cur;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t rest = n - i;
        if (best && best->length >= rest)
            break;
        const auto width = static_cast<std::size_t>(2 * d + 1);
        prev.assign(width, big);
        cur.assign(width, big);
        auto col = [&](std::size_t r, std::size_t k) { return static_cast<std::int64_t>(r + k) - d; };
        for (std::size_t k = 0; k < width; ++k) {
            const auto c = col(0, k);
            if (c >= 0 && static_cast<std::size_t>(c) <= rest)
                prev[k] = static_cast<Cost>(c);
        }
        std::size_t furthest = 0;
        for (std::size_t r = 1; r <= rest; ++r) {
            bool alive = false;
            for (std::size_t k = 0; k < width; ++k) {
                const auto c = col(r, k);
                Cost v = big;
                if (c >= 0 && static_cast<std::size_t>(c) <= rest) {
                    if (c == 0) {
                        v = static_cast<Cost>(r);
                    }
                    else {
                        const auto cc = static_cast<std::size_t>(c);
                        v = prev[k] + (s[i + r - 1] != t[i + cc - 1] ? 1 : 0);
                        if (k + 1 < width)
                            v = std::min(v, prev[k + 1] + 1);
                        if (k > 0)
                            v = std::min(v, cur[k - 1] + 1);
                    }
                }
                cur[k] = std::min(v, big);
                alive = alive || cur[k] <= d;
            }
            std::swap(prev, cur);
            if (prev[static_cast<std::size_t>(d)] <= d)
                furthest = r;
            if (!alive)
                break;
        }
        if (furthest > 0 && (!best || furthest > best->length))
            best = Lmax{furthest, i + 1, i + furthest};
    }
    return best;
}

std::optional<Lmax> naive_lmax(std::string_view s, std::string_view t, Cost d)
{
    if (s.size() != t.size())
        throw LengthMismatch("naive_lmax needs equal lengths");
    std::optional<Lmax> best;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i; j < s.size(); ++j) {
            const std::size_t len = j - i + 1;
            if (best && len <= best->length)
                continue;
            if (full_edit_distance(s.substr(i, len), t.substr(i, len)).cost <= d)
                best = Lmax{len, i + 1, j + 1};
        }
    }
    return best;
}

std::size_t hamming(std::string_view x, std::string_view y)
{
    if (x.size() != y.size())
        throw LengthMismatch("hamming needs equal lengths");
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        count += x[i] != y[i] ? 1 : 0;
    return count;
}

} // namespace nearalign::oracle
