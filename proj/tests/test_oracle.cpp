#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "nearalign/oracle.hpp"
#include "support/corpus.hpp"

using namespace nearalign;

namespace {

// Independent top-down recursion used to cross-check the table DP.
int memo_distance(const std::string& a, const std::string& b)
{
    std::map<std::pair<std::size_t, std::size_t>, int> memo;
    std::function<int(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> int {
        if (i == a.size())
            return static_cast<int>(b.size() - j);
        if (j == b.size())
            return static_cast<int>(a.size() - i);
        const auto key = std::make_pair(i, j);
        if (const auto it = memo.find(key); it != memo.end())
            return it->second;
        const int v = std::min({go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1), go(i + 1, j) + 1, go(i, j + 1) + 1});
        memo[key] = v;
        return v;
    };
    return go(0, 0);
}

} // namespace

TEST_CASE("full_edit_distance values")
{
    CHECK(oracle::full_edit_distance("", "").cost == 0);
    CHECK(oracle::full_edit_distance("123456789", "123467890").cost == 2);
    CHECK(oracle::full_edit_distance("kitten", "sitting").cost == 3);
    CHECK(memo_distance("kitten", "sitting") == 3);
    CHECK(oracle::full_edit_distance("abc", "").cost == 3);
    CHECK(oracle::full_edit_distance("", "ab").cost == 2);
}

TEST_CASE("full_edit_distance agrees with the memoized recursion and is a metric")
{
    std::mt19937_64 rng(17);
    for (int it = 0; it < 400; ++it) {
        const auto a = testsupport::random_string(rng, rng() % 14, 3);
        const auto b = testsupport::random_string(rng, rng() % 14, 3);
        const auto c = testsupport::random_string(rng, rng() % 14, 3);
        const auto ab = oracle::full_edit_distance(a, b);
        CHECK(ab.cost == memo_distance(a, b));
        CHECK(ab.cost == oracle::full_edit_distance(b, a).cost);
        CHECK(ab.cost <= oracle::full_edit_distance(a, c).cost + oracle::full_edit_distance(c, b).cost);
        CHECK(apply_script(a, ab.script) == b);
        CHECK(is_canonical(ab.script));
        if (a.size() == b.size())
            CHECK(static_cast<std::size_t>(ab.cost) <= oracle::hamming(a, b));
    }
}

TEST_CASE("oracle_lmax examples")
{
    const auto ex = oracle::oracle_lmax("1234yyyyyy123456789xxxxx", "1234xxxxxx123467890yyyyy", 2);
    REQUIRE(ex);
    CHECK(*ex == oracle::Lmax{9, 11, 19});

    CHECK(*oracle::oracle_lmax("abcabcab", "abcabcab", 0) == oracle::Lmax{8, 1, 8});
    CHECK(*oracle::oracle_lmax("ab", "cd", 1) == oracle::Lmax{1, 1, 1});
    CHECK_FALSE(oracle::oracle_lmax("ab", "cd", 0));
    CHECK_FALSE(oracle::oracle_lmax("", "", 3));
    CHECK_THROWS_AS(oracle::oracle_lmax("ab", "abc", 1), LengthMismatch);
}

TEST_CASE("oracle_lmax equals the all-windows double loop")
{
    std::mt19937_64 rng(23);
    for (int it = 0; it < 150; ++it) {
        const std::size_t n = 1 + rng() % 64;
        const auto d = static_cast<Cost>(rng() % 6);
        const int alphabet = 2 + static_cast<int>(rng() % 3);
        const auto inst = testsupport::random_instance(rng, n, d, alphabet);
        CHECK(oracle::oracle_lmax(inst.s, inst.t, d) == oracle::naive_lmax(inst.s, inst.t, d));
    }
}

TEST_CASE("hamming")
{
    CHECK(oracle::hamming("0101", "0101") == 0);
    CHECK(oracle::hamming("0011", "0111") == 1);
    CHECK_THROWS_AS(oracle::hamming("0", "01"), LengthMismatch);
}

TEST_CASE("oracle refuses inputs above its size guard")
{
    const std::string big(oracle::kMaxLength + 1, 'a');
    CHECK_THROWS_AS(oracle::full_edit_distance(big, "a"), InvalidParams);
    CHECK_THROWS_AS(oracle::oracle_lmax(big, big, 1), InvalidParams);
}
