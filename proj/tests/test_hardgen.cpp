#include <doctest.h>

#include <algorithm>
#include <random>

#include "nearalign/exact.hpp"
#include "nearalign/hardgen.hpp"
#include "nearalign/oracle.hpp"

using namespace nearalign;

TEST_CASE("s_transform expansion")
{
    CHECK(hardgen::s_transform("01", 1) == "011111");
    CHECK(hardgen::s_transform("1", 0) == "11");
    CHECK(hardgen::s_transform("", 3).empty());
    CHECK(hardgen::s_transform("0110", 2).size() == 16);
    CHECK_THROWS_AS(hardgen::s_transform("012", 1), InvalidParams);
}

TEST_CASE("t_transform padding")
{
    CHECK(hardgen::t_transform("01", 1, 2) == "110111");
    CHECK(hardgen::t_transform("", 4, 0).empty());
    // (d+1)n odd: the right pad takes the extra one.
    CHECK(hardgen::t_transform("0", 0, 1) == "01");
    CHECK(hardgen::t_transform("0", 2, 1) == "1011");
}

TEST_CASE("sample_ham_pair distribution contract")
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 8 + seed % 40;
        const auto d = static_cast<Cost>(seed % 7);
        const auto p = hardgen::sample_ham_pair(n, d, seed);
        REQUIRE(p.x.size() == n);
        REQUIRE(p.y.size() == n);
        CHECK(std::count(p.x.begin(), p.x.end(), '1') == d);
        const auto ham = oracle::hamming(p.x, p.y);
        CHECK((ham == static_cast<std::size_t>(d) || ham == static_cast<std::size_t>(d) + 1));
    }
}

TEST_CASE("sample_ham_pair is reproducible")
{
    const auto a = hardgen::sample_ham_pair(32, 4, 7);
    const auto b = hardgen::sample_ham_pair(32, 4, 7);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    const auto c = hardgen::sample_ham_pair(32, 4, 8);
    CHECK((c.x != a.x || c.y != a.y));
    // Frozen output of the generator for (n=32, d=4, seed=7).
    CHECK(a.x == "00000001000001100000100000000000");
    CHECK(a.y == "10000001000011100100100000001010");
}

TEST_CASE("sample_ham_pair rejects d + 1 > n")
{
    CHECK_THROWS_AS(hardgen::sample_ham_pair(3, 3, 1), InvalidParams);
    CHECK_NOTHROW(hardgen::sample_ham_pair(4, 3, 1));
}

TEST_CASE("bounded draws stay in range and cover it")
{
    std::mt19937_64 rng(1);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto v = hardgen::bounded(rng, 7);
        REQUIRE(v < 7);
        ++seen[v];
    }
    for (const int c : seen)
        CHECK(c > 800);
}

TEST_CASE("ed(s(x), s(y)) equals HAM(x, y) on sampled pairs")
{
    std::mt19937_64 rng(31);
    for (int it = 0; it < 300; ++it) {
        const auto d = static_cast<Cost>(rng() % 6);
        const std::size_t n = static_cast<std::size_t>(d) + 1 + rng() % 30;
        const auto p = hardgen::sample_ham_pair(n, d, rng());
        const auto sx = hardgen::s_transform(p.x, d);
        const auto sy = hardgen::s_transform(p.y, d);
        CHECK(sx.size() == n * static_cast<std::size_t>(d + 2));
        CHECK(static_cast<std::size_t>(oracle::full_edit_distance(sx, sy).cost) == oracle::hamming(p.x, p.y));
    }
}

TEST_CASE("exact engine reports the full t-pair iff HAM <= d")
{
    std::mt19937_64 rng(37);
    for (int it = 0; it < 200; ++it) {
        const auto d = static_cast<Cost>(1 + rng() % 3);
        const std::size_t n = static_cast<std::size_t>(d) + 1 + rng() % (16 - static_cast<std::size_t>(d));
        const auto p = hardgen::sample_ham_pair(n, d, rng());
        const auto tx = hardgen::t_transform(hardgen::s_transform(p.x, d), d, n);
        const auto ty = hardgen::t_transform(hardgen::s_transform(p.y, d), d, n);
        CHECK(tx.size() == n * static_cast<std::size_t>(d + 2) + n * static_cast<std::size_t>(d + 1));
        ExactEngine engine(d);
        for (std::size_t i = 0; i < tx.size(); ++i)
            engine.step(tx[i], ty[i]);
        const auto r = engine.result();
        const bool full = r && r->length() == tx.size();
        CHECK(full == (oracle::hamming(p.x, p.y) <= static_cast<std::size_t>(d)));
    }
}
