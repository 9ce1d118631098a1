#include <doctest.h>

#include <cmath>
#include <random>

#include "nearalign/approx.hpp"
#include "nearalign/oracle.hpp"
#include "support/corpus.hpp"

using namespace nearalign;

namespace {

const std::string kS = "1234yyyyyy123456789xxxxx";
const std::string kT = "1234xxxxxx123467890yyyyy";

template <class Engine>
std::optional<NearAlignment> drive(Engine& engine, const std::string& s, const std::string& t)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        engine.step(s[i], t[i]);
    return engine.result();
}

// Replays the additive checkpoint rule directly with the full DP.
std::optional<oracle::Lmax> additive_reference(const std::string& s, const std::string& t, Cost d, Position e)
{
    Position best_start = 0;
    Position best_len = 0;
    for (Position x = 1; x <= s.size(); ++x) {
        for (Position c = e; c <= x; c += e) {
            const Position len = x - c + 1;
            if (len <= best_len)
                break;
            const auto off = static_cast<std::size_t>(c - 1);
            if (oracle::full_edit_distance(s.substr(off, len), t.substr(off, len)).cost <= d) {
                best_start = c;
                best_len = len;
                break;
            }
        }
    }
    if (best_len == 0)
        return std::nullopt;
    return oracle::Lmax{best_len, best_start, best_start + best_len - 1};
}

} // namespace

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(MultiplicativeEngine(2, 0.0), InvalidEpsilon);
    CHECK_THROWS_AS(MultiplicativeEngine(2, -1.0), InvalidEpsilon);
    CHECK_THROWS_AS(MultiplicativeEngine(2, std::nan("")), InvalidEpsilon);
    CHECK_THROWS_AS(AdditiveEngine(2, 0), InvalidWindow);
    CHECK_THROWS_AS(AdditiveEngine(-1, 3), InvalidParams);
}

TEST_CASE("level constants")
{
    MultiplicativeEngine e021(2, 0.21);
    CHECK(e021.alpha() == doctest::Approx(0.1));
    CHECK(e021.k0() == 27);
    CHECK(e021.spacing(27) == 1);
    CHECK(e021.spacing(26) == 0);
    CHECK(e021.retention(27) == doctest::Approx(2.0 * std::pow(1.1, 27)));

    MultiplicativeEngine e3(2, 3.0);
    CHECK(e3.alpha() == doctest::Approx(1.0));
    CHECK(e3.k0() == 2);
    CHECK(e3.spacing(2) == 1);
    CHECK(e3.spacing(5) == 8);
}

TEST_CASE("identical streams are reported in full")
{
    for (const double eps : {0.21, 0.5, 3.0}) {
        MultiplicativeEngine m(1, eps);
        std::string s(1000, 'q');
        const auto r = drive(m, s, s);
        REQUIRE(r);
        CHECK(r->start == 1);
        CHECK(r->length() == 1000);
        CHECK_FALSE(r->script);
    }
    AdditiveEngine a(0, 1);
    const std::string s = "abcabcabcabc";
    const auto r = drive(a, s, s);
    REQUIRE(r);
    CHECK(r->length() == s.size());
}

TEST_CASE("multiplicative on the two-region example")
{
    MultiplicativeEngine m(2, 0.21);
    const auto r = drive(m, kS, kT);
    REQUIRE(r);
    CHECK(r->length() >= 8);
    CHECK(r->length() <= 9);
    const auto off = static_cast<std::size_t>(r->start - 1);
    const auto len = static_cast<std::size_t>(r->length());
    CHECK(oracle::full_edit_distance(kS.substr(off, len), kT.substr(off, len)).cost <= 2);
    CHECK(r->mode == Mode::multiplicative);
    CHECK(r->params.epsilon == 0.21);
}

TEST_CASE("additive on the two-region example")
{
    AdditiveEngine a(2, 5);
    const auto r = drive(a, kS, kT);
    REQUIRE(r);
    // Checkpoint 10 covers y12345 / x12346 (two substitutions) before it dies at 16.
    CHECK(r->start == 10);
    CHECK(r->end == 15);
    CHECK(r->length() == 6);
    CHECK(*additive_reference(kS, kT, 2, 5) == oracle::Lmax{6, 10, 15});
    CHECK(a.checkpoint_positions() == std::vector<Position>{5, 10, 15, 20});
}

TEST_CASE("nothing qualifies")
{
    MultiplicativeEngine m(0, 0.5);
    AdditiveEngine a(0, 2);
    CHECK_FALSE(drive(m, "abcd", "efgh"));
    CHECK_FALSE(drive(a, "abcd", "efgh"));
}

TEST_CASE("additive engine equals a direct replay of the checkpoint rule")
{
    std::mt19937_64 rng(41);
    for (int it = 0; it < 150; ++it) {
        const std::size_t n = 8 + rng() % 80;
        const auto d = static_cast<Cost>(rng() % 5);
        const Position e = 1 + rng() % 9;
        const auto inst = testsupport::random_instance(rng, n, d, 2 + static_cast<int>(rng() % 3));
        AdditiveEngine a(d, e);
        const auto r = drive(a, inst.s, inst.t);
        const auto want = additive_reference(inst.s, inst.t, d, e);
        REQUIRE(r.has_value() == want.has_value());
        if (r) {
            CHECK(r->start == want->start);
            CHECK(r->length() == want->length);
        }
    }
}

TEST_CASE("approximation bounds on random instances")
{
    std::mt19937_64 rng(43);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 16 + rng() % 200;
        const auto d = static_cast<Cost>(rng() % 7);
        const auto inst = testsupport::random_instance(rng, n, d, 2 + static_cast<int>(rng() % 3));
        const auto lmax = oracle::oracle_lmax(inst.s, inst.t, d);
        const double want = lmax ? static_cast<double>(lmax->length) : 0.0;

        const double eps = it % 2 == 0 ? 0.25 : 1.0;
        MultiplicativeEngine m(d, eps);
        const auto rm = drive(m, inst.s, inst.t);
        const double got = rm ? static_cast<double>(rm->length()) : 0.0;
        CHECK(want <= (1.0 + eps) * got + 1e-9);
        CHECK(got <= want);

        const Position e = 1 + rng() % 20;
        AdditiveEngine a(d, e);
        const auto ra = drive(a, inst.s, inst.t);
        const double gota = ra ? static_cast<double>(ra->length()) : 0.0;
        CHECK(want - static_cast<double>(e) <= gota);
        CHECK(gota <= want);
    }
}

TEST_CASE("level layout holds at every step")
{
    for (const double eps : {0.21, 1.0, 3.0}) {
        MultiplicativeEngine m(1, eps);
        std::mt19937_64 rng(47);
        for (Position x = 1; x <= 5000; ++x) {
            const char c = static_cast<char>('a' + rng() % 2);
            m.step(c, rng() % 8 == 0 ? 'z' : c);
            for (int k = m.k0(); k <= m.max_level(); ++k) {
                const auto pos = m.level_positions(k);
                const Position sp = m.spacing(k);
                REQUIRE(sp >= 1);
                for (std::size_t i = 0; i < pos.size(); ++i) {
                    CHECK(pos[i] % sp == 0);
                    CHECK(static_cast<double>(pos[i]) >= static_cast<double>(x) - m.retention(k));
                    CHECK(pos[i] <= x);
                    if (i > 0)
                        CHECK(pos[i] - pos[i - 1] == sp);
                }
                // The newest multiple of the spacing is always present.
                REQUIRE_FALSE(pos.empty());
                CHECK(pos.back() == x - x % sp);
            }
            CHECK(m.live_sketches() <= m.live_checkpoints());
        }
        CHECK(m.spacing(m.max_level() + 1) > 5000);
    }
}

TEST_CASE("thread count does not change results")
{
    std::mt19937_64 rng(53);
    for (int it = 0; it < 30; ++it) {
        const auto inst = testsupport::random_instance(rng, 300, 3, 2);
        MultiplicativeEngine m1(3, 0.1, 1);
        MultiplicativeEngine m8(3, 0.1, 8);
        CHECK(drive(m1, inst.s, inst.t) == drive(m8, inst.s, inst.t));
        AdditiveEngine a1(3, 1, 1);
        AdditiveEngine a8(3, 1, 8);
        CHECK(drive(a1, inst.s, inst.t) == drive(a8, inst.s, inst.t));
    }
}
