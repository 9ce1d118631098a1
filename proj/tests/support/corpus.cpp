#include "corpus.hpp"

#include <algorithm>

#include "nearalign/hardgen.hpp"

namespace testsupport {

using nearalign::Cost;
using nearalign::hardgen::bounded;

std::string random_string(std::mt19937_64& rng, std::size_t n, int alphabet)
{
    std::string out(n, 'a');
    for (auto& c : out)
        c = static_cast<char>('a' + bounded(rng, static_cast<std::uint64_t>(alphabet)));
    return out;
}

std::string mutate(std::mt19937_64& rng, const std::string& s, int edits, int alphabet)
{
    std::string t = s;
    for (int e = 0; e < edits && !t.empty(); ++e) {
        const auto pos = bounded(rng, t.size());
        const char sym = static_cast<char>('a' + bounded(rng, static_cast<std::uint64_t>(alphabet)));
        switch (bounded(rng, 3)) {
            case 0: t[pos] = sym; break;
            case 1: t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), sym); break;
            default: t.erase(t.begin() + static_cast<std::ptrdiff_t>(pos)); break;
        }
    }
    while (t.size() < s.size())
        t.push_back(static_cast<char>('a' + bounded(rng, static_cast<std::uint64_t>(alphabet))));
    t.resize(s.size());
    return t;
}

Instance random_instance(std::mt19937_64& rng, std::size_t n, Cost d, int alphabet)
{
    Instance inst;
    inst.d = d;
    inst.s = random_string(rng, n, alphabet);
    switch (bounded(rng, 3)) {
        case 0: inst.t = random_string(rng, n, alphabet); break;
        case 1: inst.t = mutate(rng, inst.s, static_cast<int>(bounded(rng, n / 4 + 2)), alphabet); break;
        default: {
            // Alternate blocks copied with few edits and blocks of noise.
            inst.t.clear();
            std::size_t at = 0;
            while (at < n) {
                const std::size_t len = std::min<std::size_t>(n - at, 4 + bounded(rng, 64));
                const std::string block = inst.s.substr(at, len);
                if (bounded(rng, 3) == 0)
                    inst.t += random_string(rng, len, alphabet);
                else
                    inst.t += mutate(rng, block, static_cast<int>(bounded(rng, static_cast<std::uint64_t>(d) + 3)),
                                     alphabet);
                at += len;
            }
            break;
        }
    }
    inst.name = "random/a" + std::to_string(alphabet) + "/n" + std::to_string(n) + "/d" + std::to_string(d);
    return inst;
}

std::vector<Instance> adversarial_families(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    for (Cost d = 0; d <= 8; d += 2) {
        for (const std::size_t n : {16UL, 100UL, 257UL}) {
            out.push_back({"all-equal", std::string(n, 'a'), std::string(n, 'a'), d});
            out.push_back({"all-equal/mismatch", std::string(n, 'a'), std::string(n, 'b'), d});
            std::string distinct_s(n, 'a');
            std::string distinct_t(n, 'a');
            for (std::size_t i = 0; i < n; ++i) {
                distinct_s[i] = static_cast<char>(i % 120 + 1);
                distinct_t[i] = static_cast<char>(i % 120 + 128);
            }
            out.push_back({"all-distinct", distinct_s, distinct_t, d});
            std::string per_s(n, 'a');
            std::string per_t(n, 'a');
            for (std::size_t i = 0; i < n; ++i) {
                per_s[i] = "abc"[i % 3];
                per_t[i] = "abc"[(i + 1) % 3];
            }
            out.push_back({"periodic/shift", per_s, per_t, d});
            std::string per2_t = per_s;
            for (std::size_t i = 5; i < n; i += 11)
                per2_t[i] = 'z';
            out.push_back({"periodic/sparse", per_s, per2_t, d});
        }
    }
    for (Cost d = 1; d <= 5; ++d) {
        for (int rep = 0; rep < 4; ++rep) {
            const std::size_t bits = static_cast<std::size_t>(d) + 2 + bounded(rng, 12);
            const auto pair = nearalign::hardgen::sample_ham_pair(bits, d, rng());
            const auto sx = nearalign::hardgen::s_transform(pair.x, d);
            const auto sy = nearalign::hardgen::s_transform(pair.y, d);
            out.push_back({"s-pair", sx, sy, d});
            out.push_back({"t-pair", nearalign::hardgen::t_transform(sx, d, bits),
                           nearalign::hardgen::t_transform(sy, d, bits), d});
        }
    }
    return out;
}

std::vector<Instance> exactness_corpus(std::size_t random_count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    const int alphabets[] = {2, 4, 26};
    for (std::size_t i = 0; i < random_count; ++i) {
        const std::size_t n = 16 + bounded(rng, 512 - 16 + 1);
        const auto d = static_cast<Cost>(bounded(rng, 9));
        out.push_back(random_instance(rng, n, d, alphabets[i % 3]));
    }
    auto adv = adversarial_families(seed ^ 0x5eedULL);
    out.insert(out.end(), adv.begin(), adv.end());
    return out;
}

} // namespace testsupport
