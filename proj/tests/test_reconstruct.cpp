#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "kspect/reconstruct.hpp"
#include "kspect/spectrum.hpp"
#include "support/oracle.hpp"

using namespace kspect;

namespace {

std::vector<std::string> decoded(const std::vector<Word>& words, const Alphabet& a) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(a.decode(w));
    return out;
}

KSpectrum text_spectrum(const std::string& text, const Alphabet& a, uint32_t k) {
    return compute_spectrum(Genome::from_text("t", text, a), k);
}

} // namespace

TEST_SUITE_BEGIN("reconstruct");

TEST_CASE("overlap multigraph structure") {
    const Alphabet abc("abc");
    const DeBruijnMultigraph graph = build_graph(text_spectrum("aabcac", abc, 2));
    CHECK(graph.k == 2);
    CHECK(decoded(graph.nodes, abc) == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(graph.edges.size() == 5);
    std::vector<std::string> edge_words;
    for (const auto& e : graph.edges) {
        edge_words.push_back(abc.decode(e.word));
        CHECK(e.word.prefix(1) == graph.nodes[e.from]);
        CHECK(e.word.suffix(1) == graph.nodes[e.to]);
        CHECK(e.multiplicity == 1);
    }
    CHECK(edge_words == std::vector<std::string>{"aa", "ab", "ac", "bc", "ca"});
    CHECK(graph.out_minus_in == std::vector<int64_t>{1, 0, -1});
    CHECK(graph.total_multiplicity() == 5);
    CHECK_THROWS_AS(build_graph(KSpectrum::empty(2)), std::invalid_argument);
}

TEST_CASE("a hapax spectrum may still admit several genomes") {
    const Alphabet abc("abc");
    const KSpectrum spec = text_spectrum("aabcac", abc, 2);
    // Every 2-mer occurs once...
    for (const auto& [word, count] : spec) CHECK(count == 1);
    // ...yet four strings share this spectrum, listed lexicographically.
    CHECK(decoded(enumerate_genomes(spec), abc) ==
          std::vector<std::string>{"aabcac", "aacabc", "abcaac", "acaabc"});
    const Genome g = Genome::from_text("g", "aabcac", abc);
    CHECK_FALSE(is_k_univocal(g, 2));
    CHECK(is_k_univocal(g, 3)); // one more symbol of context pins the string
}

TEST_CASE("repeated single k-mer pins the unary string") {
    const Alphabet ab("ab");
    const Genome g = Genome::from_text("g", "aaaa", ab);
    CHECK(is_k_univocal(g, 2));
    CHECK(decoded(enumerate_genomes(compute_spectrum(g, 2)), ab) ==
          std::vector<std::string>{"aaaa"});
}

TEST_CASE("spectra with no realization yield an empty list") {
    const Alphabet ab("ab");
    // Disconnected: no string contains aa and bb without ab or ba.
    const KSpectrum split(2, {{ab.encode("aa"), 1}, {ab.encode("bb"), 1}});
    CHECK(enumerate_genomes(split).empty());
    // Imbalanced: surplus of 2 at one node.
    const KSpectrum doubled(2, {{ab.encode("ab"), 2}});
    CHECK(enumerate_genomes(doubled).empty());
}

TEST_CASE("limit truncates the enumeration after the lexicographically first results") {
    const Alphabet abc("abc");
    const KSpectrum spec = text_spectrum("aabcac", abc, 2);
    CHECK(decoded(enumerate_genomes(spec, 1), abc) == std::vector<std::string>{"aabcac"});
    CHECK(decoded(enumerate_genomes(spec, 2), abc) ==
          std::vector<std::string>{"aabcac", "aacabc"});
    CHECK(enumerate_genomes(spec, 0).empty());
}

TEST_CASE("single-symbol words enumerate the distinct permutations") {
    const Alphabet ab("ab");
    const KSpectrum spec(1, {{ab.encode("a"), 2}, {ab.encode("b"), 1}});
    CHECK(decoded(enumerate_genomes(spec), ab) ==
          std::vector<std::string>{"aab", "aba", "baa"});
}

TEST_CASE("enumeration matches brute force on every short binary string") {
    const Alphabet ab("ab");
    for (uint32_t len = 2; len <= 8; ++len) {
        for (uint32_t bits = 0; bits < (1u << len); ++bits) {
            std::string text(len, 'a');
            for (uint32_t i = 0; i < len; ++i)
                if ((bits >> i) & 1u) text[i] = 'b';
            for (uint32_t k = 2; k <= 3 && k <= len; ++k) {
                const KSpectrum spec = text_spectrum(text, ab, k);
                const std::vector<Word> got = enumerate_genomes(spec);
                const std::vector<Word> want = oracle::realizations(spec, ab);
                CHECK(got == want);
                CHECK(std::is_sorted(got.begin(), got.end()));
                // The source string itself always realizes its spectrum.
                CHECK(std::find(got.begin(), got.end(), ab.encode(text)) != got.end());
            }
        }
    }
}

TEST_CASE("every enumerated string has exactly the input spectrum") {
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 100; ++trial) {
        const Alphabet& a = trial % 2 == 0 ? Alphabet("ab") : Alphabet("abc");
        const Genome g = oracle::random_genome(rng, a, 3, 14, false);
        const uint32_t k = std::uniform_int_distribution<uint32_t>(2, 4)(rng);
        if (k > g.length()) continue;
        const KSpectrum spec = compute_spectrum(g, k);
        const std::vector<Word> all = enumerate_genomes(spec, 64, 64);
        CHECK_FALSE(all.empty());
        for (const Word& w : all) {
            const Genome candidate("c", a, std::vector<uint8_t>(w.codes().begin(),
                                                                w.codes().end()), {});
            CHECK(compute_spectrum(candidate, k) == spec);
        }
    }
}

TEST_CASE("reversal maps realizations onto realizations") {
    std::mt19937 rng(271);
    for (int trial = 0; trial < 100; ++trial) {
        const Genome g = oracle::random_genome(rng, Alphabet("ab"), 2, 12, false);
        const uint32_t k = std::uniform_int_distribution<uint32_t>(1, 3)(rng);
        if (k > g.length()) continue;
        // No limit: the mirror argument needs the complete sets on both sides.
        constexpr uint64_t kNoLimit = std::numeric_limits<uint64_t>::max();
        const auto fwd = enumerate_genomes(compute_spectrum(g, k), kNoLimit, 64);
        const auto bwd = enumerate_genomes(compute_spectrum(reverse(g), k), kNoLimit, 64);
        REQUIRE(fwd.size() == bwd.size());
        std::vector<Word> mirrored;
        for (const Word& w : bwd) mirrored.push_back(w.reversed());
        std::sort(mirrored.begin(), mirrored.end());
        CHECK(fwd == mirrored);
    }
}

TEST_CASE("the enumeration guard turns oversized searches into errors, not answers") {
    const Alphabet ab("ab");
    const std::string text(26, 'a'); // 25 2-mer instances, above the default guard of 24
    const Genome g = Genome::from_text("g", text, ab);
    const KSpectrum spec = compute_spectrum(g, 2);
    CHECK_THROWS_AS(enumerate_genomes(spec), EnumerationGuardExceeded);
    try {
        is_k_univocal(g, 2);
        FAIL("expected the guard to fire");
    } catch (const EnumerationGuardExceeded& e) {
        CHECK(e.total() == 25);
        CHECK(e.guard() == kDefaultEnumerationGuard);
    }
    // An explicit higher guard lets the search run.
    CHECK(is_k_univocal(g, 2, 25));
}

TEST_CASE("univocality is undefined for masked genomes") {
    const Genome g = Genome::from_text("g", "ACNNGT", Alphabet::dna());
    CHECK_THROWS_AS(is_k_univocal(g, 2), std::invalid_argument);
}

TEST_SUITE_END();
