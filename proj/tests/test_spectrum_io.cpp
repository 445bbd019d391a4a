#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "kspect/spectrum.hpp"
#include "kspect/spectrum_io.hpp"
#include "support/oracle.hpp"

using namespace kspect;

namespace {

KSpectrum parse(const std::string& text, const Alphabet& a) {
    std::istringstream in(text);
    return read_spectrum(in, a);
}

} // namespace

TEST_SUITE_BEGIN("spectrum_io");

TEST_CASE("writer emits the documented tab-separated layout") {
    const Genome g = Genome::from_text("toy", "abcbbabcaa", Alphabet("abc"));
    const KSpectrum spec = compute_spectrum(g, 2);
    std::ostringstream out;
    write_spectrum(out, spec, g.alphabet(), g);
    CHECK(out.str() ==
          "#genome=toy length=10 masked=0\n"
          "#k=2\t#total=9\n"
          "aa\t1\nab\t2\nba\t1\nbb\t1\nbc\t2\nca\t1\ncb\t1\n");
}

TEST_CASE("write then read returns the same spectrum") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const Alphabet& a = trial % 2 == 0 ? Alphabet::dna() : Alphabet("abc");
        const Genome g = oracle::random_genome(rng, a, 2, 60, trial % 3 == 0);
        const uint32_t k = std::uniform_int_distribution<uint32_t>(1, 4)(rng);
        if (valid_positions(g, k) == 0) continue;
        const KSpectrum spec = compute_spectrum(g, k);
        std::ostringstream out;
        write_spectrum(out, spec, a);
        CHECK(parse(out.str(), a) == spec);
    }
}

TEST_CASE("reader accepts CRLF, blank lines, and unknown comment lines") {
    const KSpectrum spec =
        parse("#made-by=somewhere\r\n\r\n#k=2\t#total=3\r\nAC\t2\r\nGT\t1\r\n", Alphabet::dna());
    CHECK(spec.k() == 2);
    CHECK(spec.total() == 3);
    CHECK(spec.multiplicity(Alphabet::dna().encode("AC")) == 2);
}

TEST_CASE("reader works without a header, inferring k from the rows") {
    const KSpectrum spec = parse("AC\t2\nGT\t1\n", Alphabet::dna());
    CHECK(spec.k() == 2);
    CHECK(spec.total() == 3);
}

TEST_CASE("reader rejects malformed input") {
    const Alphabet& dna = Alphabet::dna();
    CHECK_THROWS_AS(parse("", dna), std::runtime_error);                        // nothing at all
    CHECK_THROWS_AS(parse("#k=0\t#total=0\n", dna), std::runtime_error);        // k = 0
    CHECK_THROWS_AS(parse("#k=x\nAC\t1\n", dna), std::runtime_error);           // bad k
    CHECK_THROWS_AS(parse("#total=x\nAC\t1\n", dna), std::runtime_error);       // bad total
    CHECK_THROWS_AS(parse("AC 1\n", dna), std::runtime_error);                  // no tab
    CHECK_THROWS_AS(parse("\t1\n", dna), std::runtime_error);                   // empty k-mer
    CHECK_THROWS_AS(parse("AC\t0\n", dna), std::runtime_error);                 // zero count
    CHECK_THROWS_AS(parse("AC\t-3\n", dna), std::runtime_error);                // negative count
    CHECK_THROWS_AS(parse("AC\t2.5\n", dna), std::runtime_error);               // non-integer
    CHECK_THROWS_AS(parse("AC\t1\nAC\t2\n", dna), std::runtime_error);          // duplicate k-mer
    CHECK_THROWS_AS(parse("AC\t1\nACG\t1\n", dna), std::runtime_error);         // ragged lengths
    CHECK_THROWS_AS(parse("#k=3\nAC\t1\n", dna), std::runtime_error);           // length vs header
    CHECK_THROWS_AS(parse("#k=2\t#total=5\nAC\t1\n", dna), std::runtime_error); // total mismatch
    CHECK_THROWS_AS(parse("AX\t1\n", dna), std::runtime_error);                 // foreign symbol
}

TEST_CASE("reader errors carry the offending line number") {
    try {
        parse("#k=2\t#total=3\nAC\t2\nG\t1\n", Alphabet::dna());
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("empty file with a #k header yields an empty spectrum") {
    const KSpectrum spec = parse("#k=4\t#total=0\n", Alphabet::dna());
    CHECK(spec.k() == 4);
    CHECK(spec.empty());
}

TEST_CASE("file helpers report the path on failure") {
    CHECK_THROWS_WITH_AS(read_spectrum_file("/nonexistent/spectrum.tsv", Alphabet::dna()),
                         "cannot open spectrum file: /nonexistent/spectrum.tsv",
                         std::runtime_error);
}

TEST_CASE("alphabet inference from the k-mer column") {
    std::istringstream in("#k=2\t#total=3\nac\t2\nGT\t1\n");
    CHECK(infer_spectrum_alphabet(in) == "ACGT");
}

TEST_SUITE_END();
