#include "support/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

using kspect::Alphabet;
using kspect::Genome;
using kspect::Interval;
using kspect::KMer;
using kspect::KSpectrum;
using kspect::Word;

std::vector<Suffix> suffix_order(const Genome& g) {
    // Same text layout as the library: codes shifted by +2, a 1 between
    // blocks, a trailing 0.
    std::string text;
    std::vector<Suffix> entries;
    std::vector<size_t> offsets; // text offset per entry
    const auto& codes = g.codes();
    for (size_t b = 0; b < g.blocks().size(); ++b) {
        if (b > 0) text.push_back(static_cast<char>(1));
        const Interval block = g.blocks()[b];
        for (uint64_t p = block.begin; p < block.end; ++p) {
            offsets.push_back(text.size());
            entries.push_back(Suffix{static_cast<uint32_t>(p),
                                     static_cast<int32_t>(block.end - p), {}});
            text.push_back(static_cast<char>(codes[p] + 2));
        }
    }
    text.push_back(static_cast<char>(0));
    for (size_t i = 0; i < entries.size(); ++i) entries[i].text = text.substr(offsets[i]);
    std::sort(entries.begin(), entries.end(),
              [](const Suffix& a, const Suffix& b) { return a.text < b.text; });
    return entries;
}

std::vector<int32_t> adjacent_lcp(const std::vector<Suffix>& suffixes) {
    std::vector<int32_t> lcp(suffixes.size(), 0);
    for (size_t i = 1; i < suffixes.size(); ++i) {
        const std::string& a = suffixes[i - 1].text;
        const std::string& b = suffixes[i].text;
        size_t n = 0;
        while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
        lcp[i] = static_cast<int32_t>(n);
    }
    return lcp;
}

uint64_t multiplicity(const Genome& g, const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    uint64_t count = 0;
    const auto& codes = g.codes();
    for (const Interval block : g.blocks()) {
        if (block.length() < w.size()) continue;
        for (uint64_t p = block.begin; p + w.size() <= block.end; ++p) {
            bool match = true;
            for (size_t j = 0; j < w.size(); ++j) {
                if (codes[p + j] != w[j]) {
                    match = false;
                    break;
                }
            }
            if (match) ++count;
        }
    }
    return count;
}

Extremes extremes(const Genome& g) {
    std::map<std::string, uint64_t> counts;
    const auto& codes = g.codes();
    for (const Interval block : g.blocks()) {
        for (uint64_t p = block.begin; p < block.end; ++p)
            for (uint64_t end = p + 1; end <= block.end; ++end)
                counts[std::string(reinterpret_cast<const char*>(codes.data()) + p, end - p)]++;
    }
    Extremes out;
    out.mhl = std::numeric_limits<uint64_t>::max();
    for (const auto& [word, count] : counts) {
        if (count >= 2) out.mrl = std::max<uint64_t>(out.mrl, word.size());
        if (count == 1) {
            out.has_hapax = true;
            out.mhl = std::min<uint64_t>(out.mhl, word.size());
        }
    }
    if (!out.has_hapax) out.mhl = 0;
    return out;
}

static KSpectrum string_spectrum(const std::string& codes, uint32_t k) {
    std::map<std::string, uint64_t> counts;
    if (k > 0)
        for (size_t i = 0; i + k <= codes.size(); ++i) counts[codes.substr(i, k)]++;
    std::vector<KSpectrum::Entry> entries;
    entries.reserve(counts.size());
    for (const auto& [word, count] : counts) entries.emplace_back(KMer(word), count);
    return KSpectrum(k, std::move(entries));
}

KSpectrum spectrum(const Genome& g, uint32_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    std::map<std::string, uint64_t> counts;
    const auto& codes = g.codes();
    for (const Interval block : g.blocks()) {
        if (block.length() < k) continue;
        for (uint64_t p = block.begin; p + k <= block.end; ++p)
            counts[std::string(reinterpret_cast<const char*>(codes.data()) + p, k)]++;
    }
    if (counts.empty())
        throw std::runtime_error("no valid window of length " + std::to_string(k));
    std::vector<KSpectrum::Entry> entries;
    entries.reserve(counts.size());
    for (const auto& [word, count] : counts) entries.emplace_back(KMer(word), count);
    return KSpectrum(k, std::move(entries));
}

std::vector<Word> realizations(const KSpectrum& spec, const Alphabet& alphabet) {
    const size_t n = spec.total() + spec.k() - 1;
    const int s = alphabet.size();
    double combos = 1;
    for (size_t i = 0; i < n; ++i) combos *= s;
    if (combos > 2e7) throw std::invalid_argument("realization search space too large");
    std::vector<Word> found;
    std::string codes(n, static_cast<char>(0));
    while (true) {
        if (string_spectrum(codes, spec.k()) == spec) found.emplace_back(codes);
        // odometer increment in code order
        size_t i = n;
        while (i > 0) {
            --i;
            if (static_cast<uint8_t>(codes[i]) + 1 < static_cast<uint8_t>(s)) {
                codes[i] = static_cast<char>(codes[i] + 1);
                break;
            }
            codes[i] = static_cast<char>(0);
            if (i == 0) return found;
        }
        if (n == 0) return found;
    }
}

GenomeSegments genome_segments(const Genome& g, uint32_t k) {
    const KSpectrum spec = spectrum(g, k);
    const std::vector<KMer> dict = kspect::dictionary(spec);

    auto successor_count = [&](const KMer& alpha) {
        const Word tail = alpha.suffix(k - 1);
        size_t count = 0;
        for (const KMer& beta : dict)
            if (beta.prefix(k - 1) == tail) ++count;
        return count;
    };

    uint64_t univocal = 0;
    for (const KMer& word : dict)
        if (successor_count(word) == 1) ++univocal;

    GenomeSegments out;
    out.row.k = k;
    out.row.dict_size = dict.size();
    out.row.univocal_size = univocal;
    out.row.ratio = static_cast<double>(univocal) / static_cast<double>(dict.size());

    const auto& codes = g.codes();
    uint64_t covered = 0;
    uint64_t length_sum = 0;
    for (const Interval block : g.blocks()) {
        if (block.length() < k) continue;
        const uint64_t last_start = block.end - k;
        uint64_t cover_end = 0;
        bool cover_open = false;
        uint64_t p = block.begin;
        while (p <= last_start) {
            const KMer alpha(
                std::string(reinterpret_cast<const char*>(codes.data()) + p, k));
            if (successor_count(alpha) != 1) {
                ++p;
                continue;
            }
            uint64_t j = p;
            while (j + 1 <= last_start) {
                const KMer next(
                    std::string(reinterpret_cast<const char*>(codes.data()) + j + 1, k));
                if (successor_count(next) != 1) break;
                ++j;
            }
            const uint64_t word_end = std::min<uint64_t>(j + k + 1, block.end);
            out.words.emplace_back(
                std::string(reinterpret_cast<const char*>(codes.data()) + p, word_end - p));
            out.origins.push_back(Interval{p, word_end});
            length_sum += word_end - p;
            out.row.max_len = std::max<uint64_t>(out.row.max_len, word_end - p);
            ++out.row.maximals;
            const uint64_t span_begin = (cover_open && p < cover_end) ? cover_end : p;
            const uint64_t span_end = j + k;
            if (span_end > span_begin) covered += span_end - span_begin;
            cover_end = std::max<uint64_t>(cover_open ? cover_end : 0, span_end);
            cover_open = true;
            p = j + 1;
        }
    }
    out.row.coverage = static_cast<double>(covered) / static_cast<double>(g.unmasked_length());
    out.row.avg_len = out.row.maximals == 0 ? 0.0
                                            : static_cast<double>(length_sum) /
                                                  static_cast<double>(out.row.maximals);
    return out;
}

std::string random_string(std::mt19937& rng, const std::string& symbols, size_t min_len,
                          size_t max_len) {
    std::uniform_int_distribution<size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<size_t> sym_dist(0, symbols.size() - 1);
    std::string out(len_dist(rng), ' ');
    for (char& c : out) c = symbols[sym_dist(rng)];
    return out;
}

Genome random_genome(std::mt19937& rng, const Alphabet& alphabet, size_t min_len,
                     size_t max_len, bool allow_mask) {
    std::string text = random_string(rng, alphabet.symbols(), min_len, max_len);
    if (allow_mask) {
        std::uniform_int_distribution<int> coin(0, 9);
        for (char& c : text)
            if (coin(rng) == 0) c = 'N' != alphabet.symbols()[0] ? 'N' : '?';
    }
    return Genome::from_text("rnd", text, alphabet);
}

} // namespace oracle
