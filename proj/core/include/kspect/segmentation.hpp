#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kspect/spectrum.hpp"
#include "kspect/suffix_index.hpp"

namespace kspect {

/// Joins a word to a k-mer overlapping by k-1 symbols: the result is `a`
/// extended by b's final symbol. Throws std::invalid_argument unless a's
/// (k-1)-suffix equals b's (k-1)-prefix and |a| >= k, |b| == k.
Word k_concat(const Word& a, const KMer& b, uint32_t k);

/// All dictionary words overlapping alpha by k-1 symbols: every beta in dict
/// with alpha[1..k-1] == beta[0..k-2] (0-based), alpha itself included when it
/// self-overlaps. `dict` must be sorted lexicographically. Alpha is univocally
/// elongated exactly when the result has size 1.
std::vector<KMer> successors(const KMer& alpha, const std::vector<KMer>& dict);

/// A maximal word assembled from overlapping k-mer copies.
struct SpectralSegment {
    Word word;
    uint64_t multiplicity = 1;
    /// Genome interval the word was read from (0-based, half-open); absent
    /// for segments assembled from a bare spectrum.
    std::optional<Interval> origin;

    bool operator==(const SpectralSegment&) const = default;
};

/// A full segmentation outcome for one k.
struct Segmentation {
    uint32_t k = 0;
    std::vector<SpectralSegment> segments;
    /// k-mer instances consumed: sum over segments of
    /// multiplicity * (|word| - k + 1).
    uint64_t consumed = 0;
};

/// Per-k summary row of a genome segmentation.
struct SegmentationRow {
    uint32_t k = 0;
    uint64_t dict_size = 0;     // |D_k|
    uint64_t univocal_size = 0; // univocally elongated k-mers in D_k
    double ratio = 0;           // univocal_size / dict_size
    double coverage = 0;        // positions under some run's k-mers / unmasked length
    uint64_t maximals = 0;      // number of maximal runs
    double avg_len = 0;         // mean segment word length
    uint64_t max_len = 0;       // longest segment word
};

/// Genome segmentation at one k. A position i carries a `true` flag when the
/// k-mer starting there is univocally elongated (its dictionary successor set
/// has size 1; successor sets never cross masked gaps). Each maximal run
/// [i..j] of true flags yields one segment with word g[i .. min(j+k, block
/// end)] (0-based, end inclusive). Coverage counts the union of [i, j+k-1]
/// over runs. Throws std::runtime_error when the genome has no valid
/// k-window.
std::pair<Segmentation, SegmentationRow> segment_genome(const SuffixIndex& index, uint32_t k);

/// Row-only variant; skips materializing segment words.
SegmentationRow segment_genome_row(const SuffixIndex& index, uint32_t k);

/// Streaming variant: emit(word_interval, run_interval) per segment, in
/// genome order, both 0-based half-open.
using SegmentSink = std::function<void(Interval word, Interval run)>;
SegmentationRow segment_genome_stream(const SuffixIndex& index, uint32_t k,
                                      const SegmentSink& emit);

/// Chooses the next start k-mer for segment_spectrum: receives the
/// lexicographically sorted entries and the remaining multiplicities, returns
/// the index of an entry with remaining[i] > 0.
using StartPolicy =
    std::function<size_t(const std::vector<KSpectrum::Entry>& entries,
                         const std::vector<uint64_t>& remaining)>;

/// Assembles maximal segments directly from a spectrum, consuming it.
///
/// Repeatedly: pick a start k-mer (default policy: lexicographic minimum with
/// remaining multiplicity) and consume one instance; then grow the word in
/// alternating sweeps -- extend on the right while exactly one distinct k-mer
/// with remaining multiplicity overlaps the word's right end, then likewise on
/// the left, repeating both sweeps until a full round adds nothing (an end
/// with zero or several distinct candidates is blocked). Emit the word and
/// restart until every instance is used. Equal words merge into one segment
/// with a multiplicity; segments come out sorted by word.
Segmentation segment_spectrum(const KSpectrum& spec, const StartPolicy& policy = {});

/// Whether `word` can be tiled from the spectrum: every k-window of `word` is
/// a spectrum k-mer and no k-mer is used beyond its multiplicity. Such a word
/// need not be a substring of any genome realizing the spectrum.
bool is_spectral_segment(const Word& word, const KSpectrum& spec);

/// One sweep outcome; `row` is absent when that k failed (reason in `error`).
struct SweepEntry {
    uint32_t k = 0;
    std::optional<SegmentationRow> row;
    std::string error;
};

/// segment_genome_row for every k in [k_min, k_max], optionally in parallel.
/// Per-k failures (e.g. no valid window) become entries with an error reason.
/// Throws std::invalid_argument when k_min is 0 or k_min > k_max.
std::vector<SweepEntry> sweep(const SuffixIndex& index, uint32_t k_min, uint32_t k_max,
                              unsigned threads = 1);

} // namespace kspect
