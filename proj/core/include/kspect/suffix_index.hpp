#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <vector>

#include "kspect/genome.hpp"
#include "kspect/spectrum.hpp"

namespace kspect {

/// Whole-genome word-length indexes. Lengths are in symbols.
struct GenomeIndexes {
    uint64_t mrl = 0; ///< longest word occurring more than once
    uint64_t mhl = 0; ///< shortest word occurring exactly once
    uint64_t mcl = 0; ///< largest k whose dictionary holds all s^k words
    uint64_t mfl = 0; ///< shortest length at which some word is absent, mcl + 1
    double lg = 0;    ///< log_s of the genome length (masked positions included)
};

/// Suffix array over the unmasked blocks of a genome, with adjacent-suffix
/// longest-common-prefix lengths. Masked gaps act as hard breaks: no word
/// spans one, and comparisons never treat symbols from different blocks as
/// one contiguous word.
///
/// Entries are the unmasked genome positions in suffix order. For each rank r:
///   position(r)  genome offset of the suffix,
///   remaining(r) symbols from that offset to the end of its block,
///   lcp(r)       common-prefix length with the suffix at rank r-1, measured
///                on the underlying block text (it may exceed remaining();
///                callers clamp against remaining() as needed).
///
/// The index borrows the genome: the Genome must outlive the SuffixIndex.
class SuffixIndex {
public:
    explicit SuffixIndex(const Genome& g);

    const Genome& genome() const { return *genome_; }

    /// Number of suffix entries: one per unmasked position.
    size_t entry_count() const { return sa_.size(); }
    uint32_t position(size_t rank) const { return sa_[rank]; }
    int32_t remaining(size_t rank) const { return rem_[rank]; }
    int32_t lcp(size_t rank) const { return lcp_[rank]; }

    /// Length of the longest word with at least two occurrences; 0 when every
    /// symbol is unique.
    uint64_t max_repeat_length() const { return mrl_; }

    /// Whether any word occurs exactly once. False e.g. when the genome is
    /// two copies of the same block.
    bool has_hapax() const { return has_hapax_; }

    /// Length of the shortest word with exactly one occurrence. Throws
    /// std::runtime_error when no word is unique.
    uint64_t min_hapax_length() const;

    /// Number of distinct words of length k (k >= 1).
    uint64_t distinct_kmers(uint32_t k) const;

    /// Calls fn(const KMer&, const std::vector<uint32_t>& positions) once per
    /// distinct word of length k, in lexicographic order. Positions are
    /// 0-based genome offsets in ascending order.
    template <typename Fn>
    void for_each_kmer(uint32_t k, Fn&& fn) const {
        if (k == 0) throw std::invalid_argument("k must be at least 1");
        const int32_t ik = static_cast<int32_t>(std::min<uint32_t>(
            k, static_cast<uint32_t>(std::numeric_limits<int32_t>::max())));
        std::vector<uint32_t> positions;
        int32_t run = std::numeric_limits<int32_t>::max();
        auto flush = [&] {
            if (positions.empty()) return;
            std::sort(positions.begin(), positions.end());
            const auto* codes = genome_->codes().data();
            const KMer kmer(std::string(reinterpret_cast<const char*>(codes) + positions.front(), k));
            fn(kmer, positions);
            positions.clear();
        };
        for (size_t r = 0; r < sa_.size(); ++r) {
            if (r > 0) run = std::min(run, lcp_[r]);
            if (rem_[r] < ik) continue;
            if (run < ik) flush();
            positions.push_back(sa_[r]);
            run = std::numeric_limits<int32_t>::max();
        }
        flush();
    }

    /// Writes the index to a binary cache file.
    void save(const std::filesystem::path& path) const;

    /// Reads a cache file, verifying that it matches the genome; throws on
    /// magic/version/digest mismatch or truncation.
    static SuffixIndex load(const std::filesystem::path& path, const Genome& g);

    /// Loads the cache when present and valid, otherwise builds and saves it.
    static SuffixIndex load_or_build(const std::filesystem::path& path, const Genome& g);

private:
    SuffixIndex() = default;

    void scan_extremes();

    const Genome* genome_ = nullptr;
    std::vector<uint32_t> sa_;
    std::vector<int32_t> lcp_;
    std::vector<int32_t> rem_;
    uint64_t mrl_ = 0;
    uint64_t mhl_ = 0;
    bool has_hapax_ = false;
};

/// mrl/mhl from the index, mcl/mfl from distinct-word counts, lg from the
/// genome length. Throws when the genome has no unique word (mhl undefined).
GenomeIndexes compute_indexes(const SuffixIndex& index);

/// Convenience overload that builds a throwaway index.
GenomeIndexes compute_indexes(const Genome& g);

/// Index-backed equivalents of the spectrum-based definitions; same values,
/// computed by an independent route.
double lexical_index(const SuffixIndex& index, uint32_t k);
double entropy(const SuffixIndex& index, uint32_t k);

} // namespace kspect
