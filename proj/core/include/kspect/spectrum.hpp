#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kspect/genome.hpp"
#include "kspect/word.hpp"

namespace kspect {

/// Multiset of k-mers with positive multiplicities, kept as entries sorted
/// in alphabet order. Zero multiplicities are never stored. Immutable after
/// construction.
class KSpectrum {
public:
    using Entry = std::pair<KMer, uint64_t>;

    /// Sorts the entries; throws std::invalid_argument on a duplicate k-mer,
    /// a zero multiplicity, or a word whose length differs from k.
    KSpectrum(uint32_t k, std::vector<Entry> entries);

    static KSpectrum empty(uint32_t k) { return KSpectrum(k, {}); }

    uint32_t k() const { return k_; }
    uint64_t total() const { return total_; }
    size_t size() const { return entries_.size(); }   // |D_k|
    bool empty() const { return entries_.empty(); }

    const std::vector<Entry>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Multiplicity of a k-mer, 0 if absent.
    uint64_t multiplicity(const KMer& kmer) const;
    bool contains(const KMer& kmer) const { return multiplicity(kmer) > 0; }

    bool operator==(const KSpectrum& other) const = default;

private:
    uint32_t k_;
    std::vector<Entry> entries_;
    uint64_t total_ = 0;
};

/// Exact occurrence counts of every k-mer lying inside a valid block.
/// Throws std::runtime_error when the genome has no valid k-window.
KSpectrum compute_spectrum(const Genome& g, uint32_t k);

/// |D_k| without materializing the spectrum entries.
uint64_t distinct_kmer_count(const Genome& g, uint32_t k);

/// The key set D_k, sorted.
std::vector<KMer> dictionary(const KSpectrum& spec);

/// Keywise sum. Throws on mismatched k.
KSpectrum multiset_sum(const KSpectrum& a, const KSpectrum& b);

/// Keywise max(a - b, 0); keys reaching zero are dropped. Throws on
/// mismatched k.
KSpectrum multiset_diff(const KSpectrum& a, const KSpectrum& b);

/// Partition of D_k by multiplicity == 1 versus > 1.
std::vector<KMer> hapaxes(const KSpectrum& spec);
std::vector<KMer> repeats(const KSpectrum& spec);

/// Average multiplicity LX_k = total / |D_k|. Throws on an empty dictionary.
double lexical_index(const KSpectrum& spec);
double lexical_index(const Genome& g, uint32_t k);

/// Shannon entropy in bits of the k-mer frequency distribution, with
/// p(kmer) = multiplicity / total. Throws on an empty dictionary.
double entropy(const KSpectrum& spec);
double entropy(const Genome& g, uint32_t k);

/// Logarithmic length LG = log_s(L) with s the alphabet size and L the full
/// genome length (masked positions included).
double logarithmic_length(const Genome& g);

struct Completeness {
    uint32_t mcl = 0;   // maximal k with all s^k k-mers present
    uint32_t mfl = 1;   // minimal k with a missing k-mer; always mcl + 1
};

/// mcl is 0 when some single symbol is absent. The search stops at
/// ceil(LG), which bounds mcl.
Completeness completeness_indexes(const Genome& g);

struct GenomeClass {
    bool is_k_hapax = false;      // every k-mer occurs exactly once
    bool is_k_complete = false;   // all s^k k-mers occur
};

GenomeClass classify(const Genome& g, uint32_t k);

} // namespace kspect
