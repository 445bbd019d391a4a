#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kspect/genome.hpp"
#include "kspect/spectrum.hpp"

namespace kspect {

/// Overlap multigraph of a spectrum: nodes are the (k-1)-long prefixes and
/// suffixes of the spectrum's k-mers; each k-mer is an edge from its prefix
/// to its suffix, carrying the k-mer's multiplicity. For k = 1 there is a
/// single empty-word node and every 1-mer is a self-loop.
struct DeBruijnMultigraph {
    struct Edge {
        KMer word;
        uint32_t from = 0;
        uint32_t to = 0;
        uint64_t multiplicity = 0;
    };

    uint32_t k = 0;
    std::vector<Word> nodes;                    // sorted, unique
    std::vector<Edge> edges;                    // sorted by word
    std::vector<std::vector<uint32_t>> out_edges; // per node, edge indices, sorted by word
    std::vector<int64_t> out_minus_in;          // out-degree surplus per node (with multiplicity)

    uint64_t total_multiplicity() const;
};

/// Builds the overlap multigraph. Throws std::invalid_argument on an empty
/// spectrum.
DeBruijnMultigraph build_graph(const KSpectrum& spec);

/// Raised when an enumeration would walk more k-mer instances than the guard
/// allows; the answer is unknown rather than false.
class EnumerationGuardExceeded : public std::runtime_error {
public:
    EnumerationGuardExceeded(uint64_t total, uint64_t guard)
        : std::runtime_error("spectrum holds " + std::to_string(total) +
                             " k-mer instances, above the enumeration guard of " +
                             std::to_string(guard) +
                             "; raise the guard to force the search"),
          total_(total), guard_(guard) {}

    uint64_t total() const { return total_; }
    uint64_t guard() const { return guard_; }

private:
    uint64_t total_;
    uint64_t guard_;
};

inline constexpr uint64_t kDefaultEnumerationGuard = 24;

/// Every distinct string whose k-spectrum equals `spec`: all spellings of
/// edge-exhausting walks of the multigraph, in lexicographic order, at most
/// `limit` of them. Starts are the out-surplus node when the graph has one,
/// otherwise every node. Returns an empty list when no realization exists.
/// Throws EnumerationGuardExceeded when spec.total() > guard.
std::vector<Word> enumerate_genomes(const KSpectrum& spec,
                                    uint64_t limit = std::numeric_limits<uint64_t>::max(),
                                    uint64_t guard = kDefaultEnumerationGuard);

/// True when g is the only string with its k-spectrum. Requires an unmasked
/// genome (a masked genome is not a single string). Throws
/// EnumerationGuardExceeded when the spectrum is larger than the guard.
bool is_k_univocal(const Genome& g, uint32_t k, uint64_t guard = kDefaultEnumerationGuard);

} // namespace kspect
