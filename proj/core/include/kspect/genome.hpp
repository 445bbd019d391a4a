#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kspect/alphabet.hpp"

namespace kspect {

/// Half-open 0-based position interval [begin, end). Reports and error
/// messages render positions 1-based.
struct Interval {
    uint64_t begin = 0;
    uint64_t end = 0;

    uint64_t length() const { return end - begin; }
    bool operator==(const Interval&) const = default;
};

/// A named symbol sequence with a mask of invalid (N) positions. The valid
/// blocks -- the maximal unmasked runs -- partition the unmasked positions
/// and are precomputed at construction. Immutable afterwards, safe to share
/// across threads.
class Genome {
public:
    /// Codes at masked positions are normalized to 0. Mask intervals are
    /// sorted and coalesced; they must lie within [0, L).
    Genome(std::string name, Alphabet alphabet, std::vector<uint8_t> codes,
           std::vector<Interval> mask);

    /// Builds a genome from display text; characters outside the alphabet
    /// become masked positions.
    static Genome from_text(std::string name, std::string_view text, const Alphabet& alphabet);

    const std::string& name() const { return name_; }
    const Alphabet& alphabet() const { return alphabet_; }

    uint64_t length() const { return codes_.size(); }          // L
    uint64_t masked_count() const { return masked_count_; }
    uint64_t unmasked_length() const { return length() - masked_count_; }

    const std::vector<uint8_t>& codes() const { return codes_; }
    const std::vector<Interval>& mask() const { return mask_; }
    const std::vector<Interval>& blocks() const { return blocks_; }

    bool is_masked(uint64_t pos) const;   // 0-based

    /// Display text; masked positions render as 'N'.
    std::string to_text() const;

private:
    std::string name_;
    Alphabet alphabet_;
    std::vector<uint8_t> codes_;
    std::vector<Interval> mask_;     // sorted, disjoint, non-adjacent
    std::vector<Interval> blocks_;   // complement of mask_
    uint64_t masked_count_ = 0;
};

/// Reversed symbol sequence with the mask mirrored. An involution.
Genome reverse(const Genome& g);

/// Number of positions i where g[i .. i+k-1] lies inside one valid block.
/// L - k + 1 for an unmasked genome, 0 when k exceeds every block.
/// Throws std::invalid_argument when k == 0.
uint64_t valid_positions(const Genome& g, uint64_t k);

} // namespace kspect
