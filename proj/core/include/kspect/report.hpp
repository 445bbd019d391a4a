#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kspect/genome.hpp"
#include "kspect/segmentation.hpp"
#include "kspect/suffix_index.hpp"

namespace kspect {

/// Locale-independent decimal rendering used by every report: fixed six
/// decimals for |x| >= 1e-4 and for 0, scientific with six decimals below
/// that. Always a dot decimal separator.
std::string format_decimal(double x);

/// `#genome=<name> length=<L> masked=<count>` metadata line.
void write_genome_meta(std::ostream& out, const Genome& g);

/// Per-k row of the indexes report.
struct IndexKRow {
    uint32_t k = 0;
    double lexical = 0; // window count over distinct words
    double entropy = 0; // Shannon entropy of the word distribution, bits
};

/// Indexes report: metadata, whole-genome summary, then one row per
/// requested k. When the genome has masked positions a note line records
/// that probabilities are taken over valid windows only.
void write_indexes_report(std::ostream& out, const Genome& g, const GenomeIndexes& indexes,
                          const std::vector<IndexKRow>& rows);

/// Segmentation sweep report: metadata, k range, column header, then one row
/// per entry (entries with errors are skipped by the caller).
void write_segment_report(std::ostream& out, const Genome& g, uint32_t k_min, uint32_t k_max,
                          const std::vector<SegmentationRow>& rows);

/// Segment list: one row per segment (`word  multiplicity  start  end`,
/// 1-based inclusive positions, `0 0` for segments without a genome origin),
/// then a `#segments=...  #consumed=...` trailer. Pass the source genome to
/// prepend its metadata line, or nullptr for spectrum-derived segmentations.
void write_segments(std::ostream& out, const Alphabet& alphabet, const Segmentation& seg,
                    const Genome* source);

} // namespace kspect
