#include "kspect/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace kspect {

std::string format_decimal(double x) {
    char buffer[64];
    if (x == 0 || std::fabs(x) >= 1e-4) {
        std::snprintf(buffer, sizeof buffer, "%.6f", x);
    } else {
        std::snprintf(buffer, sizeof buffer, "%.6e", x);
    }
    return buffer;
}

void write_genome_meta(std::ostream& out, const Genome& g) {
    out << "#genome=" << g.name() << " length=" << g.length() << " masked=" << g.masked_count()
        << "\n";
}

void write_indexes_report(std::ostream& out, const Genome& g, const GenomeIndexes& indexes,
                          const std::vector<IndexKRow>& rows) {
    write_genome_meta(out, g);
    if (g.masked_count() > 0) {
        out << "#note=word probabilities use valid windows only; masked positions are skipped\n";
    }
    out << "#mrl=" << indexes.mrl << "\t#mhl=" << indexes.mhl << "\t#mcl=" << indexes.mcl
        << "\t#mfl=" << indexes.mfl << "\t#lg=" << format_decimal(indexes.lg) << "\n";
    if (rows.empty()) return;
    out << "#k\tLX\tE\n";
    for (const IndexKRow& row : rows) {
        out << row.k << "\t" << format_decimal(row.lexical) << "\t" << format_decimal(row.entropy)
            << "\n";
    }
}

void write_segment_report(std::ostream& out, const Genome& g, uint32_t k_min, uint32_t k_max,
                          const std::vector<SegmentationRow>& rows) {
    write_genome_meta(out, g);
    out << "#k_min=" << k_min << "\t#k_max=" << k_max << "\n";
    out << "#k\tDk\tUk\tUk_over_Dk\tcoverage\tmaximals\tavg_len\tmax_len\n";
    for (const SegmentationRow& row : rows) {
        out << row.k << "\t" << row.dict_size << "\t" << row.univocal_size << "\t"
            << format_decimal(row.ratio) << "\t" << format_decimal(row.coverage) << "\t"
            << row.maximals << "\t" << format_decimal(row.avg_len) << "\t" << row.max_len << "\n";
    }
}

void write_segments(std::ostream& out, const Alphabet& alphabet, const Segmentation& seg,
                    const Genome* source) {
    if (source != nullptr) write_genome_meta(out, *source);
    out << "#k=" << seg.k << "\n";
    out << "#word\tmultiplicity\tstart\tend\n";
    uint64_t instances = 0;
    for (const SpectralSegment& segment : seg.segments) {
        out << alphabet.decode(segment.word) << "\t" << segment.multiplicity << "\t";
        if (segment.origin) {
            out << segment.origin->begin + 1 << "\t" << segment.origin->end << "\n";
        } else {
            out << 0 << "\t" << 0 << "\n";
        }
        instances += segment.multiplicity;
    }
    out << "#segments=" << instances << "\t#consumed=" << seg.consumed << "\n";
}

} // namespace kspect
