#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "kspect/genome.hpp"
#include "kspect/spectrum.hpp"

namespace kspect {

// Tab-separated spectrum files.
//
//   #genome=<name> length=<L> masked=<count>   (optional, echoed genome metadata)
//   #k=<k>\t#total=<total>
//   <kmer>\t<count>                            (one line per k-mer, lexicographic)
//
// Decimal counts, dot-free; rows are sorted by k-mer.

void write_spectrum(std::ostream& out, const KSpectrum& spec, const Alphabet& alphabet);

// Variant that also echoes the source genome's metadata line.
void write_spectrum(std::ostream& out, const KSpectrum& spec, const Alphabet& alphabet,
                    const Genome& source);

void write_spectrum_file(const std::filesystem::path& path, const KSpectrum& spec,
                         const Alphabet& alphabet);

// Parses a spectrum file. Rejects duplicate k-mers, nonpositive counts,
// rows whose k-mer length disagrees with the header or with each other, and
// totals that contradict the header. Unknown '#' lines are ignored.
KSpectrum read_spectrum(std::istream& in, const Alphabet& alphabet);

KSpectrum read_spectrum_file(const std::filesystem::path& path, const Alphabet& alphabet);

// Distinct symbols appearing in the file's k-mer column, in ASCII order.
std::string infer_spectrum_alphabet(std::istream& in);

std::string infer_spectrum_alphabet_file(const std::filesystem::path& path);

} // namespace kspect
