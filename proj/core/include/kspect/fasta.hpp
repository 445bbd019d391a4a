#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kspect/genome.hpp"

namespace kspect {

struct FastaOptions {
    /// When set, lowercase (soft-masked) residues count as masked positions
    /// instead of valid symbols.
    bool mask_lowercase = false;
};

/// Parses FASTA records into one Genome per record; records are never
/// concatenated. Characters outside the alphabet become masked positions;
/// whitespace inside sequence lines is ignored. Throws std::runtime_error
/// on an empty record or an input with no records.
std::vector<Genome> parse_fasta(std::istream& in, const Alphabet& alphabet,
                                const FastaOptions& options = {});

std::vector<Genome> parse_fasta_file(const std::string& path, const Alphabet& alphabet,
                                     const FastaOptions& options = {});

/// Distinct residue characters in the FASTA sequence data ('N'/'n'
/// excluded), uppercased, in ASCII order: the symbol string for an inferred
/// Alphabet.
std::string infer_fasta_alphabet(std::istream& in);
std::string infer_fasta_alphabet_file(const std::string& path);

} // namespace kspect
