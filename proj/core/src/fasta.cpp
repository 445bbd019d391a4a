#include "kspect/fasta.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>

namespace kspect {

namespace {

bool is_sequence_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c));
}

std::string record_name(const std::string& header_line) {
    // name = first whitespace-delimited token after '>'
    size_t start = 1;
    while (start < header_line.size() &&
           std::isspace(static_cast<unsigned char>(header_line[start]))) {
        ++start;
    }
    size_t end = start;
    while (end < header_line.size() &&
           !std::isspace(static_cast<unsigned char>(header_line[end]))) {
        ++end;
    }
    return header_line.substr(start, end - start);
}

} // namespace

std::vector<Genome> parse_fasta(std::istream& in, const Alphabet& alphabet,
                                const FastaOptions& options) {
    std::vector<Genome> genomes;
    std::string name;
    std::vector<uint8_t> codes;
    std::vector<Interval> mask;
    bool in_record = false;

    auto mask_position = [&](uint64_t pos) {
        if (!mask.empty() && mask.back().end == pos) {
            mask.back().end = pos + 1;
        } else {
            mask.push_back({pos, pos + 1});
        }
    };

    auto flush = [&]() {
        if (!in_record) return;
        if (codes.empty()) {
            throw std::runtime_error("FASTA record '" + name + "' has no sequence");
        }
        genomes.emplace_back(name, alphabet, std::move(codes), std::move(mask));
        codes = {};
        mask = {};
    };

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush();
            in_record = true;
            name = record_name(line);
            continue;
        }
        if (!in_record) {
            throw std::runtime_error("FASTA input has sequence data before any '>' header");
        }
        for (char c : line) {
            if (!is_sequence_char(c)) continue;
            const uint64_t pos = codes.size();
            const int v = alphabet.code(c);
            const bool soft_masked =
                options.mask_lowercase && std::islower(static_cast<unsigned char>(c));
            codes.push_back(v < 0 ? 0 : static_cast<uint8_t>(v));
            if (v < 0 || soft_masked) mask_position(pos);
        }
    }
    flush();

    if (genomes.empty()) {
        throw std::runtime_error("FASTA input contains no records");
    }
    return genomes;
}

std::vector<Genome> parse_fasta_file(const std::string& path, const Alphabet& alphabet,
                                     const FastaOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open FASTA file: " + path);
    return parse_fasta(in, alphabet, options);
}

std::string infer_fasta_alphabet(std::istream& in) {
    std::set<char> seen;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '>') continue;
        for (char c : line) {
            if (!is_sequence_char(c)) continue;
            const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (u == 'N') continue;
            seen.insert(u);
        }
    }
    return std::string(seen.begin(), seen.end());
}

std::string infer_fasta_alphabet_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open FASTA file: " + path);
    return infer_fasta_alphabet(in);
}

} // namespace kspect
