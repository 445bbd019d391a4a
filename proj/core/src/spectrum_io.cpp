#include "kspect/spectrum_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kspect {

namespace {

[[noreturn]] void fail(size_t line_no, const std::string& what) {
    throw std::runtime_error("spectrum file, line " + std::to_string(line_no) + ": " + what);
}

std::optional<uint64_t> parse_u64(std::string_view text) {
    uint64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
    return value;
}

void strip_carriage_return(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::ifstream open_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum file: " + path.string());
    return in;
}

} // namespace

void write_spectrum(std::ostream& out, const KSpectrum& spec, const Alphabet& alphabet) {
    out << "#k=" << spec.k() << "\t#total=" << spec.total() << "\n";
    for (const auto& [word, count] : spec) {
        out << alphabet.decode(word) << "\t" << count << "\n";
    }
}

void write_spectrum(std::ostream& out, const KSpectrum& spec, const Alphabet& alphabet,
                    const Genome& source) {
    out << "#genome=" << source.name() << " length=" << source.length()
        << " masked=" << source.masked_count() << "\n";
    write_spectrum(out, spec, alphabet);
}

void write_spectrum_file(const std::filesystem::path& path, const KSpectrum& spec,
                         const Alphabet& alphabet) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write spectrum file: " + path.string());
    write_spectrum(out, spec, alphabet);
}

KSpectrum read_spectrum(std::istream& in, const Alphabet& alphabet) {
    std::optional<uint64_t> header_k;
    std::optional<uint64_t> header_total;
    std::vector<KSpectrum::Entry> entries;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_carriage_return(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::istringstream fields(line);
            std::string field;
            while (std::getline(fields, field, '\t')) {
                if (field.rfind("#k=", 0) == 0) {
                    header_k = parse_u64(std::string_view(field).substr(3));
                    if (!header_k || *header_k == 0) fail(line_no, "bad #k value");
                } else if (field.rfind("#total=", 0) == 0) {
                    header_total = parse_u64(std::string_view(field).substr(7));
                    if (!header_total) fail(line_no, "bad #total value");
                }
            }
            continue;
        }
        const size_t tab = line.find('\t');
        if (tab == std::string::npos) fail(line_no, "expected <kmer>\\t<count>");
        const std::string_view kmer_text = std::string_view(line).substr(0, tab);
        const std::string_view count_text = std::string_view(line).substr(tab + 1);
        if (kmer_text.empty()) fail(line_no, "empty k-mer");
        if (header_k && kmer_text.size() != *header_k) {
            fail(line_no, "k-mer length " + std::to_string(kmer_text.size()) +
                              " does not match #k=" + std::to_string(*header_k));
        }
        if (!entries.empty() && kmer_text.size() != entries.front().first.size()) {
            fail(line_no, "k-mer lengths disagree within the file");
        }
        const auto count = parse_u64(count_text);
        if (!count || *count == 0) fail(line_no, "count must be a positive integer");
        Word word;
        try {
            word = alphabet.encode(kmer_text);
        } catch (const std::exception& e) {
            fail(line_no, e.what());
        }
        entries.emplace_back(std::move(word), *count);
    }
    if (entries.empty() && !header_k) {
        throw std::runtime_error("spectrum file has no entries and no #k header");
    }
    const uint32_t k =
        header_k ? static_cast<uint32_t>(*header_k) : static_cast<uint32_t>(entries.front().first.size());
    KSpectrum spec = [&] {
        try {
            return KSpectrum(k, std::move(entries));
        } catch (const std::invalid_argument& e) {
            // e.g. duplicate k-mer rows; a file problem, not a caller bug
            throw std::runtime_error(std::string("spectrum file: ") + e.what());
        }
    }();
    if (header_total && spec.total() != *header_total) {
        throw std::runtime_error("spectrum file #total=" + std::to_string(*header_total) +
                                 " does not match the sum of counts " +
                                 std::to_string(spec.total()));
    }
    return spec;
}

KSpectrum read_spectrum_file(const std::filesystem::path& path, const Alphabet& alphabet) {
    auto in = open_file(path);
    try {
        return read_spectrum(in, alphabet);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::string infer_spectrum_alphabet(std::istream& in) {
    std::set<char> symbols;
    std::string line;
    while (std::getline(in, line)) {
        strip_carriage_return(line);
        if (line.empty() || line.front() == '#') continue;
        const size_t tab = line.find('\t');
        const size_t end = tab == std::string::npos ? line.size() : tab;
        for (size_t i = 0; i < end; ++i) {
            symbols.insert(static_cast<char>(std::toupper(static_cast<unsigned char>(line[i]))));
        }
    }
    return std::string(symbols.begin(), symbols.end());
}

std::string infer_spectrum_alphabet_file(const std::filesystem::path& path) {
    auto in = open_file(path);
    return infer_spectrum_alphabet(in);
}

} // namespace kspect
