// kspect: k-spectra, informational indexes, spectral segmentations, and
// spectrum-based reconstruction for genome-scale symbol sequences.
//
// Subcommands: spectrum, indexes, segment, univocal, assemble.
// Data goes to --out (default stdout); diagnostics go to stderr.
// Exit codes: 0 all outputs produced, 1 failure, 3 enumeration guard hit
// (univocality unknown).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kspect/fasta.hpp"
#include "kspect/reconstruct.hpp"
#include "kspect/report.hpp"
#include "kspect/segmentation.hpp"
#include "kspect/spectrum.hpp"
#include "kspect/spectrum_io.hpp"
#include "kspect/suffix_index.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUnknown = 3;

[[noreturn]] void fail(const std::string& message) {
    throw std::runtime_error(message);
}

// Sink that is either stdout or a file opened on demand.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) fail("cannot open output file: " + path);
        stream_ = &file_;
    }

    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = &std::cout;
};

kspect::Alphabet resolve_alphabet(const std::string& selection, const std::string& inferred) {
    if (selection == "dna") return kspect::Alphabet::dna();
    if (selection == "auto") {
        if (inferred.empty()) fail("cannot infer an alphabet: no symbols in the input");
        return kspect::Alphabet(inferred);
    }
    return kspect::Alphabet(selection);
}

std::vector<kspect::Genome> load_genomes(const std::string& path, const std::string& alphabet_sel,
                                         bool mask_lowercase) {
    const kspect::Alphabet alphabet = resolve_alphabet(
        alphabet_sel,
        alphabet_sel == "auto" ? kspect::infer_fasta_alphabet_file(path) : std::string());
    kspect::FastaOptions options;
    options.mask_lowercase = mask_lowercase;
    return kspect::parse_fasta_file(path, alphabet, options);
}

kspect::KSpectrum load_spectrum(const std::string& path, const std::string& alphabet_sel,
                                kspect::Alphabet* alphabet_out) {
    const kspect::Alphabet alphabet = resolve_alphabet(
        alphabet_sel,
        alphabet_sel == "auto" ? kspect::infer_spectrum_alphabet_file(path) : std::string());
    if (alphabet_out != nullptr) *alphabet_out = alphabet;
    return kspect::read_spectrum_file(path, alphabet);
}

std::filesystem::path cache_path_for(const std::string& base, size_t record_index) {
    if (record_index == 0) return base;
    return base + "." + std::to_string(record_index);
}

kspect::SuffixIndex make_index(const kspect::Genome& g, const std::string& cache,
                               size_t record_index) {
    if (cache.empty()) return kspect::SuffixIndex(g);
    return kspect::SuffixIndex::load_or_build(cache_path_for(cache, record_index), g);
}

// ---------------------------------------------------------------------------
// Subcommand configuration and runners
// ---------------------------------------------------------------------------

struct SpectrumCmd {
    std::string fasta, out, alphabet = "dna";
    uint32_t k = 0;
    bool mask_lowercase = false;

    int run() const {
        Output output(out);
        for (const kspect::Genome& g : load_genomes(fasta, alphabet, mask_lowercase)) {
            const kspect::KSpectrum spec = kspect::compute_spectrum(g, k);
            kspect::write_spectrum(output.stream(), spec, g.alphabet(), g);
        }
        return kExitOk;
    }
};

struct IndexesCmd {
    std::string fasta, out, alphabet = "dna", cache;
    std::optional<uint32_t> k, k_min, k_max;
    bool mask_lowercase = false;

    int run() const {
        uint32_t lo = 0, hi = 0;
        if (k) {
            lo = hi = *k;
        } else if (k_min || k_max) {
            if (!k_min || !k_max) fail("--kmin and --kmax must be given together");
            lo = *k_min;
            hi = *k_max;
            if (lo == 0 || lo > hi) fail("invalid k range");
        }
        Output output(out);
        const auto genomes = load_genomes(fasta, alphabet, mask_lowercase);
        for (size_t i = 0; i < genomes.size(); ++i) {
            const kspect::Genome& g = genomes[i];
            const kspect::SuffixIndex index = make_index(g, cache, i);
            const kspect::GenomeIndexes indexes = kspect::compute_indexes(index);
            std::vector<kspect::IndexKRow> rows;
            for (uint32_t kk = lo; lo != 0 && kk <= hi; ++kk) {
                rows.push_back({kk, kspect::lexical_index(index, kk), kspect::entropy(index, kk)});
            }
            kspect::write_indexes_report(output.stream(), g, indexes, rows);
        }
        return kExitOk;
    }
};

struct SegmentCmd {
    std::string fasta, out, alphabet = "dna", cache, emit_segments;
    std::optional<uint32_t> k, k_min, k_max;
    unsigned threads = 1;
    bool mask_lowercase = false;

    int run() const {
        uint32_t lo, hi;
        if (k) {
            lo = hi = *k;
        } else if (k_min && k_max) {
            lo = *k_min;
            hi = *k_max;
        } else {
            fail("give --k, or --kmin and --kmax");
        }
        if (lo == 0 || lo > hi) fail("invalid k range");

        Output output(out);
        std::optional<Output> segments_output;
        if (!emit_segments.empty()) segments_output.emplace(emit_segments);

        const auto genomes = load_genomes(fasta, alphabet, mask_lowercase);
        for (size_t i = 0; i < genomes.size(); ++i) {
            const kspect::Genome& g = genomes[i];
            const kspect::SuffixIndex index = make_index(g, cache, i);
            std::vector<kspect::SegmentationRow> rows;
            size_t computed = 0;
            if (segments_output) {
                for (uint32_t kk = lo; kk <= hi; ++kk) {
                    try {
                        auto [seg, row] = kspect::segment_genome(index, kk);
                        ++computed;
                        if (row.univocal_size >= 1) rows.push_back(row);
                        kspect::write_segments(segments_output->stream(), g.alphabet(), seg, &g);
                    } catch (const std::exception& e) {
                        std::cerr << "kspect: k=" << kk << ": " << e.what() << "\n";
                    }
                }
            } else {
                for (const kspect::SweepEntry& entry : kspect::sweep(index, lo, hi, threads)) {
                    if (entry.row) {
                        ++computed;
                        // Tables start at the first k with a univocally
                        // elongated word; rows with none are omitted.
                        if (entry.row->univocal_size >= 1) rows.push_back(*entry.row);
                    } else {
                        std::cerr << "kspect: k=" << entry.k << ": " << entry.error << "\n";
                    }
                }
            }
            if (computed == 0) {
                fail("genome '" + g.name() + "': no k in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "] could be segmented");
            }
            kspect::write_segment_report(output.stream(), g, lo, hi, rows);
        }
        return kExitOk;
    }
};

struct UnivocalCmd {
    std::string fasta, spectrum_path, out, alphabet = "dna";
    std::optional<uint32_t> k;
    uint64_t guard = kspect::kDefaultEnumerationGuard;
    bool mask_lowercase = false;

    int run() const {
        Output output(out);
        output.stream() << "#name\tk\tstatus\trealizations\n";
        bool unknown = false;

        auto report = [&](const std::string& name, uint32_t kk, const kspect::KSpectrum& spec) {
            try {
                const std::vector<kspect::Word> all = kspect::enumerate_genomes(
                    spec, std::numeric_limits<uint64_t>::max(), guard);
                const char* status = all.size() == 1   ? "univocal"
                                     : all.empty()     ? "no_realization"
                                                       : "not_univocal";
                output.stream() << name << "\t" << kk << "\t" << status << "\t" << all.size()
                                << "\n";
            } catch (const kspect::EnumerationGuardExceeded& e) {
                std::cerr << "kspect: " << name << ": " << e.what() << "\n";
                output.stream() << name << "\t" << kk << "\tunknown\tNA\n";
                unknown = true;
            }
        };

        if (!fasta.empty()) {
            if (!k) fail("--k is required with --fasta");
            for (const kspect::Genome& g : load_genomes(fasta, alphabet, mask_lowercase)) {
                if (g.masked_count() > 0) {
                    fail("genome '" + g.name() +
                         "' has masked positions; univocality needs a single contiguous string");
                }
                report(g.name(), *k, kspect::compute_spectrum(g, *k));
            }
        } else {
            kspect::Alphabet dummy = kspect::Alphabet::dna();
            const kspect::KSpectrum spec = load_spectrum(spectrum_path, alphabet, &dummy);
            report(std::filesystem::path(spectrum_path).stem().string(), spec.k(), spec);
        }
        return unknown ? kExitUnknown : kExitOk;
    }
};

struct AssembleCmd {
    std::string fasta, spectrum_path, out, alphabet = "dna";
    std::optional<uint32_t> k;
    bool mask_lowercase = false;

    int run() const {
        Output output(out);
        if (!fasta.empty()) {
            if (!k) fail("--k is required with --fasta");
            for (const kspect::Genome& g : load_genomes(fasta, alphabet, mask_lowercase)) {
                const kspect::Segmentation seg =
                    kspect::segment_spectrum(kspect::compute_spectrum(g, *k));
                kspect::write_segments(output.stream(), g.alphabet(), seg, &g);
            }
        } else {
            kspect::Alphabet spectrum_alphabet = kspect::Alphabet::dna();
            const kspect::KSpectrum spec =
                load_spectrum(spectrum_path, alphabet, &spectrum_alphabet);
            const kspect::Segmentation seg = kspect::segment_spectrum(spec);
            kspect::write_segments(output.stream(), spectrum_alphabet, seg, nullptr);
        }
        return kExitOk;
    }
};

void add_common_input(CLI::App* cmd, std::string& fasta, std::string& alphabet,
                      bool& mask_lowercase) {
    cmd->add_option("--fasta", fasta, "FASTA input (plain text, '>' headers)")
        ->required();
    cmd->add_option("--alphabet", alphabet,
                    "dna, auto (infer from input), or an explicit symbol string");
    cmd->add_flag("--mask-lowercase", mask_lowercase,
                  "treat lowercase (soft-masked) residues as masked positions");
}

void add_either_input(CLI::App* cmd, std::string& fasta, std::string& spectrum_path,
                      std::string& alphabet, bool& mask_lowercase) {
    auto* fasta_opt =
        cmd->add_option("--fasta", fasta, "FASTA input (plain text, '>' headers)");
    cmd->add_option("--spectrum", spectrum_path, "spectrum file input (tab-separated)")
        ->excludes(fasta_opt);
    cmd->add_option("--alphabet", alphabet,
                    "dna, auto (infer from input), or an explicit symbol string");
    cmd->add_flag("--mask-lowercase", mask_lowercase,
                  "treat lowercase (soft-masked) residues as masked positions");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "k-spectra, hapax/repeat indexes, spectral segmentations, and "
        "spectrum reconstruction"};
    app.require_subcommand(1);

    SpectrumCmd spectrum_cmd;
    auto* spectrum = app.add_subcommand("spectrum", "write the k-spectrum of each FASTA record");
    add_common_input(spectrum, spectrum_cmd.fasta, spectrum_cmd.alphabet,
                     spectrum_cmd.mask_lowercase);
    spectrum->add_option("--k", spectrum_cmd.k, "word length")
        ->required()
        ->check(CLI::PositiveNumber);
    spectrum->add_option("--out", spectrum_cmd.out, "output path (default stdout)");

    IndexesCmd indexes_cmd;
    auto* indexes =
        app.add_subcommand("indexes", "mrl, mhl, mcl, mfl, lg, and per-k LX/E reports");
    add_common_input(indexes, indexes_cmd.fasta, indexes_cmd.alphabet,
                     indexes_cmd.mask_lowercase);
    indexes->add_option("--k", indexes_cmd.k, "single k for the LX/E rows")
        ->check(CLI::PositiveNumber);
    indexes->add_option("--kmin", indexes_cmd.k_min, "first k of the LX/E rows")
        ->check(CLI::PositiveNumber);
    indexes->add_option("--kmax", indexes_cmd.k_max, "last k of the LX/E rows")
        ->check(CLI::PositiveNumber);
    indexes->add_option("--out", indexes_cmd.out, "output path (default stdout)");
    indexes->add_option("--cache-index", indexes_cmd.cache,
                        "binary suffix-index cache path (built when missing)");

    SegmentCmd segment_cmd;
    auto* segment = app.add_subcommand("segment", "per-k segmentation report over a k range");
    add_common_input(segment, segment_cmd.fasta, segment_cmd.alphabet,
                     segment_cmd.mask_lowercase);
    segment->add_option("--k", segment_cmd.k, "single k")->check(CLI::PositiveNumber);
    segment->add_option("--kmin", segment_cmd.k_min, "first k")->check(CLI::PositiveNumber);
    segment->add_option("--kmax", segment_cmd.k_max, "last k")->check(CLI::PositiveNumber);
    segment->add_option("--out", segment_cmd.out, "report path (default stdout)");
    segment->add_option("--emit-segments", segment_cmd.emit_segments,
                        "also write every maximal segment to this file");
    segment->add_option("--threads", segment_cmd.threads,
                        "worker threads across k values (report-only runs)");
    segment->add_option("--cache-index", segment_cmd.cache,
                        "binary suffix-index cache path (built when missing)");

    UnivocalCmd univocal_cmd;
    auto* univocal = app.add_subcommand(
        "univocal", "decide whether the input is the only string with its k-spectrum");
    add_either_input(univocal, univocal_cmd.fasta, univocal_cmd.spectrum_path,
                     univocal_cmd.alphabet, univocal_cmd.mask_lowercase);
    univocal->add_option("--k", univocal_cmd.k, "word length (required with --fasta)")
        ->check(CLI::PositiveNumber);
    univocal->add_option("--out", univocal_cmd.out, "output path (default stdout)");
    univocal->add_option("--guard", univocal_cmd.guard,
                         "largest spectrum total the enumeration will attempt");

    AssembleCmd assemble_cmd;
    auto* assemble = app.add_subcommand(
        "assemble", "maximal segments assembled from a spectrum until it is used up");
    add_either_input(assemble, assemble_cmd.fasta, assemble_cmd.spectrum_path,
                     assemble_cmd.alphabet, assemble_cmd.mask_lowercase);
    assemble->add_option("--k", assemble_cmd.k, "word length (required with --fasta)")
        ->check(CLI::PositiveNumber);
    assemble->add_option("--out", assemble_cmd.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or a one-line usage error
        return code == 0 ? kExitOk : kExitFailure;
    }

    try {
        if (spectrum->parsed()) return spectrum_cmd.run();
        if (indexes->parsed()) return indexes_cmd.run();
        if (segment->parsed()) return segment_cmd.run();
        if (univocal->parsed()) {
            if (univocal_cmd.fasta.empty() && univocal_cmd.spectrum_path.empty()) {
                fail("give --fasta or --spectrum");
            }
            return univocal_cmd.run();
        }
        if (assemble->parsed()) {
            if (assemble_cmd.fasta.empty() && assemble_cmd.spectrum_path.empty()) {
                fail("give --fasta or --spectrum");
            }
            return assemble_cmd.run();
        }
    } catch (const std::exception& e) {
        std::cerr << "kspect: error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
