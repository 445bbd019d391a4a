#include "kspect/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kspect {

namespace {

bool packable(const Genome& g, uint32_t k) {
    return k >= 1 && k <= 16 && g.alphabet().size() <= 16;
}

// 4 bits per symbol, first symbol in the most significant nibble, so that
// integer order equals lexicographic order.
std::vector<uint64_t> collect_packed_windows(const Genome& g, uint32_t k) {
    std::vector<uint64_t> windows;
    windows.reserve(valid_positions(g, k));
    const uint64_t mask = (k == 16) ? ~0ull : ((1ull << (4 * k)) - 1);
    const auto& codes = g.codes();
    for (const Interval& block : g.blocks()) {
        if (block.length() < k) continue;
        uint64_t v = 0;
        for (uint64_t p = block.begin; p < block.end; ++p) {
            v = ((v << 4) | codes[p]) & mask;
            if (p + 1 >= block.begin + k) windows.push_back(v);
        }
    }
    std::sort(windows.begin(), windows.end());
    return windows;
}

std::vector<std::string> collect_code_windows(const Genome& g, uint32_t k) {
    std::vector<std::string> windows;
    windows.reserve(valid_positions(g, k));
    const auto& codes = g.codes();
    for (const Interval& block : g.blocks()) {
        if (block.length() < k) continue;
        for (uint64_t p = block.begin; p + k <= block.end; ++p) {
            windows.emplace_back(reinterpret_cast<const char*>(codes.data()) + p, k);
        }
    }
    std::sort(windows.begin(), windows.end());
    return windows;
}

Word unpack(uint64_t v, uint32_t k) {
    std::string codes(k, '\0');
    for (uint32_t i = 0; i < k; ++i) {
        codes[i] = static_cast<char>((v >> (4 * (k - 1 - i))) & 0xF);
    }
    return Word(std::move(codes));
}

// Calls fn(count) once per distinct k-mer, in lexicographic order.
template <typename Fn>
void for_each_count(const Genome& g, uint32_t k, Fn&& fn) {
    if (packable(g, k)) {
        const auto windows = collect_packed_windows(g, k);
        for (size_t i = 0; i < windows.size();) {
            size_t j = i;
            while (j < windows.size() && windows[j] == windows[i]) ++j;
            fn(windows[i], j - i);
            i = j;
        }
    } else {
        const auto windows = collect_code_windows(g, k);
        for (size_t i = 0; i < windows.size();) {
            size_t j = i;
            while (j < windows.size() && windows[j] == windows[i]) ++j;
            fn(windows[i], j - i);
            i = j;
        }
    }
}

void require_windows(const Genome& g, uint32_t k) {
    if (valid_positions(g, k) == 0) {
        throw std::runtime_error("genome '" + g.name() + "' has no valid window of length " +
                                 std::to_string(k) + ": spectrum is empty");
    }
}

void require_same_k(const KSpectrum& a, const KSpectrum& b) {
    if (a.k() != b.k()) {
        throw std::invalid_argument("spectra have different k: " + std::to_string(a.k()) +
                                    " vs " + std::to_string(b.k()));
    }
}

} // namespace

KSpectrum::KSpectrum(uint32_t k, std::vector<Entry> entries) : k_(k), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (size_t i = 0; i < entries_.size(); ++i) {
        const auto& [word, count] = entries_[i];
        if (word.size() != k_) {
            throw std::invalid_argument("spectrum entry has length " +
                                        std::to_string(word.size()) + ", expected k = " +
                                        std::to_string(k_));
        }
        if (count == 0) {
            throw std::invalid_argument("spectrum entry with zero multiplicity");
        }
        if (i > 0 && entries_[i - 1].first == word) {
            throw std::invalid_argument("duplicate k-mer in spectrum entries");
        }
        total_ += count;
    }
}

uint64_t KSpectrum::multiplicity(const KMer& kmer) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), kmer,
                               [](const Entry& e, const KMer& w) { return e.first < w; });
    if (it != entries_.end() && it->first == kmer) return it->second;
    return 0;
}

KSpectrum compute_spectrum(const Genome& g, uint32_t k) {
    require_windows(g, k);
    std::vector<KSpectrum::Entry> entries;
    if (packable(g, k)) {
        const auto windows = collect_packed_windows(g, k);
        for (size_t i = 0; i < windows.size();) {
            size_t j = i;
            while (j < windows.size() && windows[j] == windows[i]) ++j;
            entries.emplace_back(unpack(windows[i], k), j - i);
            i = j;
        }
    } else {
        const auto windows = collect_code_windows(g, k);
        for (size_t i = 0; i < windows.size();) {
            size_t j = i;
            while (j < windows.size() && windows[j] == windows[i]) ++j;
            entries.emplace_back(Word(windows[i]), j - i);
            i = j;
        }
    }
    return KSpectrum(k, std::move(entries));
}

uint64_t distinct_kmer_count(const Genome& g, uint32_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    uint64_t distinct = 0;
    if (valid_positions(g, k) == 0) return 0;
    for_each_count(g, k, [&](const auto&, uint64_t) { ++distinct; });
    return distinct;
}

std::vector<KMer> dictionary(const KSpectrum& spec) {
    std::vector<KMer> keys;
    keys.reserve(spec.size());
    for (const auto& [word, count] : spec) keys.push_back(word);
    return keys;
}

KSpectrum multiset_sum(const KSpectrum& a, const KSpectrum& b) {
    require_same_k(a, b);
    std::vector<KSpectrum::Entry> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.push_back(*ib++);
        } else {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    return KSpectrum(a.k(), std::move(out));
}

KSpectrum multiset_diff(const KSpectrum& a, const KSpectrum& b) {
    require_same_k(a, b);
    std::vector<KSpectrum::Entry> out;
    for (const auto& [word, count] : a) {
        const uint64_t sub = b.multiplicity(word);
        if (count > sub) out.emplace_back(word, count - sub);
    }
    return KSpectrum(a.k(), std::move(out));
}

std::vector<KMer> hapaxes(const KSpectrum& spec) {
    std::vector<KMer> out;
    for (const auto& [word, count] : spec) {
        if (count == 1) out.push_back(word);
    }
    return out;
}

std::vector<KMer> repeats(const KSpectrum& spec) {
    std::vector<KMer> out;
    for (const auto& [word, count] : spec) {
        if (count > 1) out.push_back(word);
    }
    return out;
}

double lexical_index(const KSpectrum& spec) {
    if (spec.empty()) throw std::runtime_error("lexical index of an empty dictionary");
    return static_cast<double>(spec.total()) / static_cast<double>(spec.size());
}

double lexical_index(const Genome& g, uint32_t k) {
    require_windows(g, k);
    return static_cast<double>(valid_positions(g, k)) /
           static_cast<double>(distinct_kmer_count(g, k));
}

namespace {

double entropy_from_counts(uint64_t total, double sum_m_log_m) {
    // -sum p log2 p  ==  log2 T - (1/T) sum m log2 m
    const double t = static_cast<double>(total);
    double e = std::log2(t) - sum_m_log_m / t;
    return e < 0 ? 0.0 : e;
}

} // namespace

double entropy(const KSpectrum& spec) {
    if (spec.empty()) throw std::runtime_error("entropy of an empty dictionary");
    double sum = 0;
    for (const auto& [word, count] : spec) {
        sum += static_cast<double>(count) * std::log2(static_cast<double>(count));
    }
    return entropy_from_counts(spec.total(), sum);
}

double entropy(const Genome& g, uint32_t k) {
    require_windows(g, k);
    double sum = 0;
    for_each_count(g, k, [&](const auto&, uint64_t count) {
        sum += static_cast<double>(count) * std::log2(static_cast<double>(count));
    });
    return entropy_from_counts(valid_positions(g, k), sum);
}

double logarithmic_length(const Genome& g) {
    return std::log2(static_cast<double>(g.length())) /
           std::log2(static_cast<double>(g.alphabet().size()));
}

Completeness completeness_indexes(const Genome& g) {
    const uint64_t s = static_cast<uint64_t>(g.alphabet().size());
    Completeness result{0, 1};
    for (uint32_t k = 1;; ++k) {
        const uint64_t windows = valid_positions(g, k);
        // s^k complete k-mers cannot fit in fewer than s^k windows
        uint64_t needed = 1;
        bool too_many = false;
        for (uint32_t i = 0; i < k; ++i) {
            if (needed > windows) { too_many = true; break; }
            needed *= s;
        }
        if (too_many || needed > windows) break;
        if (distinct_kmer_count(g, k) != needed) break;
        result.mcl = k;
    }
    result.mfl = result.mcl + 1;
    return result;
}

GenomeClass classify(const Genome& g, uint32_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    GenomeClass out;
    const uint64_t windows = valid_positions(g, k);
    if (windows == 0) return out;
    const uint64_t distinct = distinct_kmer_count(g, k);
    out.is_k_hapax = distinct == windows;
    uint64_t needed = 1;
    const uint64_t s = static_cast<uint64_t>(g.alphabet().size());
    for (uint32_t i = 0; i < k; ++i) {
        if (needed > windows) break;
        needed *= s;
    }
    out.is_k_complete = distinct == needed;
    return out;
}

} // namespace kspect
