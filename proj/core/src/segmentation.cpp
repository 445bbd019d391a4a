#include "kspect/segmentation.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace kspect {

Word k_concat(const Word& a, const KMer& b, uint32_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (a.size() < k) {
        throw std::invalid_argument("k-concatenation: left word shorter than k");
    }
    if (b.size() != k) {
        throw std::invalid_argument("k-concatenation: right word must have length k");
    }
    if (a.suffix(k - 1) != b.prefix(k - 1)) {
        throw std::invalid_argument(
            "k-concatenation: (k-1)-suffix of the left word differs from the "
            "(k-1)-prefix of the right word");
    }
    Word out = a;
    out.push_back(b.back());
    return out;
}

std::vector<KMer> successors(const KMer& alpha, const std::vector<KMer>& dict) {
    if (alpha.empty()) throw std::invalid_argument("empty k-mer");
    const Word key = alpha.suffix(alpha.size() - 1);
    std::vector<KMer> out;
    // dict is sorted, so all words sharing the (k-1)-prefix are contiguous.
    auto it = std::lower_bound(dict.begin(), dict.end(), key,
                               [](const KMer& w, const Word& p) { return w.prefix(p.size()) < p; });
    for (; it != dict.end() && it->prefix(key.size()) == key; ++it) {
        out.push_back(*it);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Genome segmentation
// ---------------------------------------------------------------------------

namespace {

// Shared engine behind segment_genome / segment_genome_row / the stream
// variant. Three linear passes over the suffix entries and blocks:
//
//  1. SA order, (k-1)-mer groups: a group collects every occurrence of one
//     (k-1)-mer; the number of distinct length-k extensions inside the group
//     is the size of that word's successor set in D_k. Flag every occurrence
//     position when that number is exactly 1. |D_k| falls out as the sum of
//     extension counts (every k-mer extends exactly one (k-1)-mer).
//  2. SA order, k-mer groups: the k-mer at position p is univocally elongated
//     iff its (k-1)-suffix -- the word at p+1 -- is flagged; count one per
//     distinct k-mer.
//  3. Genome order per block: positions of univocally elongated k-mers form
//     runs; each maximal run becomes a segment.
template <typename Fn>
SegmentationRow scan_genome(const SuffixIndex& index, uint32_t k, Fn&& emit) {
    const Genome& g = index.genome();
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (valid_positions(g, k) == 0) {
        throw std::runtime_error("genome '" + g.name() + "' has no valid window of length " +
                                 std::to_string(k));
    }
    const size_t t_count = index.entry_count();
    const int32_t ik = static_cast<int32_t>(std::min<uint32_t>(
        k, static_cast<uint32_t>(std::numeric_limits<int32_t>::max())));

    SegmentationRow row;
    row.k = k;

    std::vector<bool> univ;
    bool k1_univocal = false;
    if (k == 1) {
        // Zero-length overlap: every 1-mer's successor set is D_1 itself.
        row.dict_size = index.distinct_kmers(1);
        k1_univocal = row.dict_size == 1;
        row.univocal_size = k1_univocal ? row.dict_size : 0;
    } else {
        univ.assign(g.length(), false);
        const int32_t km1 = ik - 1;
        std::vector<uint32_t> members;
        uint64_t dict = 0;
        uint32_t ext_count = 0;
        int32_t run_grp = std::numeric_limits<int32_t>::max();
        int32_t run_ext = std::numeric_limits<int32_t>::max();
        bool in_group = false;
        auto close_group = [&] {
            if (!in_group) return;
            if (ext_count == 1) {
                for (uint32_t p : members) univ[p] = true;
            }
            members.clear();
            dict += ext_count;
            ext_count = 0;
        };
        for (size_t r = 0; r < t_count; ++r) {
            if (r > 0) {
                run_grp = std::min(run_grp, index.lcp(r));
                run_ext = std::min(run_ext, index.lcp(r));
            }
            const int32_t rem = index.remaining(r);
            if (rem < km1) continue;
            if (!in_group || run_grp < km1) close_group();
            in_group = true;
            members.push_back(index.position(r));
            if (rem >= ik) {
                if (ext_count == 0 || run_ext < ik) ++ext_count;
                run_ext = std::numeric_limits<int32_t>::max();
            }
            run_grp = std::numeric_limits<int32_t>::max();
        }
        close_group();
        row.dict_size = dict;

        // Pass 2: univocally elongated k-mers, one test per distinct k-mer.
        int32_t run = std::numeric_limits<int32_t>::max();
        bool have_prev = false;
        for (size_t r = 0; r < t_count; ++r) {
            if (r > 0) run = std::min(run, index.lcp(r));
            if (index.remaining(r) < ik) continue;
            if ((!have_prev || run < ik) && univ[index.position(r) + 1]) {
                ++row.univocal_size;
            }
            have_prev = true;
            run = std::numeric_limits<int32_t>::max();
        }
    }
    row.ratio = row.dict_size == 0
                    ? 0.0
                    : static_cast<double>(row.univocal_size) / static_cast<double>(row.dict_size);

    // Pass 3: maximal runs per block.
    uint64_t covered = 0;
    uint64_t len_sum = 0;
    for (const Interval& block : g.blocks()) {
        if (block.length() < k) continue;
        uint64_t cover_end = block.begin;
        uint64_t i = block.begin;
        auto flagged = [&](uint64_t pos) { return k == 1 ? k1_univocal : bool(univ[pos + 1]); };
        while (i + k <= block.end) {
            if (!flagged(i)) {
                ++i;
                continue;
            }
            uint64_t j = i;
            while (j + 1 + k <= block.end && flagged(j + 1)) ++j;
            const uint64_t word_end = std::min(j + k + 1, block.end);
            ++row.maximals;
            len_sum += word_end - i;
            row.max_len = std::max(row.max_len, word_end - i);
            const uint64_t reach = j + k; // k-mer positions of the run cover [i, j+k)
            const uint64_t from = std::max(i, cover_end);
            if (reach > from) covered += reach - from;
            cover_end = std::max(cover_end, reach);
            emit(Interval{i, word_end}, Interval{i, j + 1});
            i = j + 1;
        }
    }
    row.coverage = g.unmasked_length() == 0
                       ? 0.0
                       : static_cast<double>(covered) / static_cast<double>(g.unmasked_length());
    row.avg_len = row.maximals == 0 ? 0.0
                                    : static_cast<double>(len_sum) / static_cast<double>(row.maximals);
    return row;
}

} // namespace

SegmentationRow segment_genome_row(const SuffixIndex& index, uint32_t k) {
    return scan_genome(index, k, [](Interval, Interval) {});
}

SegmentationRow segment_genome_stream(const SuffixIndex& index, uint32_t k,
                                      const SegmentSink& emit) {
    return scan_genome(index, k, [&](Interval word, Interval run) { emit(word, run); });
}

std::pair<Segmentation, SegmentationRow> segment_genome(const SuffixIndex& index, uint32_t k) {
    const Genome& g = index.genome();
    Segmentation seg;
    seg.k = k;
    SegmentationRow row = scan_genome(index, k, [&](Interval word, Interval) {
        const auto* codes = g.codes().data();
        seg.segments.push_back(SpectralSegment{
            Word(std::string(reinterpret_cast<const char*>(codes) + word.begin, word.length())),
            1, word});
        seg.consumed += word.length() - k + 1;
    });
    return {std::move(seg), row};
}

// ---------------------------------------------------------------------------
// Spectrum segmentation
// ---------------------------------------------------------------------------

namespace {

// Working view of the spectrum being consumed. Right candidates of a word are
// the entries whose (k-1)-prefix equals the word's (k-1)-suffix: contiguous
// in the lexicographic entry order. Left candidates are the entries whose
// (k-1)-suffix equals the word's (k-1)-prefix: contiguous in the rotated
// order (sorted by codes[1..k-1] then codes[0]).
struct SpectrumPool {
    uint32_t k;
    const std::vector<KSpectrum::Entry>& entries;
    std::vector<uint64_t> remaining;
    std::vector<uint32_t> rotated; // entry indices sorted by rotated key

    explicit SpectrumPool(const KSpectrum& spec)
        : k(spec.k()), entries(spec.entries()), remaining(), rotated() {
        remaining.reserve(entries.size());
        for (const auto& [word, count] : entries) remaining.push_back(count);
        rotated.resize(entries.size());
        for (uint32_t i = 0; i < rotated.size(); ++i) rotated[i] = i;
        std::sort(rotated.begin(), rotated.end(), [&](uint32_t a, uint32_t b) {
            const std::string_view wa = entries[a].first.codes();
            const std::string_view wb = entries[b].first.codes();
            const int c = wa.substr(1).compare(wb.substr(1));
            if (c != 0) return c < 0;
            return wa[0] < wb[0];
        });
    }

    // Entry index of the unique right extension of `w`, if any.
    std::optional<size_t> unique_right(const Word& w) const {
        const std::string_view key = w.codes().substr(w.size() - (k - 1));
        auto it = std::lower_bound(
            entries.begin(), entries.end(), key,
            [&](const KSpectrum::Entry& e, std::string_view p) {
                return e.first.codes().substr(0, p.size()) < p;
            });
        std::optional<size_t> found;
        for (; it != entries.end() && it->first.codes().substr(0, key.size()) == key; ++it) {
            const size_t i = static_cast<size_t>(it - entries.begin());
            if (remaining[i] == 0) continue;
            if (found) return std::nullopt; // several distinct candidates
            found = i;
        }
        return found;
    }

    // Entry index of the unique left extension of `w`, if any.
    std::optional<size_t> unique_left(const Word& w) const {
        const std::string_view key = w.codes().substr(0, k - 1);
        auto it = std::lower_bound(
            rotated.begin(), rotated.end(), key, [&](uint32_t i, std::string_view p) {
                return entries[i].first.codes().substr(1) < p;
            });
        std::optional<size_t> found;
        for (; it != rotated.end() && entries[*it].first.codes().substr(1) == key; ++it) {
            if (remaining[*it] == 0) continue;
            if (found) return std::nullopt;
            found = *it;
        }
        return found;
    }
};

} // namespace

Segmentation segment_spectrum(const KSpectrum& spec, const StartPolicy& policy) {
    if (spec.empty()) throw std::invalid_argument("cannot segment an empty spectrum");
    SpectrumPool pool(spec);
    const auto& entries = pool.entries;

    Segmentation out;
    out.k = spec.k();
    uint64_t left_total = spec.total();
    size_t start_scan = 0; // monotone: exhausted prefixes stay exhausted
    std::vector<Word> words;

    while (left_total > 0) {
        size_t s;
        if (policy) {
            s = policy(entries, pool.remaining);
            if (s >= entries.size() || pool.remaining[s] == 0) {
                throw std::invalid_argument(
                    "start policy returned an entry with no remaining multiplicity");
            }
        } else {
            while (pool.remaining[start_scan] == 0) ++start_scan;
            s = start_scan;
        }
        Word w = entries[s].first;
        --pool.remaining[s];
        --left_total;

        // Alternating sweeps: grow right while univocal, then left, until a
        // full round is blocked on both ends.
        bool grew = true;
        while (grew) {
            grew = false;
            while (auto i = pool.unique_right(w)) {
                w.push_back(entries[*i].first.back());
                --pool.remaining[*i];
                --left_total;
                grew = true;
            }
            while (auto i = pool.unique_left(w)) {
                w.push_front(entries[*i].first.front());
                --pool.remaining[*i];
                --left_total;
                grew = true;
            }
        }
        words.push_back(std::move(w));
    }

    std::sort(words.begin(), words.end());
    for (size_t i = 0; i < words.size();) {
        size_t j = i;
        while (j < words.size() && words[j] == words[i]) ++j;
        out.segments.push_back(SpectralSegment{words[i], j - i, std::nullopt});
        i = j;
    }
    out.consumed = spec.total();
    return out;
}

bool is_spectral_segment(const Word& word, const KSpectrum& spec) {
    const uint32_t k = spec.k();
    if (word.size() < k) return false;
    std::vector<std::pair<KMer, uint64_t>> used;
    for (size_t i = 0; i + k <= word.size(); ++i) {
        const KMer window = word.substr(i, k);
        auto it = std::lower_bound(used.begin(), used.end(), window,
                                   [](const auto& e, const KMer& w) { return e.first < w; });
        if (it != used.end() && it->first == window) {
            ++it->second;
        } else {
            used.insert(it, {window, 1});
        }
    }
    for (const auto& [window, count] : used) {
        if (spec.multiplicity(window) < count) return false;
    }
    return true;
}

std::vector<SweepEntry> sweep(const SuffixIndex& index, uint32_t k_min, uint32_t k_max,
                              unsigned threads) {
    if (k_min == 0) throw std::invalid_argument("k_min must be at least 1");
    if (k_min > k_max) throw std::invalid_argument("empty k range: k_min > k_max");
    const size_t count = static_cast<size_t>(k_max) - k_min + 1;
    std::vector<SweepEntry> entries(count);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            const uint32_t k = k_min + static_cast<uint32_t>(i);
            entries[i].k = k;
            try {
                entries[i].row = segment_genome_row(index, k);
            } catch (const std::exception& e) {
                entries[i].error = e.what();
            }
        }
    };
    const unsigned n_workers =
        std::max(1u, std::min<unsigned>(threads == 0 ? 1 : threads,
                                        static_cast<unsigned>(count)));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return entries;
}

} // namespace kspect
