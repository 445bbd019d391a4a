#include "kspect/suffix_index.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace kspect {

namespace {

// ---------------------------------------------------------------------------
// Suffix array construction (induced sorting / SA-IS), linear time.
// Requirements: t[n-1] is a sentinel strictly smaller than every other value,
// all values lie in [0, sigma), n >= 1.
// ---------------------------------------------------------------------------

template <typename Char>
void sais(const Char* t, int32_t* sa, int32_t n, int32_t sigma) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<bool> is_s(n);
    is_s[n - 1] = true;
    for (int32_t i = n - 2; i >= 0; --i) {
        is_s[i] = t[i] < t[i + 1] || (t[i] == t[i + 1] && is_s[i + 1]);
    }
    auto is_lms = [&](int32_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

    std::vector<int32_t> counts(sigma, 0);
    for (int32_t i = 0; i < n; ++i) ++counts[t[i]];
    std::vector<int32_t> bkt(sigma);
    auto bucket_heads = [&] {
        int32_t sum = 0;
        for (int32_t c = 0; c < sigma; ++c) {
            bkt[c] = sum;
            sum += counts[c];
        }
    };
    auto bucket_tails = [&] {
        int32_t sum = 0;
        for (int32_t c = 0; c < sigma; ++c) {
            sum += counts[c];
            bkt[c] = sum;
        }
    };

    // Place LMS suffixes (via place_lms), then induce L-suffixes left to
    // right and S-suffixes right to left.
    auto induce = [&](auto&& place_lms) {
        std::fill(sa, sa + n, -1);
        bucket_tails();
        place_lms();
        bucket_heads();
        for (int32_t r = 0; r < n; ++r) {
            const int32_t j = sa[r] - 1;
            if (sa[r] > 0 && !is_s[j]) sa[bkt[t[j]]++] = j;
        }
        bucket_tails();
        for (int32_t r = n - 1; r >= 0; --r) {
            const int32_t j = sa[r] - 1;
            if (sa[r] > 0 && is_s[j]) sa[--bkt[t[j]]] = j;
        }
    };

    // First pass: approximate order, enough to rank LMS substrings.
    induce([&] {
        for (int32_t i = 1; i < n; ++i) {
            if (is_lms(i)) sa[--bkt[t[i]]] = i;
        }
    });

    std::vector<int32_t> lms; // LMS positions in text order
    for (int32_t i = 1; i < n; ++i) {
        if (is_lms(i)) lms.push_back(i);
    }
    const int32_t m = static_cast<int32_t>(lms.size());

    // Name LMS substrings by their rank in the approximate order. Adjacent
    // LMS positions differ by at least 2, so names fit in a half-size array.
    std::vector<int32_t> half_name(n / 2 + 1, -1);
    int32_t names = 0;
    int32_t prev = -1;
    for (int32_t r = 0; r < n; ++r) {
        const int32_t p = sa[r];
        if (p <= 0 || !is_lms(p)) continue;
        if (prev >= 0) {
            bool same = true;
            for (int32_t d = 0;; ++d) {
                if (t[prev + d] != t[p + d] || is_s[prev + d] != is_s[p + d]) {
                    same = false;
                    break;
                }
                if (d > 0 && (is_lms(prev + d) || is_lms(p + d))) {
                    same = is_lms(prev + d) && is_lms(p + d);
                    break;
                }
            }
            if (!same) ++names;
        }
        half_name[p >> 1] = names;
        prev = p;
    }
    ++names;

    std::vector<int32_t> sa1(m);
    if (names < m) {
        std::vector<int32_t> s1(m);
        for (int32_t i = 0; i < m; ++i) s1[i] = half_name[lms[i] >> 1];
        sais<int32_t>(s1.data(), sa1.data(), m, names);
    } else {
        for (int32_t i = 0; i < m; ++i) sa1[half_name[lms[i] >> 1]] = i;
    }

    // Final pass: LMS suffixes in exact order.
    induce([&] {
        for (int32_t i = m - 1; i >= 0; --i) {
            const int32_t p = lms[sa1[i]];
            sa[--bkt[t[p]]] = p;
        }
    });
}

// Adjacent-suffix LCP (Kasai). lcp[r] = common prefix of sa[r-1] and sa[r].
std::vector<int32_t> adjacent_lcp(const std::vector<uint8_t>& t, const std::vector<int32_t>& sa) {
    const int32_t n = static_cast<int32_t>(t.size());
    std::vector<int32_t> rank(n);
    for (int32_t r = 0; r < n; ++r) rank[sa[r]] = r;
    std::vector<int32_t> lcp(n, 0);
    int32_t h = 0;
    for (int32_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const int32_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && t[i + h] == t[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

uint64_t fnv1a(uint64_t hash, const void* data, size_t size) {
    const auto* bytes = static_cast<const uint8_t*>(data);
    for (size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x100000001b3ull;
    }
    return hash;
}

uint64_t genome_digest(const Genome& g) {
    uint64_t hash = 0xcbf29ce484222325ull;
    const std::string& symbols = g.alphabet().symbols();
    hash = fnv1a(hash, symbols.data(), symbols.size());
    const uint64_t length = g.length();
    hash = fnv1a(hash, &length, sizeof length);
    hash = fnv1a(hash, g.codes().data(), g.codes().size());
    for (const Interval& iv : g.mask()) {
        hash = fnv1a(hash, &iv.begin, sizeof iv.begin);
        hash = fnv1a(hash, &iv.end, sizeof iv.end);
    }
    return hash;
}

constexpr char kCacheMagic[8] = {'K', 'S', 'P', 'E', 'C', 'I', 'D', 'X'};
constexpr uint32_t kCacheVersion = 1;

template <typename T>
void write_pod(std::ostream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
void read_pod(std::istream& in, T& value) {
    in.read(reinterpret_cast<char*>(&value), sizeof value);
}

} // namespace

SuffixIndex::SuffixIndex(const Genome& g) : genome_(&g) {
    const auto& blocks = g.blocks();
    const uint64_t unmasked = g.unmasked_length();
    // Block text: symbol codes shifted by 2, a separator (1) between blocks,
    // and a unique terminator (0). Separators compare below all symbols, so
    // no suffix comparison treats two blocks as contiguous beyond what the
    // per-entry remaining() cap reports.
    const uint64_t text_size = unmasked + blocks.size(); // B-1 separators + terminator
    if (text_size + 1 > static_cast<uint64_t>(std::numeric_limits<int32_t>::max())) {
        throw std::runtime_error("genome too long for the suffix index (2^31 symbol limit)");
    }
    const int32_t n = static_cast<int32_t>(std::max<uint64_t>(text_size, 1));

    std::vector<uint8_t> text(n, 0);
    std::vector<int32_t> text_to_genome(n, -1);
    std::vector<int32_t> block_text_end(n, 0);
    {
        int32_t w = 0;
        const auto& codes = g.codes();
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (b > 0) text[w++] = 1;
            const Interval& block = blocks[b];
            const int32_t end = w + static_cast<int32_t>(block.length());
            for (uint64_t p = block.begin; p < block.end; ++p, ++w) {
                text[w] = static_cast<uint8_t>(codes[p] + 2);
                text_to_genome[w] = static_cast<int32_t>(p);
                block_text_end[w] = end;
            }
        }
        text[w++] = 0;
    }

    std::vector<int32_t> sa_full(n);
    sais<uint8_t>(text.data(), sa_full.data(), n, g.alphabet().size() + 2);
    const std::vector<int32_t> lcp_full = adjacent_lcp(text, sa_full);

    // Keep genome positions only; carry the minimum LCP across dropped
    // separator entries so lcp_[r] stays the true common prefix between
    // consecutive kept suffixes.
    sa_.reserve(unmasked);
    lcp_.reserve(unmasked);
    rem_.reserve(unmasked);
    int32_t pending = std::numeric_limits<int32_t>::max();
    for (int32_t r = 0; r < n; ++r) {
        if (r > 0) pending = std::min(pending, lcp_full[r]);
        const int32_t tpos = sa_full[r];
        if (text_to_genome[tpos] < 0) continue;
        sa_.push_back(static_cast<uint32_t>(text_to_genome[tpos]));
        rem_.push_back(block_text_end[tpos] - tpos);
        lcp_.push_back(sa_.size() == 1 ? 0 : pending);
        pending = std::numeric_limits<int32_t>::max();
    }

    scan_extremes();
}

// mrl, mhl and hapax existence in two linear sweeps.
//
// For entry u let reach(u) = max over v != u of min(lcp path between u and v,
// remaining(v)): the longest prefix of suffix u that also occurs, wholly
// inside a block, somewhere else. Folding from each side,
//   right[u] = min(lcp[u+1], max(remaining(u+1), right[u+1]))
//   left[u]  = min(lcp[u],   max(remaining(u-1), left[u-1]))
// because min(c, .) distributes over max. Then, with reach = max(left, right):
//   a repeat of length h starts at u  iff  h <= min(remaining(u), reach(u)),
//   the shortest unique word at u has length 1 + reach(u), existing iff
//   1 + reach(u) <= remaining(u).
void SuffixIndex::scan_extremes() {
    const size_t t_count = sa_.size();
    mrl_ = 0;
    mhl_ = 0;
    has_hapax_ = false;
    if (t_count == 0) return;

    std::vector<int32_t> right(t_count);
    right[t_count - 1] = 0;
    for (size_t u = t_count - 1; u-- > 0;) {
        right[u] = std::min(lcp_[u + 1], std::max(rem_[u + 1], right[u + 1]));
    }
    int32_t left = 0;
    uint64_t best_hapax = std::numeric_limits<uint64_t>::max();
    for (size_t u = 0; u < t_count; ++u) {
        if (u > 0) left = std::min(lcp_[u], std::max(rem_[u - 1], left));
        const int32_t reach = std::max(left, right[u]);
        mrl_ = std::max<uint64_t>(mrl_, std::min(rem_[u], reach));
        const uint64_t unique_len = static_cast<uint64_t>(reach) + 1;
        if (unique_len <= static_cast<uint64_t>(rem_[u])) {
            best_hapax = std::min(best_hapax, unique_len);
        }
    }
    if (best_hapax != std::numeric_limits<uint64_t>::max()) {
        has_hapax_ = true;
        mhl_ = best_hapax;
    }
}

uint64_t SuffixIndex::min_hapax_length() const {
    if (!has_hapax_) {
        throw std::runtime_error("genome '" + genome_->name() +
                                 "' has no unique word: every word repeats");
    }
    return mhl_;
}

uint64_t SuffixIndex::distinct_kmers(uint32_t k) const {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    const int32_t ik = static_cast<int32_t>(std::min<uint32_t>(
        k, static_cast<uint32_t>(std::numeric_limits<int32_t>::max())));
    uint64_t count = 0;
    bool have_prev = false;
    int32_t run = std::numeric_limits<int32_t>::max();
    for (size_t r = 0; r < sa_.size(); ++r) {
        if (r > 0) run = std::min(run, lcp_[r]);
        if (rem_[r] < ik) continue;
        if (!have_prev || run < ik) ++count;
        have_prev = true;
        run = std::numeric_limits<int32_t>::max();
    }
    return count;
}

void SuffixIndex::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write index cache: " + path.string());
    out.write(kCacheMagic, sizeof kCacheMagic);
    write_pod(out, kCacheVersion);
    write_pod(out, genome_digest(*genome_));
    const uint64_t entries = sa_.size();
    write_pod(out, entries);
    write_pod(out, mrl_);
    write_pod(out, mhl_);
    write_pod(out, static_cast<uint8_t>(has_hapax_ ? 1 : 0));
    out.write(reinterpret_cast<const char*>(sa_.data()), entries * sizeof(uint32_t));
    out.write(reinterpret_cast<const char*>(lcp_.data()), entries * sizeof(int32_t));
    out.write(reinterpret_cast<const char*>(rem_.data()), entries * sizeof(int32_t));
    if (!out) throw std::runtime_error("failed writing index cache: " + path.string());
}

SuffixIndex SuffixIndex::load(const std::filesystem::path& path, const Genome& g) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open index cache: " + path.string());
    char magic[sizeof kCacheMagic];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kCacheMagic, sizeof magic) != 0) {
        throw std::runtime_error("not an index cache file: " + path.string());
    }
    uint32_t version = 0;
    read_pod(in, version);
    if (version != kCacheVersion) {
        throw std::runtime_error("unsupported index cache version in " + path.string());
    }
    uint64_t digest = 0;
    read_pod(in, digest);
    if (digest != genome_digest(g)) {
        throw std::runtime_error("index cache " + path.string() +
                                 " was built from a different genome");
    }
    uint64_t entries = 0;
    read_pod(in, entries);
    if (entries != g.unmasked_length()) {
        throw std::runtime_error("index cache " + path.string() + " has a bad entry count");
    }
    SuffixIndex index;
    index.genome_ = &g;
    read_pod(in, index.mrl_);
    read_pod(in, index.mhl_);
    uint8_t hapax_flag = 0;
    read_pod(in, hapax_flag);
    index.has_hapax_ = hapax_flag != 0;
    index.sa_.resize(entries);
    index.lcp_.resize(entries);
    index.rem_.resize(entries);
    in.read(reinterpret_cast<char*>(index.sa_.data()), entries * sizeof(uint32_t));
    in.read(reinterpret_cast<char*>(index.lcp_.data()), entries * sizeof(int32_t));
    in.read(reinterpret_cast<char*>(index.rem_.data()), entries * sizeof(int32_t));
    if (!in) throw std::runtime_error("index cache " + path.string() + " is truncated");
    return index;
}

SuffixIndex SuffixIndex::load_or_build(const std::filesystem::path& path, const Genome& g) {
    if (std::filesystem::exists(path)) {
        try {
            return load(path, g);
        } catch (const std::exception&) {
            // stale or foreign cache: rebuild below
        }
    }
    SuffixIndex index(g);
    index.save(path);
    return index;
}

GenomeIndexes compute_indexes(const SuffixIndex& index) {
    const Genome& g = index.genome();
    GenomeIndexes out;
    out.mrl = index.max_repeat_length();
    out.mhl = index.min_hapax_length();
    out.lg = logarithmic_length(g);
    const uint64_t s = static_cast<uint64_t>(g.alphabet().size());
    for (uint32_t k = 1;; ++k) {
        const uint64_t windows = valid_positions(g, k);
        uint64_t needed = 1;
        bool too_many = false;
        for (uint32_t i = 0; i < k; ++i) {
            if (needed > windows) {
                too_many = true;
                break;
            }
            needed *= s;
        }
        if (too_many || needed > windows) break;
        if (index.distinct_kmers(k) != needed) break;
        out.mcl = k;
    }
    out.mfl = out.mcl + 1;
    return out;
}

GenomeIndexes compute_indexes(const Genome& g) {
    return compute_indexes(SuffixIndex(g));
}

namespace {

// Calls fn(count) once per distinct word of length k, walking the suffix
// entries once.
template <typename Fn>
void walk_counts(const SuffixIndex& index, uint32_t k, Fn&& fn) {
    const int32_t ik = static_cast<int32_t>(std::min<uint32_t>(
        k, static_cast<uint32_t>(std::numeric_limits<int32_t>::max())));
    int32_t run = std::numeric_limits<int32_t>::max();
    uint64_t group = 0;
    for (size_t r = 0; r < index.entry_count(); ++r) {
        if (r > 0) run = std::min(run, index.lcp(r));
        if (index.remaining(r) < ik) continue;
        if (group > 0 && run < ik) {
            fn(group);
            group = 0;
        }
        ++group;
        run = std::numeric_limits<int32_t>::max();
    }
    if (group > 0) fn(group);
}

void require_windows_for_index(const SuffixIndex& index, uint32_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (valid_positions(index.genome(), k) == 0) {
        throw std::runtime_error("genome '" + index.genome().name() +
                                 "' has no valid window of length " + std::to_string(k));
    }
}

} // namespace

double lexical_index(const SuffixIndex& index, uint32_t k) {
    require_windows_for_index(index, k);
    return static_cast<double>(valid_positions(index.genome(), k)) /
           static_cast<double>(index.distinct_kmers(k));
}

double entropy(const SuffixIndex& index, uint32_t k) {
    require_windows_for_index(index, k);
    double sum = 0;
    uint64_t total = 0;
    walk_counts(index, k, [&](uint64_t count) {
        total += count;
        sum += static_cast<double>(count) * std::log2(static_cast<double>(count));
    });
    const double t = static_cast<double>(total);
    const double e = std::log2(t) - sum / t;
    return e < 0 ? 0.0 : e;
}

} // namespace kspect
