#include "kspect/genome.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kspect {

namespace {

// Sort and coalesce overlapping or adjacent intervals.
std::vector<Interval> normalize_mask(std::vector<Interval> mask, uint64_t length) {
    std::sort(mask.begin(), mask.end(),
              [](const Interval& a, const Interval& b) { return a.begin < b.begin; });
    std::vector<Interval> out;
    for (const Interval& iv : mask) {
        if (iv.begin >= iv.end) continue;
        if (iv.end > length) {
            throw std::invalid_argument("mask interval [" + std::to_string(iv.begin + 1) + ", " +
                                        std::to_string(iv.end) + "] exceeds genome length " +
                                        std::to_string(length));
        }
        if (!out.empty() && iv.begin <= out.back().end) {
            out.back().end = std::max(out.back().end, iv.end);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

std::vector<Interval> complement(const std::vector<Interval>& mask, uint64_t length) {
    std::vector<Interval> blocks;
    uint64_t cursor = 0;
    for (const Interval& iv : mask) {
        if (iv.begin > cursor) blocks.push_back({cursor, iv.begin});
        cursor = iv.end;
    }
    if (cursor < length) blocks.push_back({cursor, length});
    return blocks;
}

} // namespace

Genome::Genome(std::string name, Alphabet alphabet, std::vector<uint8_t> codes,
               std::vector<Interval> mask)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), codes_(std::move(codes)) {
    if (codes_.empty()) {
        throw std::invalid_argument("genome '" + name_ + "' is empty");
    }
    mask_ = normalize_mask(std::move(mask), codes_.size());
    blocks_ = complement(mask_, codes_.size());
    for (const Interval& iv : mask_) {
        masked_count_ += iv.length();
        for (uint64_t p = iv.begin; p < iv.end; ++p) codes_[p] = 0;
    }
    const auto limit = static_cast<uint8_t>(alphabet_.size());
    for (const Interval& block : blocks_) {
        for (uint64_t p = block.begin; p < block.end; ++p) {
            if (codes_[p] >= limit) {
                throw std::invalid_argument("genome '" + name_ + "' has code " +
                                            std::to_string(codes_[p]) + " at position " +
                                            std::to_string(p + 1) + ", alphabet size is " +
                                            std::to_string(alphabet_.size()));
            }
        }
    }
}

Genome Genome::from_text(std::string name, std::string_view text, const Alphabet& alphabet) {
    std::vector<uint8_t> codes(text.size(), 0);
    std::vector<Interval> mask;
    for (size_t i = 0; i < text.size(); ++i) {
        const int c = alphabet.code(text[i]);
        if (c < 0) {
            if (!mask.empty() && mask.back().end == i) {
                mask.back().end = i + 1;
            } else {
                mask.push_back({i, i + 1});
            }
        } else {
            codes[i] = static_cast<uint8_t>(c);
        }
    }
    return Genome(std::move(name), alphabet, std::move(codes), std::move(mask));
}

bool Genome::is_masked(uint64_t pos) const {
    auto it = std::upper_bound(mask_.begin(), mask_.end(), pos,
                               [](uint64_t p, const Interval& iv) { return p < iv.begin; });
    return it != mask_.begin() && pos < std::prev(it)->end;
}

std::string Genome::to_text() const {
    std::string out(codes_.size(), 'N');
    for (const Interval& block : blocks_) {
        for (uint64_t p = block.begin; p < block.end; ++p) {
            out[p] = alphabet_.symbol(codes_[p]);
        }
    }
    return out;
}

Genome reverse(const Genome& g) {
    std::vector<uint8_t> codes(g.codes().rbegin(), g.codes().rend());
    const uint64_t n = g.length();
    std::vector<Interval> mask;
    mask.reserve(g.mask().size());
    for (auto it = g.mask().rbegin(); it != g.mask().rend(); ++it) {
        mask.push_back({n - it->end, n - it->begin});
    }
    return Genome(g.name(), g.alphabet(), std::move(codes), std::move(mask));
}

uint64_t valid_positions(const Genome& g, uint64_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    uint64_t count = 0;
    for (const Interval& block : g.blocks()) {
        if (block.length() >= k) count += block.length() - k + 1;
    }
    return count;
}

} // namespace kspect
