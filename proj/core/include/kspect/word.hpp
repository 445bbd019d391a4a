#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kspect {

/// A sequence of alphabet symbol codes: k-mers, segment words, reconstructed
/// genomes. Comparisons are lexicographic over codes, i.e. in alphabet order,
/// which may differ from the ASCII order of the display characters.
class Word {
public:
    Word() = default;
    explicit Word(std::string codes) : codes_(std::move(codes)) {}

    size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }
    uint8_t operator[](size_t i) const { return static_cast<uint8_t>(codes_[i]); }
    uint8_t front() const { return (*this)[0]; }
    uint8_t back() const { return (*this)[codes_.size() - 1]; }

    std::string_view codes() const { return codes_; }

    Word prefix(size_t n) const { return Word(codes_.substr(0, n)); }
    Word suffix(size_t n) const { return Word(codes_.substr(codes_.size() - n)); }
    Word substr(size_t pos, size_t n) const { return Word(codes_.substr(pos, n)); }

    Word reversed() const { return Word(std::string(codes_.rbegin(), codes_.rend())); }

    void push_back(uint8_t code) { codes_.push_back(static_cast<char>(code)); }
    void pop_back() { codes_.pop_back(); }
    void push_front(uint8_t code) { codes_.insert(codes_.begin(), static_cast<char>(code)); }

    auto operator<=>(const Word& other) const = default;

private:
    std::string codes_;
};

/// A Word whose length is the k governing the surrounding spectrum.
using KMer = Word;

} // namespace kspect
