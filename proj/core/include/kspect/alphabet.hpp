#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace kspect {

class Word;

/// Ordered symbol set, 2 to 16 symbols. The symbol order fixes every
/// lexicographic comparison downstream, so an Alphabet never changes after
/// construction. Character matching is case-insensitive.
class Alphabet {
public:
    static constexpr int max_symbols = 16;

    explicit Alphabet(std::string_view symbols);

    /// The canonical (A, C, G, T) instance.
    static const Alphabet& dna();

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(uint8_t code) const { return symbols_[code]; }
    const std::string& symbols() const { return symbols_; }

    /// Code of a character, or -1 if the character is not in the alphabet.
    int code(char c) const { return to_code_[static_cast<unsigned char>(c)]; }
    bool contains(char c) const { return code(c) >= 0; }

    /// Encodes text to symbol codes; throws std::invalid_argument on any
    /// character outside the alphabet.
    Word encode(std::string_view text) const;
    std::string decode(const Word& word) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<int8_t, 256> to_code_{};
};

} // namespace kspect
