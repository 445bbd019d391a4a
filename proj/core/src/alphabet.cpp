#include "kspect/alphabet.hpp"

#include <cctype>
#include <stdexcept>

#include "kspect/word.hpp"

namespace kspect {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.size() < 2 || symbols_.size() > max_symbols) {
        throw std::invalid_argument("alphabet must have between 2 and 16 symbols, got " +
                                    std::to_string(symbols_.size()));
    }
    to_code_.fill(-1);
    for (size_t i = 0; i < symbols_.size(); ++i) {
        const auto lower = static_cast<unsigned char>(std::tolower(static_cast<unsigned char>(symbols_[i])));
        const auto upper = static_cast<unsigned char>(std::toupper(static_cast<unsigned char>(symbols_[i])));
        if (to_code_[lower] != -1 || to_code_[upper] != -1) {
            throw std::invalid_argument(std::string("alphabet symbols must be distinct: '") +
                                        symbols_[i] + "'");
        }
        to_code_[lower] = static_cast<int8_t>(i);
        to_code_[upper] = static_cast<int8_t>(i);
    }
}

const Alphabet& Alphabet::dna() {
    static const Alphabet a("ACGT");
    return a;
}

Word Alphabet::encode(std::string_view text) const {
    std::string codes;
    codes.reserve(text.size());
    for (char c : text) {
        const int v = code(c);
        if (v < 0) {
            throw std::invalid_argument(std::string("character '") + c +
                                        "' is not in alphabet " + symbols_);
        }
        codes.push_back(static_cast<char>(v));
    }
    return Word(std::move(codes));
}

std::string Alphabet::decode(const Word& word) const {
    std::string out;
    out.reserve(word.size());
    for (size_t i = 0; i < word.size(); ++i) {
        const uint8_t c = word[i];
        if (c >= symbols_.size()) {
            throw std::invalid_argument("symbol code " + std::to_string(c) +
                                        " out of range for alphabet " + symbols_);
        }
        out.push_back(symbols_[c]);
    }
    return out;
}

} // namespace kspect
