#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgap/bit_string.hpp"

namespace cgap {

// Canonical Huffman code over the distinct gap values.
//
// Codewords are assigned in (length, value) order. A single-symbol alphabet
// gets a 1-bit code so every gap still costs one bit.
class HuffmanBook {
public:
    static HuffmanBook build(std::span<const std::uint64_t> gaps);

    std::size_t size() const noexcept { return symbols_.size(); }
    // Symbols in canonical order with their code lengths and codewords.
    std::span<const std::uint64_t> symbols() const noexcept { return symbols_; }
    std::span<const unsigned> lengths() const noexcept { return lengths_; }
    std::span<const std::uint64_t> codes() const noexcept { return codes_; }

    unsigned length_of(std::uint64_t gap) const;
    // (code, length) for one gap; throws unknown_symbol.
    std::pair<std::uint64_t, unsigned> codeword(std::uint64_t gap) const;
    unsigned max_length() const noexcept { return lengths_.empty() ? 0 : lengths_.back(); }

    // Stream size if every gap is coded with this book.
    std::uint64_t encoded_bits(std::span<const std::uint64_t> gaps) const;

    // Canonical book layout: 8-bit max length, 8-bit symbol width, one count per
    // length in width_for(d) bits, then the symbols in canonical order.
    std::uint64_t serialized_bits() const noexcept;

    // Decodes one codeword at pos; returns the symbol and advances pos.
    std::uint64_t decode_one(const BitString& bits, std::size_t& pos) const;

private:
    std::vector<std::uint64_t> symbols_;
    std::vector<unsigned> lengths_;
    std::vector<std::uint64_t> codes_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    // Per length L: first canonical code, how many codes, index of the first symbol.
    std::vector<std::uint64_t> first_code_;
    std::vector<std::uint64_t> count_;
    std::vector<std::size_t> first_index_;
};

BitString huffman_encode(std::span<const std::uint64_t> gaps, const HuffmanBook& book);
// Throws incomplete_code when the bits run out before n symbols are decoded.
std::vector<std::uint64_t> huffman_decode(const BitString& bits, const HuffmanBook& book, std::size_t n);

} // namespace cgap
