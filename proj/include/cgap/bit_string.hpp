#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cgap {

// Append-only bit sequence, addressed from position 0.
//
// Bits are kept most-significant-first inside 64-bit words, so bit p lives at
// word p/64, bit 63 - p%64. This makes a left-aligned window read a shift and
// an OR, and leading-zero counts map directly onto unary prefixes. Bits past
// size() are always zero.
class BitString {
public:
    BitString() = default;

    // Parses a string of '0'/'1' characters; anything else is rejected.
    explicit BitString(std::string_view text);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    void push_back(bool bit);

    // Appends the low `width` bits of value, most significant first. width <= 64.
    void append(std::uint64_t value, unsigned width);
    void append(const BitString& other);

    bool operator[](std::size_t pos) const noexcept {
        return (words_[pos >> 6] >> (63 - (pos & 63))) & 1u;
    }

    // 64 bits starting at pos, left-aligned; positions past the end read as zero.
    std::uint64_t window(std::size_t pos) const noexcept;

    // `width` bits starting at pos as an integer. Throws incomplete_code when the
    // range runs past size().
    std::uint64_t read(std::size_t pos, unsigned width) const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    // Serialized form: ceil(size/8) bytes, MSB-first within each byte, zero padded.
    std::vector<std::uint8_t> to_bytes() const;
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);

    std::string to_string() const;

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

// Packs values into a fixed-width array. Every value must fit in `width` bits.
BitString pack_fixed(std::span<const std::uint64_t> values, unsigned width);
std::vector<std::uint64_t> unpack_fixed(const BitString& bits, unsigned width, std::size_t count);

// Minimal width able to hold every value in [0, max_value]; at least 1.
unsigned width_for(std::uint64_t max_value) noexcept;

} // namespace cgap
