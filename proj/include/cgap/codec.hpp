#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cgap/bit_string.hpp"
#include "cgap/gapcore.hpp"

namespace cgap {

struct Decoded {
    std::uint64_t value;
    unsigned length; // bits consumed
};

// Elias gamma: (L-1) zeros, then the L-bit binary form of x, where L = floor(log2 x) + 1.
unsigned gamma_length(std::uint64_t x) noexcept;
void gamma_append(BitString& out, std::uint64_t x);
BitString gamma_encode(std::uint64_t x);
// Reads one codeword starting at pos using two fixed 64-bit window reads.
Decoded gamma_decode(const BitString& bits, std::size_t pos);

// Elias delta: gamma(L) followed by the low L-1 bits of x.
unsigned delta_length(std::uint64_t x) noexcept;
void delta_append(BitString& out, std::uint64_t x);
BitString delta_encode(std::uint64_t x);
// Three window reads at most: unary scan, rest of the gamma prefix, payload.
Decoded delta_decode(const BitString& bits, std::size_t pos);

// Frequency-descending ranking of the distinct gap values.
//
// Rank 1 is the most frequent gap; ties go to the smaller value. symbol(r)
// is the codebook array D, rank_of(g) is ord.
class Codebook {
public:
    Codebook() = default;

    static Codebook build(std::span<const std::uint64_t> gaps);
    // Rebuilds a codebook from D in rank order (frequencies are not kept).
    static Codebook from_symbols(std::vector<std::uint64_t> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    std::uint64_t symbol(std::uint64_t rank) const;
    std::uint64_t rank_of(std::uint64_t gap) const;
    bool contains(std::uint64_t gap) const { return ord_.contains(gap); }

    std::span<const std::uint64_t> symbols() const noexcept { return symbols_; }
    // Occurrence counts aligned with symbols(); empty for a deserialized codebook.
    std::span<const std::uint64_t> frequencies() const noexcept { return freq_; }

    std::uint64_t max_symbol() const noexcept { return max_symbol_; }
    // floor(log2 g_max) + 1: the fixed width of one serialized entry.
    unsigned symbol_width() const noexcept;
    // d * symbol_width()
    std::uint64_t serialized_bits() const noexcept;

    bool operator==(const Codebook& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<std::uint64_t> symbols_;
    std::vector<std::uint64_t> freq_;
    std::unordered_map<std::uint64_t, std::uint64_t> ord_;
    std::uint64_t max_symbol_ = 0;
};

// C = delta(ord(g1)) ... delta(ord(gn)).
struct EncodedStream {
    BitString bits;
    std::uint64_t count = 0;

    std::size_t length() const noexcept { return bits.size(); }
    bool operator==(const EncodedStream&) const = default;
};

// Throws unknown_symbol when a gap is missing from the codebook.
EncodedStream encode_stream(std::span<const std::uint64_t> gaps, const Codebook& cb);
EncodedStream encode_stream(const GapStream& g, const Codebook& cb);

struct DecodedGap {
    std::uint64_t gap;
    std::size_t next; // start of the following codeword
};

// Decodes the codeword starting at bitpos. Throws range_error when bitpos is at
// or past the end of the stream.
DecodedGap decode_at(const EncodedStream& c, std::size_t bitpos, const Codebook& cb);

std::vector<std::uint64_t> decode_all(const EncodedStream& c, const Codebook& cb);

} // namespace cgap
