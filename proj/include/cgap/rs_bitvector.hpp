#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cgap/bit_string.hpp"
#include "cgap/byte_io.hpp"

namespace cgap {

// Plain bitvector with rank/select support.
//
// Rank directory: per 512-bit superblock one absolute count and one word packing
// seven 9-bit counts relative to the superblock start (one per 64-bit word after
// the first), 128 bits per 512. Select keeps the position of every 64th one and
// binary-searches the superblocks between two samples.
class RsBitvector {
public:
    static constexpr std::size_t superblock_bits = 512;
    static constexpr std::uint64_t select_sample_rate = 64;

    RsBitvector() = default;
    explicit RsBitvector(BitString bits);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint64_t ones() const noexcept { return ones_; }
    bool operator[](std::size_t pos) const noexcept { return bits_[pos]; }
    const BitString& bits() const noexcept { return bits_; }

    // Number of ones in [0, p]. Throws range_error when p >= size().
    std::uint64_t rank1(std::size_t p) const;
    // Position of the j-th one, 0-based. Throws range_error when j >= ones().
    std::size_t select1(std::uint64_t j) const;

    std::uint64_t rank_directory_bits() const noexcept { return 64 * (absolute_.size() + relative_.size()); }
    std::uint64_t select_sample_bits() const noexcept { return 64 * samples_.size(); }
    // Bits + directory + samples, i.e. what write() stores as payload.
    std::uint64_t payload_bits() const noexcept {
        return bits_.size() + rank_directory_bits() + select_sample_bits();
    }

    void write(ByteWriter& out) const;
    // Reads and checks the stored directory against one rebuilt from the bits.
    static RsBitvector read(ByteReader& in);

    bool operator==(const RsBitvector& o) const { return bits_ == o.bits_; }

private:
    void build_directory();

    BitString bits_;
    std::uint64_t ones_ = 0;
    std::vector<std::uint64_t> absolute_;
    std::vector<std::uint64_t> relative_;
    std::vector<std::uint64_t> samples_;
};

} // namespace cgap
