#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cgap/bit_string.hpp"
#include "cgap/error.hpp"

namespace cgap {

// Little-endian byte sink that keeps separate tallies for payload bits (the
// data structure itself) and framing bits (magic, lengths, widths, padding).
class ByteWriter {
public:
    void frame_bytes(std::span<const std::uint8_t> raw) {
        buf_.insert(buf_.end(), raw.begin(), raw.end());
        framing_ += 8 * raw.size();
    }
    void frame_u8(std::uint8_t v) {
        buf_.push_back(v);
        framing_ += 8;
    }
    void frame_u64(std::uint64_t v) {
        put_u64(v);
        framing_ += 64;
    }
    void payload_u64(std::uint64_t v) {
        put_u64(v);
        payload_ += 64;
    }
    // Bit sequence as MSB-first bytes; the pad up to the byte boundary is framing.
    void payload_bits(const BitString& bits) {
        const auto raw = bits.to_bytes();
        buf_.insert(buf_.end(), raw.begin(), raw.end());
        payload_ += bits.size();
        framing_ += 8 * raw.size() - bits.size();
    }

    std::uint64_t payload_bit_count() const noexcept { return payload_; }
    std::uint64_t framing_bit_count() const noexcept { return framing_; }
    const std::vector<std::uint8_t>& bytes() const noexcept { return buf_; }
    std::vector<std::uint8_t> take() && { return std::move(buf_); }

private:
    void put_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }

    std::vector<std::uint8_t> buf_;
    std::uint64_t payload_ = 0;
    std::uint64_t framing_ = 0;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::span<const std::uint8_t> bytes(std::size_t n) {
        need(n);
        auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }
    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v |= std::uint64_t{data_[pos_ + i]} << (8 * i);
        }
        pos_ += 8;
        return v;
    }
    BitString bits(std::uint64_t nbits) {
        if (nbits > 8 * (data_.size() - pos_)) {
            throw format_error("truncated bit section");
        }
        return BitString::from_bytes(bytes(static_cast<std::size_t>((nbits + 7) / 8)), nbits);
    }

    bool at_end() const noexcept { return pos_ == data_.size(); }
    std::size_t position() const noexcept { return pos_; }

private:
    void need(std::size_t n) const {
        if (n > data_.size() - pos_) {
            throw format_error("unexpected end of data at byte " + std::to_string(pos_));
        }
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

} // namespace cgap
