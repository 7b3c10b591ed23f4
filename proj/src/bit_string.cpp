#include "cgap/bit_string.hpp"

#include <bit>

#include "cgap/error.hpp"

namespace cgap {

BitString::BitString(std::string_view text) {
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw domain_error("bit string may only contain '0' and '1'");
        }
        push_back(c == '1');
    }
}

void BitString::push_back(bool bit) {
    if ((size_ & 63) == 0) {
        words_.push_back(0);
    }
    if (bit) {
        words_.back() |= std::uint64_t{1} << (63 - (size_ & 63));
    }
    ++size_;
}

void BitString::append(std::uint64_t value, unsigned width) {
    if (width == 0) {
        return;
    }
    if (width < 64) {
        value &= (std::uint64_t{1} << width) - 1;
    }
    const unsigned used = size_ & 63;
    if (used == 0) {
        words_.push_back(value << (64 - width));
    } else {
        const unsigned free = 64 - used;
        if (width <= free) {
            words_.back() |= value << (free - width);
        } else {
            const unsigned spill = width - free;
            words_.back() |= value >> spill;
            words_.push_back(value << (64 - spill));
        }
    }
    size_ += width;
}

void BitString::append(const BitString& other) {
    std::size_t remaining = other.size_;
    for (std::uint64_t w : other.words_) {
        const unsigned take = remaining >= 64 ? 64 : static_cast<unsigned>(remaining);
        append(take == 64 ? w : w >> (64 - take), take);
        remaining -= take;
    }
}

std::uint64_t BitString::window(std::size_t pos) const noexcept {
    const std::size_t w = pos >> 6;
    if (w >= words_.size()) {
        return 0;
    }
    const unsigned off = pos & 63;
    std::uint64_t out = words_[w] << off;
    if (off != 0 && w + 1 < words_.size()) {
        out |= words_[w + 1] >> (64 - off);
    }
    return out;
}

std::uint64_t BitString::read(std::size_t pos, unsigned width) const {
    if (width == 0) {
        return 0;
    }
    if (pos > size_ || width > size_ - pos) {
        throw incomplete_code("bit read past end of sequence");
    }
    return window(pos) >> (64 - width);
}

std::vector<std::uint8_t> BitString::to_bytes() const {
    std::vector<std::uint8_t> out((size_ + 7) / 8);
    for (std::size_t b = 0; b < out.size(); ++b) {
        out[b] = static_cast<std::uint8_t>(words_[b / 8] >> (56 - 8 * (b % 8)));
    }
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
    if (bytes.size() != (nbits + 7) / 8) {
        throw format_error("byte count does not match bit length");
    }
    BitString out;
    out.words_.assign((nbits + 63) / 64, 0);
    for (std::size_t b = 0; b < bytes.size(); ++b) {
        out.words_[b / 8] |= std::uint64_t{bytes[b]} << (56 - 8 * (b % 8));
    }
    out.size_ = nbits;
    // Padding must be zero or equality and window reads break.
    if (nbits & 63) {
        const std::uint64_t tail_mask = ~std::uint64_t{0} >> (nbits & 63);
        if (out.words_.back() & tail_mask) {
            throw format_error("nonzero padding bits");
        }
    }
    return out;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        out.push_back((*this)[i] ? '1' : '0');
    }
    return out;
}

BitString pack_fixed(std::span<const std::uint64_t> values, unsigned width) {
    BitString out;
    for (std::uint64_t v : values) {
        if (width < 64 && (v >> width) != 0) {
            throw domain_error("value does not fit packed width");
        }
        out.append(v, width);
    }
    return out;
}

std::vector<std::uint64_t> unpack_fixed(const BitString& bits, unsigned width, std::size_t count) {
    if (width == 0 || width > 64 || bits.size() / width < count) {
        throw format_error("packed array shorter than declared");
    }
    std::vector<std::uint64_t> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = bits.read(i * width, width);
    }
    return out;
}

unsigned width_for(std::uint64_t max_value) noexcept {
    return max_value == 0 ? 1u : static_cast<unsigned>(std::bit_width(max_value));
}

} // namespace cgap
