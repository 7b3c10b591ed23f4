#include "cgap/rs_bitvector.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cgap/error.hpp"

namespace cgap {

namespace {

// Offset (from the most significant end) of the r-th one in w, 0-based.
unsigned word_select(std::uint64_t w, std::uint64_t r) {
    for (; r > 0; --r) {
        w &= ~(std::uint64_t{1} << (63 - std::countl_zero(w)));
    }
    return static_cast<unsigned>(std::countl_zero(w));
}

} // namespace

RsBitvector::RsBitvector(BitString bits) : bits_(std::move(bits)) { build_directory(); }

void RsBitvector::build_directory() {
    const auto words = bits_.words();
    const std::size_t nsb = (words.size() + 7) / 8;
    absolute_.assign(nsb, 0);
    relative_.assign(nsb, 0);
    samples_.clear();

    std::uint64_t total = 0;
    for (std::size_t sb = 0; sb < nsb; ++sb) {
        absolute_[sb] = total;
        std::uint64_t within = 0;
        std::uint64_t rel = 0;
        for (std::size_t k = 0; k < 8; ++k) {
            if (k > 0) {
                rel |= within << (9 * (k - 1));
            }
            const std::size_t wi = sb * 8 + k;
            if (wi >= words.size()) {
                continue;
            }
            const std::uint64_t w = words[wi];
            const auto pc = static_cast<std::uint64_t>(std::popcount(w));
            // Record the sample positions that fall inside this word.
            std::uint64_t next = (total + within + select_sample_rate - 1) / select_sample_rate * select_sample_rate;
            while (next < total + within + pc) {
                samples_.push_back(wi * 64 + word_select(w, next - total - within));
                next += select_sample_rate;
            }
            within += pc;
        }
        relative_[sb] = rel;
        total += within;
    }
    ones_ = total;
}

std::uint64_t RsBitvector::rank1(std::size_t p) const {
    if (p >= bits_.size()) {
        throw range_error("rank1 position " + std::to_string(p) + " outside bitvector of length " +
                          std::to_string(bits_.size()));
    }
    const std::size_t w = p / 64;
    const std::size_t sb = p / superblock_bits;
    const std::size_t k = w % 8;
    std::uint64_t r = absolute_[sb];
    if (k > 0) {
        r += (relative_[sb] >> (9 * (k - 1))) & 511u;
    }
    return r + static_cast<std::uint64_t>(std::popcount(bits_.words()[w] >> (63 - p % 64)));
}

std::size_t RsBitvector::select1(std::uint64_t j) const {
    if (j >= ones_) {
        throw range_error("select1 index " + std::to_string(j) + " outside [0, " + std::to_string(ones_) + ")");
    }
    const std::size_t s = j / select_sample_rate;
    const std::size_t lo = samples_[s] / superblock_bits;
    const std::size_t hi = s + 1 < samples_.size() ? samples_[s + 1] / superblock_bits : absolute_.size() - 1;
    const auto first = absolute_.begin() + static_cast<std::ptrdiff_t>(lo);
    const auto last = absolute_.begin() + static_cast<std::ptrdiff_t>(hi) + 1;
    const std::size_t sb = static_cast<std::size_t>(std::upper_bound(first, last, j) - absolute_.begin()) - 1;

    const std::uint64_t r = j - absolute_[sb];
    const auto words = bits_.words();
    std::size_t k = 7;
    std::uint64_t before = 0;
    for (; k > 0; --k) {
        before = (relative_[sb] >> (9 * (k - 1))) & 511u;
        if (sb * 8 + k < words.size() && before <= r) {
            break;
        }
    }
    if (k == 0) {
        before = 0;
    }
    const std::size_t wi = sb * 8 + k;
    return wi * 64 + word_select(words[wi], r - before);
}

void RsBitvector::write(ByteWriter& out) const {
    out.frame_u64(bits_.size());
    out.frame_u64(ones_);
    out.payload_bits(bits_);
    for (std::uint64_t v : absolute_) {
        out.payload_u64(v);
    }
    for (std::uint64_t v : relative_) {
        out.payload_u64(v);
    }
    for (std::uint64_t v : samples_) {
        out.payload_u64(v);
    }
}

RsBitvector RsBitvector::read(ByteReader& in) {
    const std::uint64_t m = in.u64();
    const std::uint64_t ones = in.u64();
    RsBitvector bv(in.bits(m));
    if (bv.ones_ != ones) {
        throw format_error("bitvector popcount does not match its header");
    }
    auto expect = [&in](const std::vector<std::uint64_t>& rebuilt, const char* what) {
        for (std::uint64_t v : rebuilt) {
            if (in.u64() != v) {
                throw format_error(std::string("stored ") + what + " disagrees with the bits");
            }
        }
    };
    expect(bv.absolute_, "rank directory");
    expect(bv.relative_, "rank directory");
    expect(bv.samples_, "select samples");
    return bv;
}

} // namespace cgap
