#include "cgap/codec.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "cgap/error.hpp"

namespace cgap {

unsigned gamma_length(std::uint64_t x) noexcept { return 2 * binary_length(x) - 1; }

void gamma_append(BitString& out, std::uint64_t x) {
    if (x == 0) {
        throw domain_error("gamma code is defined for positive integers only");
    }
    const unsigned len = binary_length(x);
    out.append(0, len - 1);
    out.append(x, len);
}

BitString gamma_encode(std::uint64_t x) {
    BitString out;
    gamma_append(out, x);
    return out;
}

Decoded gamma_decode(const BitString& bits, std::size_t pos) {
    const std::uint64_t w = bits.window(pos);
    if (pos >= bits.size() || w == 0) {
        throw incomplete_code("gamma codeword truncated at bit " + std::to_string(pos));
    }
    const unsigned zeros = static_cast<unsigned>(std::countl_zero(w));
    const unsigned len = 2 * zeros + 1;
    if (len > bits.size() - pos) {
        throw incomplete_code("gamma codeword truncated at bit " + std::to_string(pos));
    }
    if (zeros == 0) {
        return {1, 1};
    }
    return {bits.read(pos + zeros, zeros + 1), len};
}

unsigned delta_length(std::uint64_t x) noexcept {
    const unsigned len = binary_length(x);
    return gamma_length(len) + len - 1;
}

void delta_append(BitString& out, std::uint64_t x) {
    if (x == 0) {
        throw domain_error("delta code is defined for positive integers only");
    }
    const unsigned len = binary_length(x);
    gamma_append(out, len);
    out.append(x, len - 1);
}

BitString delta_encode(std::uint64_t x) {
    BitString out;
    delta_append(out, x);
    return out;
}

Decoded delta_decode(const BitString& bits, std::size_t pos) {
    const auto [len, prefix] = gamma_decode(bits, pos);
    if (len > 64) {
        throw incomplete_code("delta codeword announces more than 64 payload bits");
    }
    if (len == 1) {
        return {1, prefix};
    }
    const unsigned payload = static_cast<unsigned>(len) - 1;
    if (payload > bits.size() - pos - prefix) {
        throw incomplete_code("delta codeword truncated at bit " + std::to_string(pos));
    }
    const std::uint64_t value = (std::uint64_t{1} << payload) | bits.read(pos + prefix, payload);
    return {value, prefix + payload};
}

Codebook Codebook::build(std::span<const std::uint64_t> gaps) {
    std::unordered_map<std::uint64_t, std::uint64_t> occ;
    for (std::uint64_t g : gaps) {
        ++occ[g];
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(occ.begin(), occ.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });

    Codebook cb;
    cb.symbols_.reserve(entries.size());
    cb.freq_.reserve(entries.size());
    for (const auto& [sym, count] : entries) {
        cb.symbols_.push_back(sym);
        cb.freq_.push_back(count);
        cb.ord_.emplace(sym, cb.symbols_.size());
        cb.max_symbol_ = std::max(cb.max_symbol_, sym);
    }
    return cb;
}

Codebook Codebook::from_symbols(std::vector<std::uint64_t> symbols) {
    Codebook cb;
    cb.symbols_ = std::move(symbols);
    for (std::size_t i = 0; i < cb.symbols_.size(); ++i) {
        const std::uint64_t sym = cb.symbols_[i];
        if (sym == 0 || !cb.ord_.emplace(sym, i + 1).second) {
            throw format_error("codebook entries must be distinct positive integers");
        }
        cb.max_symbol_ = std::max(cb.max_symbol_, sym);
    }
    return cb;
}

std::uint64_t Codebook::symbol(std::uint64_t rank) const {
    if (rank == 0 || rank > symbols_.size()) {
        throw unknown_symbol("codeword rank " + std::to_string(rank) + " outside codebook of size " +
                             std::to_string(symbols_.size()));
    }
    return symbols_[rank - 1];
}

std::uint64_t Codebook::rank_of(std::uint64_t gap) const {
    const auto it = ord_.find(gap);
    if (it == ord_.end()) {
        throw unknown_symbol("gap " + std::to_string(gap) + " has no codeword");
    }
    return it->second;
}

unsigned Codebook::symbol_width() const noexcept {
    return max_symbol_ == 0 ? 0 : binary_length(max_symbol_);
}

std::uint64_t Codebook::serialized_bits() const noexcept {
    return static_cast<std::uint64_t>(symbols_.size()) * symbol_width();
}

EncodedStream encode_stream(std::span<const std::uint64_t> gaps, const Codebook& cb) {
    EncodedStream out;
    for (std::uint64_t g : gaps) {
        delta_append(out.bits, cb.rank_of(g));
    }
    out.count = gaps.size();
    return out;
}

EncodedStream encode_stream(const GapStream& g, const Codebook& cb) { return encode_stream(g.gaps, cb); }

DecodedGap decode_at(const EncodedStream& c, std::size_t bitpos, const Codebook& cb) {
    if (bitpos >= c.bits.size()) {
        throw range_error("codeword position " + std::to_string(bitpos) + " past stream end " +
                          std::to_string(c.bits.size()));
    }
    const auto [rank, len] = delta_decode(c.bits, bitpos);
    return {cb.symbol(rank), bitpos + len};
}

std::vector<std::uint64_t> decode_all(const EncodedStream& c, const Codebook& cb) {
    std::vector<std::uint64_t> out;
    out.reserve(c.count);
    std::size_t pos = 0;
    for (std::uint64_t i = 0; i < c.count; ++i) {
        const auto [gap, next] = decode_at(c, pos, cb);
        out.push_back(gap);
        pos = next;
    }
    return out;
}

} // namespace cgap
