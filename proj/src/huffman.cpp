#include "cgap/huffman.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cgap/error.hpp"
#include "cgap/gapcore.hpp"

namespace cgap {

namespace {

// Code length per leaf, leaves given in ascending weight order. Two-queue
// construction: merged nodes are created in nondecreasing weight order, so the
// next minimum is always at the front of one of the two queues.
std::vector<unsigned> huffman_lengths(const std::vector<std::uint64_t>& weights) {
    const std::size_t d = weights.size();
    if (d == 1) {
        return {1};
    }
    std::vector<std::uint64_t> w(weights);
    w.reserve(2 * d - 1);
    std::vector<std::size_t> parent(2 * d - 1, 0);
    std::size_t leaf = 0;
    std::size_t inner = d;
    auto take = [&] {
        if (leaf < d && (inner >= w.size() || w[leaf] <= w[inner])) {
            return leaf++;
        }
        return inner++;
    };
    while (w.size() < 2 * d - 1) {
        const std::size_t a = take();
        const std::size_t b = take();
        parent[a] = parent[b] = w.size();
        w.push_back(w[a] + w[b]);
    }
    std::vector<unsigned> depth(2 * d - 1, 0);
    for (std::size_t i = 2 * d - 1; i-- > 0;) {
        if (i != 2 * d - 2) {
            depth[i] = depth[parent[i]] + 1;
        }
    }
    return {depth.begin(), depth.begin() + static_cast<std::ptrdiff_t>(d)};
}

} // namespace

HuffmanBook HuffmanBook::build(std::span<const std::uint64_t> gaps) {
    if (gaps.empty()) {
        throw domain_error("huffman_build needs at least one gap");
    }
    std::unordered_map<std::uint64_t, std::uint64_t> occ;
    for (std::uint64_t g : gaps) {
        ++occ[g];
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> by_weight; // (count, symbol)
    by_weight.reserve(occ.size());
    for (const auto& [sym, count] : occ) {
        by_weight.emplace_back(count, sym);
    }
    std::sort(by_weight.begin(), by_weight.end());

    std::vector<std::uint64_t> weights;
    weights.reserve(by_weight.size());
    for (const auto& e : by_weight) {
        weights.push_back(e.first);
    }
    const auto lens = huffman_lengths(weights);

    std::vector<std::pair<unsigned, std::uint64_t>> canon; // (length, symbol)
    canon.reserve(lens.size());
    for (std::size_t i = 0; i < lens.size(); ++i) {
        if (lens[i] > 64) {
            throw domain_error("huffman code length exceeds 64 bits");
        }
        canon.emplace_back(lens[i], by_weight[i].second);
    }
    std::sort(canon.begin(), canon.end());

    HuffmanBook book;
    const unsigned max_len = canon.back().first;
    book.first_code_.assign(max_len + 1, 0);
    book.count_.assign(max_len + 1, 0);
    book.first_index_.assign(max_len + 1, 0);
    std::uint64_t code = 0;
    unsigned prev_len = canon.front().first;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        const auto [len, sym] = canon[i];
        if (len != prev_len) {
            code <<= (len - prev_len);
            prev_len = len;
        }
        if (book.count_[len] == 0) {
            book.first_code_[len] = code;
            book.first_index_[len] = i;
        }
        ++book.count_[len];
        book.symbols_.push_back(sym);
        book.lengths_.push_back(len);
        book.codes_.push_back(code);
        book.index_.emplace(sym, i);
        ++code;
    }
    return book;
}

std::pair<std::uint64_t, unsigned> HuffmanBook::codeword(std::uint64_t gap) const {
    const auto it = index_.find(gap);
    if (it == index_.end()) {
        throw unknown_symbol("gap " + std::to_string(gap) + " has no Huffman codeword");
    }
    return {codes_[it->second], lengths_[it->second]};
}

unsigned HuffmanBook::length_of(std::uint64_t gap) const { return codeword(gap).second; }

std::uint64_t HuffmanBook::encoded_bits(std::span<const std::uint64_t> gaps) const {
    std::uint64_t bits = 0;
    for (std::uint64_t g : gaps) {
        bits += length_of(g);
    }
    return bits;
}

std::uint64_t HuffmanBook::serialized_bits() const noexcept {
    const std::uint64_t d = symbols_.size();
    const std::uint64_t sym_width = binary_length(*std::max_element(symbols_.begin(), symbols_.end()));
    return 8 + 8 + std::uint64_t{max_length()} * width_for(d) + d * sym_width;
}

std::uint64_t HuffmanBook::decode_one(const BitString& bits, std::size_t& pos) const {
    std::uint64_t code = 0;
    for (unsigned len = 1; len <= max_length(); ++len) {
        if (pos >= bits.size()) {
            throw incomplete_code("Huffman stream ends inside a codeword");
        }
        code = (code << 1) | (bits[pos++] ? 1u : 0u);
        const std::uint64_t offset = code - first_code_[len];
        if (offset < count_[len]) {
            return symbols_[first_index_[len] + offset];
        }
    }
    throw incomplete_code("bit pattern is not a Huffman codeword");
}

BitString huffman_encode(std::span<const std::uint64_t> gaps, const HuffmanBook& book) {
    BitString out;
    for (std::uint64_t g : gaps) {
        const auto [code, len] = book.codeword(g);
        out.append(code, len);
    }
    return out;
}

std::vector<std::uint64_t> huffman_decode(const BitString& bits, const HuffmanBook& book, std::size_t n) {
    std::vector<std::uint64_t> out;
    out.reserve(n);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(book.decode_one(bits, pos));
    }
    return out;
}

} // namespace cgap
