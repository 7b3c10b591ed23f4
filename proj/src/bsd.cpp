#include "cgap/bsd.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cgap/error.hpp"

namespace cgap {

std::uint64_t bsd_run_length(std::uint64_t universe) noexcept {
    return universe <= 2 ? 1 : static_cast<std::uint64_t>(std::bit_width(universe - 1));
}

Bsd::Bsd(std::span<const std::uint64_t> values, std::uint64_t universe, std::shared_ptr<const Codebook> codebook)
    : universe_(universe), n_(values.size()), t_(bsd_run_length(universe)), codebook_(std::move(codebook)) {
    if (values.empty()) {
        throw domain_error("a BSD needs at least one value");
    }
    if (!codebook_) {
        throw domain_error("a BSD needs a codebook");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= universe || (i > 0 && values[i] <= values[i - 1])) {
            throw validation_error("BSD values must be strictly increasing and inside the universe");
        }
    }
    const std::size_t runs = (values.size() + t_ - 1) / t_;
    heads_.reserve(runs);
    pointers_.reserve(runs);
    for (std::size_t r = 0; r < runs; ++r) {
        const std::size_t begin = r * t_;
        const std::size_t end = std::min<std::size_t>(begin + t_, values.size());
        heads_.push_back(values[begin]);
        pointers_.push_back(stream_.bits.size());
        for (std::size_t i = begin + 1; i < end; ++i) {
            delta_append(stream_.bits, codebook_->rank_of(values[i] - values[i - 1]));
            ++stream_.count;
        }
    }
}

Bsd::Bsd(const SortedSet& s, std::shared_ptr<const Codebook> codebook)
    : Bsd(s.elements(), s.universe(), std::move(codebook)) {}

Bsd Bsd::from_parts(std::uint64_t universe, std::uint64_t n, std::vector<std::uint64_t> heads,
                    std::vector<std::uint64_t> pointers, EncodedStream stream,
                    std::shared_ptr<const Codebook> codebook) {
    Bsd b;
    b.universe_ = universe;
    b.n_ = n;
    b.t_ = bsd_run_length(universe);
    const std::uint64_t runs = (n + b.t_ - 1) / b.t_;
    if (n == 0 || heads.size() != runs || pointers.size() != runs || stream.count != n - runs) {
        throw format_error("BSD parts have inconsistent sizes");
    }
    for (std::size_t r = 0; r < runs; ++r) {
        if (heads[r] >= universe || (r > 0 && heads[r] <= heads[r - 1])) {
            throw format_error("BSD heads must be strictly increasing and inside the universe");
        }
        if (pointers[r] > stream.bits.size() || (r > 0 && pointers[r] < pointers[r - 1])) {
            throw format_error("BSD pointer outside its stream");
        }
    }
    b.heads_ = std::move(heads);
    b.pointers_ = std::move(pointers);
    b.stream_ = std::move(stream);
    b.codebook_ = std::move(codebook);
    return b;
}

unsigned Bsd::head_width() const noexcept { return width_for(universe_ - 1); }

unsigned Bsd::pointer_width() const noexcept { return width_for(stream_.bits.size()); }

std::uint64_t Bsd::select(std::uint64_t i, QueryStats* stats) const {
    if (i >= n_) {
        throw range_error("BSD select index " + std::to_string(i) + " outside [0, " + std::to_string(n_) + ")");
    }
    const std::uint64_t run = i / t_;
    std::uint64_t value = heads_[run];
    std::size_t pos = pointers_[run];
    for (std::uint64_t k = i % t_; k > 0; --k) {
        const auto [gap, next] = decode_at(stream_, pos, *codebook_);
        value += gap;
        pos = next;
    }
    if (stats) {
        stats->decoded += i % t_;
    }
    return value;
}

std::uint64_t Bsd::rank(std::uint64_t x, QueryStats* stats) const {
    if (x >= universe_) {
        throw range_error("BSD rank argument " + std::to_string(x) + " outside [0, " + std::to_string(universe_) +
                          ")");
    }
    // Last run whose head is <= x.
    const auto it = std::upper_bound(heads_.begin(), heads_.end(), x);
    if (it == heads_.begin()) {
        return 0;
    }
    const std::uint64_t run = static_cast<std::uint64_t>(it - heads_.begin()) - 1;
    const std::uint64_t base = run * t_;
    std::uint64_t q = heads_[run];
    if (q == x) {
        return base + 1;
    }
    const std::uint64_t population = std::min<std::uint64_t>(t_, n_ - base);
    std::size_t pos = pointers_[run];
    for (std::uint64_t j = 1; j < population; ++j) {
        const auto [gap, next] = decode_at(stream_, pos, *codebook_);
        if (stats) {
            ++stats->decoded;
        }
        q += gap;
        pos = next;
        if (q >= x) {
            return q == x ? base + j + 1 : base + j;
        }
    }
    // Every value of the run is below x.
    return base + population;
}

std::vector<std::uint64_t> Bsd::values() const {
    std::vector<std::uint64_t> out;
    out.reserve(n_);
    std::size_t pos = 0;
    for (std::size_t run = 0; run < heads_.size(); ++run) {
        std::uint64_t value = heads_[run];
        out.push_back(value);
        const std::uint64_t population = std::min<std::uint64_t>(t_, n_ - run * t_);
        for (std::uint64_t j = 1; j < population; ++j) {
            const auto [gap, next] = decode_at(stream_, pos, *codebook_);
            value += gap;
            pos = next;
            out.push_back(value);
        }
    }
    return out;
}

} // namespace cgap
