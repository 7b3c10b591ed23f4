#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cgap/codec.hpp"
#include "cgap/gapcore.hpp"

namespace cgap {

// Work counters filled in by instrumented queries.
struct QueryStats {
    std::uint64_t decoded = 0; // codewords decoded
    std::uint64_t probes = 0;  // nonempty universe blocks inspected by FID select
};

// Binary-searchable dictionary: the set is cut into runs of t = ceil(log2 u)
// elements. Each run keeps its first element explicitly plus a pointer into the
// shared delta-of-ord stream, which holds the remaining t-1 gaps of the run.
// The first gap of every run is never encoded.
class Bsd {
public:
    Bsd() = default;

    // values must be strictly increasing and < universe; every gap between
    // consecutive values must be in the codebook (unknown_symbol otherwise).
    Bsd(std::span<const std::uint64_t> values, std::uint64_t universe, std::shared_ptr<const Codebook> codebook);
    Bsd(const SortedSet& s, std::shared_ptr<const Codebook> codebook);

    // Reassembles a structure from its stored parts, checking their shape.
    static Bsd from_parts(std::uint64_t universe, std::uint64_t n, std::vector<std::uint64_t> heads,
                          std::vector<std::uint64_t> pointers, EncodedStream stream,
                          std::shared_ptr<const Codebook> codebook);

    std::uint64_t universe() const noexcept { return universe_; }
    std::uint64_t size() const noexcept { return n_; }
    std::uint64_t run_length() const noexcept { return t_; }

    // (i+1)-th smallest value; decodes i mod t codewords. Throws range_error for i >= size().
    std::uint64_t select(std::uint64_t i, QueryStats* stats = nullptr) const;
    // Number of values <= x. Throws range_error for x >= universe().
    std::uint64_t rank(std::uint64_t x, QueryStats* stats = nullptr) const;

    std::vector<std::uint64_t> values() const;

    std::span<const std::uint64_t> heads() const noexcept { return heads_; }
    std::span<const std::uint64_t> pointers() const noexcept { return pointers_; }
    const EncodedStream& stream() const noexcept { return stream_; }
    const Codebook& codebook() const noexcept { return *codebook_; }

    unsigned head_width() const noexcept;    // ceil(log2 universe), at least 1
    unsigned pointer_width() const noexcept; // ceil(log2(l + 1)), at least 1
    std::uint64_t heads_bits() const noexcept { return heads_.size() * std::uint64_t{head_width()}; }
    std::uint64_t pointers_bits() const noexcept { return pointers_.size() * std::uint64_t{pointer_width()}; }

    bool operator==(const Bsd& o) const {
        return universe_ == o.universe_ && n_ == o.n_ && heads_ == o.heads_ && pointers_ == o.pointers_ &&
               stream_ == o.stream_;
    }

private:
    std::uint64_t universe_ = 0;
    std::uint64_t n_ = 0;
    std::uint64_t t_ = 1;
    std::vector<std::uint64_t> heads_;
    std::vector<std::uint64_t> pointers_;
    EncodedStream stream_;
    std::shared_ptr<const Codebook> codebook_;
};

// Run length used for a universe of size u: max(1, ceil(log2 u)).
std::uint64_t bsd_run_length(std::uint64_t universe) noexcept;

} // namespace cgap
