#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cgap {

// A subset of the universe {0, ..., u-1}, stored as a strictly increasing list.
class SortedSet {
public:
    SortedSet() = default;

    // Throws validation_error unless elements are strictly increasing and < universe,
    // and domain_error when universe is zero.
    SortedSet(std::uint64_t universe, std::vector<std::uint64_t> elements);

    std::uint64_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    std::span<const std::uint64_t> elements() const noexcept { return elements_; }
    std::uint64_t operator[](std::size_t i) const noexcept { return elements_[i]; }

    bool operator==(const SortedSet&) const = default;

private:
    std::uint64_t universe_ = 1;
    std::vector<std::uint64_t> elements_;
};

// Gap representation of a set: g1 = s1 + 1, gi = si - s(i-1).
//
// When u-1 is not an element, the distance from the last element to u-1 is kept
// in tail_gap, so that the gaps plus the tail always add up to the universe.
struct GapStream {
    std::vector<std::uint64_t> gaps;
    std::uint64_t universe = 0;
    std::optional<std::uint64_t> tail_gap;

    // True when u-1 is an element, i.e. no separate tail gap is needed.
    bool tail_present() const noexcept { return !tail_gap.has_value(); }
    std::size_t size() const noexcept { return gaps.size(); }
    bool empty() const noexcept { return gaps.empty(); }
};

GapStream gaps_from_set(const SortedSet& s);

// Inverse of gaps_from_set. Throws malformed_stream when a gap is zero or the
// gaps (plus tail) do not add up to the universe.
SortedSet set_from_gaps(const GapStream& g);

// sum over gaps of floor(log2 g) + 1. The tail gap is not included.
std::uint64_t gap_measure(std::span<const std::uint64_t> gaps);
std::uint64_t gap_measure(const GapStream& g);

// Decoding overhead of Elias gamma: gap - n.
std::uint64_t z_gamma(const GapStream& g);

// Decoding overhead of Elias delta: 2 * sum floor(log2(floor(log2 g) + 1)).
std::uint64_t z_delta(std::span<const std::uint64_t> gaps);
std::uint64_t z_delta(const GapStream& g);

// Empirical zero-order entropy of the gap sequence, bits per gap. 0 for n = 0.
double h0_gaps(std::span<const std::uint64_t> gaps);
double h0_gaps(const GapStream& g);

// ceil(log2 C(u, n)). Throws domain_error when n > u.
std::uint64_t binom_bound(std::uint64_t n, std::uint64_t u);

// u * H0 of a length-u bitvector with n ones. 0 when n is 0 or u.
double u_h0(std::uint64_t n, std::uint64_t u);

// Number of distinct gap values.
std::size_t distinct_gaps(std::span<const std::uint64_t> gaps);

// Largest d such that 1 + 2 + ... + d <= u, i.e. floor((sqrt(8u+1) - 1) / 2).
std::uint64_t max_distinct_gaps(std::uint64_t u);

// floor(log2 x) + 1 for x >= 1.
unsigned binary_length(std::uint64_t x) noexcept;

} // namespace cgap
