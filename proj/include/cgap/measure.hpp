#pragma once

#include <cstdint>

#include "cgap/gapcore.hpp"

namespace cgap {

// Every size measure of one set, in total bits.
struct MeasureReport {
    std::uint64_t u = 0;
    std::uint64_t n = 0;
    std::uint64_t d = 0;     // distinct gaps
    std::uint64_t g_max = 0; // largest gap

    std::uint64_t gap_bits = 0;
    std::uint64_t z_gamma_bits = 0;
    std::uint64_t z_delta_bits = 0;
    std::uint64_t binom_bound_bits = 0;
    double u_h0_bits = 0.0;
    double n_h0_g_bits = 0.0;
    std::uint64_t c_length_bits = 0;     // delta(ord(g)) stream over all n gaps
    std::uint64_t huffman_bits = 0;      // canonical Huffman stream
    std::uint64_t huffman_book_bits = 0; // serialized Huffman codebook
    std::uint64_t cb_bits = 0;           // d * (floor(log2 g_max) + 1)

    // Extra cost when u-1 is not an element: one flag bit always, plus the
    // binary length of the tail gap when it exists.
    std::uint64_t tail_flag_bits = 1;
    std::uint64_t tail_gap_bits = 0;

    struct PerItem {
        double gap;
        double gap_zdelta;
        double uh0;
        double nh0g;
        double nh0g_zdelta; // C length / n
        double nh0g_zdelta_cb;
        double binom;
        double huffman;
    };

    PerItem per_item() const;
};

// Throws domain_error for an empty set (every per-item figure divides by n).
MeasureReport measure_report(const SortedSet& s);
MeasureReport measure_report(const GapStream& g);

} // namespace cgap
