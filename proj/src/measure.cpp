#include "cgap/measure.hpp"

#include <algorithm>

#include "cgap/codec.hpp"
#include "cgap/error.hpp"
#include "cgap/huffman.hpp"

namespace cgap {

MeasureReport::PerItem MeasureReport::per_item() const {
    const double nn = static_cast<double>(n);
    const auto pi = [nn](double total) { return total / nn; };
    return {
        pi(static_cast<double>(gap_bits)),
        pi(static_cast<double>(gap_bits + z_delta_bits)),
        pi(u_h0_bits),
        pi(n_h0_g_bits),
        pi(static_cast<double>(c_length_bits)),
        pi(static_cast<double>(c_length_bits + cb_bits)),
        pi(static_cast<double>(binom_bound_bits)),
        pi(static_cast<double>(huffman_bits)),
    };
}

MeasureReport measure_report(const GapStream& g) {
    if (g.empty()) {
        throw domain_error("measure_report needs at least one element");
    }
    MeasureReport r;
    r.u = g.universe;
    r.n = g.size();
    r.g_max = *std::max_element(g.gaps.begin(), g.gaps.end());

    r.gap_bits = gap_measure(g);
    r.z_gamma_bits = z_gamma(g);
    r.z_delta_bits = z_delta(g);
    r.binom_bound_bits = binom_bound(r.n, r.u);
    r.u_h0_bits = u_h0(r.n, r.u);
    r.n_h0_g_bits = static_cast<double>(r.n) * h0_gaps(g);

    const Codebook cb = Codebook::build(g.gaps);
    r.d = cb.size();
    r.cb_bits = cb.serialized_bits();
    for (std::uint64_t gap : g.gaps) {
        r.c_length_bits += delta_length(cb.rank_of(gap));
    }

    const HuffmanBook hb = HuffmanBook::build(g.gaps);
    r.huffman_bits = hb.encoded_bits(g.gaps);
    r.huffman_book_bits = hb.serialized_bits();

    r.tail_flag_bits = 1;
    r.tail_gap_bits = g.tail_gap ? binary_length(*g.tail_gap) : 0;
    return r;
}

MeasureReport measure_report(const SortedSet& s) { return measure_report(gaps_from_set(s)); }

} // namespace cgap
