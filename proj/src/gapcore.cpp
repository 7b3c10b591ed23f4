#include "cgap/gapcore.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "cgap/error.hpp"

namespace cgap {

SortedSet::SortedSet(std::uint64_t universe, std::vector<std::uint64_t> elements)
    : universe_(universe), elements_(std::move(elements)) {
    if (universe_ == 0) {
        throw domain_error("universe must be positive");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] >= universe_) {
            throw validation_error("element " + std::to_string(elements_[i]) + " at index " +
                                   std::to_string(i) + " is outside the universe");
        }
        if (i > 0 && elements_[i] <= elements_[i - 1]) {
            throw validation_error("element at index " + std::to_string(i) +
                                   " is not strictly greater than its predecessor");
        }
    }
}

GapStream gaps_from_set(const SortedSet& s) {
    GapStream g;
    g.universe = s.universe();
    const auto el = s.elements();
    g.gaps.reserve(el.size());
    std::uint64_t prev_plus_one = 0;
    for (std::uint64_t x : el) {
        g.gaps.push_back(x + 1 - prev_plus_one);
        prev_plus_one = x + 1;
    }
    if (el.empty() || el.back() != s.universe() - 1) {
        g.tail_gap = s.universe() - prev_plus_one;
    }
    return g;
}

SortedSet set_from_gaps(const GapStream& g) {
    std::vector<std::uint64_t> out;
    out.reserve(g.gaps.size());
    std::uint64_t next = 0; // previous element + 1
    for (std::uint64_t gap : g.gaps) {
        if (gap == 0) {
            throw malformed_stream("zero gap");
        }
        if (gap > g.universe - next) {
            throw malformed_stream("gaps exceed the universe");
        }
        next += gap;
        out.push_back(next - 1);
    }
    if (g.tail_gap) {
        if (*g.tail_gap == 0 || *g.tail_gap != g.universe - next) {
            throw malformed_stream("tail gap does not close the universe");
        }
    } else if (next != g.universe) {
        throw malformed_stream("gaps do not reach u-1 although the tail flag says they do");
    }
    return SortedSet(g.universe, std::move(out));
}

unsigned binary_length(std::uint64_t x) noexcept {
    return static_cast<unsigned>(std::bit_width(x));
}

std::uint64_t gap_measure(std::span<const std::uint64_t> gaps) {
    std::uint64_t bits = 0;
    for (std::uint64_t g : gaps) {
        bits += binary_length(g);
    }
    return bits;
}

std::uint64_t gap_measure(const GapStream& g) { return gap_measure(g.gaps); }

std::uint64_t z_gamma(const GapStream& g) { return gap_measure(g) - g.size(); }

std::uint64_t z_delta(std::span<const std::uint64_t> gaps) {
    std::uint64_t bits = 0;
    for (std::uint64_t g : gaps) {
        bits += 2 * (binary_length(binary_length(g)) - 1);
    }
    return bits;
}

std::uint64_t z_delta(const GapStream& g) { return z_delta(g.gaps); }

double h0_gaps(std::span<const std::uint64_t> gaps) {
    if (gaps.empty()) {
        return 0.0;
    }
    std::unordered_map<std::uint64_t, std::uint64_t> occ;
    for (std::uint64_t g : gaps) {
        ++occ[g];
    }
    const double n = static_cast<double>(gaps.size());
    double h = 0.0;
    for (const auto& [sym, count] : occ) {
        const double f = static_cast<double>(count) / n;
        h -= f * std::log2(f);
    }
    return h;
}

double h0_gaps(const GapStream& g) { return h0_gaps(g.gaps); }

std::size_t distinct_gaps(std::span<const std::uint64_t> gaps) {
    std::vector<std::uint64_t> v(gaps.begin(), gaps.end());
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

std::uint64_t max_distinct_gaps(std::uint64_t u) {
    // Start from the floating estimate and correct so that d(d+1)/2 <= u < (d+1)(d+2)/2.
    auto tri = [](unsigned __int128 d) { return d * (d + 1) / 2; };
    auto d = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(u) + 1.0L) - 1.0L) / 2.0L);
    while (d > 0 && tri(d) > u) {
        --d;
    }
    while (tri(d + 1) <= u) {
        ++d;
    }
    return d;
}

namespace {

std::uint64_t exact_binom_bound(std::uint64_t n, std::uint64_t u) {
    static_assert(sizeof(unsigned long) == 8, "mpz_bin_uiui needs 64-bit unsigned long");
    mpz_t c;
    mpz_init(c);
    mpz_bin_uiui(c, u, n);
    // ceil(log2 C) = bit length of C - 1 (0 when C = 1).
    mpz_sub_ui(c, c, 1);
    const std::uint64_t bits = mpz_sgn(c) == 0 ? 0 : mpz_sizeinbase(c, 2);
    mpz_clear(c);
    return bits;
}

// log2 C(u, n) in extended precision.
long double log2_binom(std::uint64_t n, std::uint64_t u) {
    const std::uint64_t k = std::min(n, u - n);
    if (k <= (std::uint64_t{1} << 22)) {
        // Kahan-compensated sum of log2((u - i) / (i + 1)).
        long double sum = 0.0L;
        long double comp = 0.0L;
        for (std::uint64_t i = 0; i < k; ++i) {
            const long double term = std::log2(static_cast<long double>(u - i)) -
                                     std::log2(static_cast<long double>(i + 1));
            const long double y = term - comp;
            const long double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum;
    }
    // Stirling series, with u ln u - n ln n - m ln m rewritten as
    // n ln(u/n) + m log1p(n/m) so nothing cancels. Both n and m exceed 2^22 here,
    // so the truncated terms are below 1e-30.
    const long double uu = static_cast<long double>(u);
    const long double nn = static_cast<long double>(n);
    const long double mm = static_cast<long double>(u - n);
    const long double pi = 3.141592653589793238462643383279502884L;
    long double ln = nn * std::log(uu / nn) + mm * std::log1p(nn / mm);
    ln += 0.5L * std::log(uu / (2.0L * pi * nn * mm));
    ln += (1.0L / uu - 1.0L / nn - 1.0L / mm) / 12.0L;
    ln -= (1.0L / (uu * uu * uu) - 1.0L / (nn * nn * nn) - 1.0L / (mm * mm * mm)) / 360.0L;
    return ln / std::log(2.0L);
}

} // namespace

std::uint64_t binom_bound(std::uint64_t n, std::uint64_t u) {
    if (n > u) {
        throw domain_error("binom_bound: n exceeds u");
    }
    if (n == 0 || n == u) {
        return 0;
    }
    constexpr std::uint64_t exact_limit = std::uint64_t{1} << 20;
    if (u <= exact_limit) {
        return exact_binom_bound(n, u);
    }
    const long double est = log2_binom(n, u);
    const long double nearest = std::round(est);
    if (std::fabs(est - nearest) < 1e-6L) {
        return exact_binom_bound(n, u);
    }
    return static_cast<std::uint64_t>(std::ceil(est));
}

double u_h0(std::uint64_t n, std::uint64_t u) {
    if (n > u) {
        throw domain_error("u_h0: n exceeds u");
    }
    if (n == 0 || n == u) {
        return 0.0;
    }
    const long double nn = static_cast<long double>(n);
    const long double uu = static_cast<long double>(u);
    const long double rest = uu - nn;
    return static_cast<double>(nn * std::log2(uu / nn) + rest * std::log2(uu / rest));
}

} // namespace cgap
