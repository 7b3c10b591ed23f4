#include "cgap/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include "cgap/error.hpp"

namespace cgap {

namespace {

constexpr unsigned max_k = 30;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void check_spec(const SimSpec& spec) {
    if (spec.k < 1 || spec.k > max_k) {
        throw domain_error("k must be in [1, 30], got " + std::to_string(spec.k));
    }
    if (spec.n == 0) {
        throw domain_error("n must be at least 1");
    }
}

// Uniform integer in [0, range) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % range;
}

GapStream finish(std::vector<std::uint64_t> gaps) {
    GapStream g;
    std::uint64_t u = 0;
    for (std::uint64_t x : gaps) {
        if (x > std::numeric_limits<std::uint64_t>::max() - u) {
            throw domain_error("simulated universe overflows 64 bits");
        }
        u += x;
    }
    g.gaps = std::move(gaps);
    g.universe = u;
    return g;
}

// Inverse-CDF table for Binomial(2^k, 1/2), truncated 40 standard deviations
// from the mean where the remaining mass is far below double resolution.
struct BinomialTable {
    std::uint64_t offset = 0;
    std::vector<double> cdf;

    explicit BinomialTable(unsigned k) {
        const long double trials = std::ldexp(1.0L, static_cast<int>(k));
        const long double mean = trials / 2;
        const long double sd = std::sqrt(trials) / 2;
        const long double lo = std::max(0.0L, std::floor(mean - 40 * sd));
        const long double hi = std::min(trials, std::ceil(mean + 40 * sd));
        offset = static_cast<std::uint64_t>(lo);
        const long double log_norm = std::lgamma(trials + 1) - trials * std::log(2.0L);
        std::vector<long double> acc;
        long double sum = 0;
        for (long double x = lo; x <= hi; x += 1) {
            sum += std::exp(log_norm - std::lgamma(x + 1) - std::lgamma(trials - x + 1));
            acc.push_back(sum);
        }
        cdf.reserve(acc.size());
        for (long double c : acc) {
            cdf.push_back(static_cast<double>(c / sum));
        }
        cdf.back() = 1.0;
    }

    std::uint64_t sample(std::mt19937_64& rng) const {
        const double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), p);
        return offset + static_cast<std::uint64_t>(it - cdf.begin());
    }
};

} // namespace

std::string_view to_string(Distribution d) noexcept {
    return d == Distribution::uniform ? "uniform" : "binomial";
}

Distribution parse_distribution(std::string_view name) {
    if (name == "uniform") {
        return Distribution::uniform;
    }
    if (name == "binomial") {
        return Distribution::binomial;
    }
    throw domain_error("unknown distribution '" + std::string(name) + "'");
}

std::uint64_t row_seed(std::uint64_t seed, Distribution dist, unsigned k) noexcept {
    const std::uint64_t tag = (dist == Distribution::uniform ? 0x100u : 0x200u) | k;
    return splitmix64(splitmix64(seed) ^ tag);
}

GapStream uniform_gaps(const SimSpec& spec) {
    check_spec(spec);
    std::mt19937_64 rng(row_seed(spec.seed, Distribution::uniform, spec.k));
    const std::uint64_t range = (std::uint64_t{1} << spec.k) + 1;
    std::vector<std::uint64_t> gaps(spec.n);
    for (auto& g : gaps) {
        g = 1 + uniform_below(rng, range);
    }
    return finish(std::move(gaps));
}

GapStream binomial_gaps(const SimSpec& spec) {
    check_spec(spec);
    std::mt19937_64 rng(row_seed(spec.seed, Distribution::binomial, spec.k));
    const BinomialTable table(spec.k);
    std::vector<std::uint64_t> gaps(spec.n);
    for (auto& g : gaps) {
        g = 1 + table.sample(rng);
    }
    return finish(std::move(gaps));
}

GapStream generate_gaps(const SimSpec& spec) {
    return spec.dist == Distribution::uniform ? uniform_gaps(spec) : binomial_gaps(spec);
}

std::vector<TableRow> simulate_table(Distribution dist, unsigned k_min, unsigned k_max, std::uint64_t n,
                                     std::uint64_t seed) {
    if (k_min < 1 || k_min > k_max || k_max > max_k) {
        throw domain_error("need 1 <= k-min <= k-max <= 30");
    }
    std::vector<TableRow> rows;
    for (unsigned k = k_min; k <= k_max; ++k) {
        const SimSpec spec{dist, k, n, seed};
        rows.push_back({dist, k, measure_report(generate_gaps(spec))});
    }
    return rows;
}

std::string table_csv_header() { return "dist,k,n,u,d,gap,gap_zdelta,uh0,nh0g,nh0g_zdelta,nh0g_zdelta_cb"; }

std::string table_csv_row(const TableRow& row) {
    const auto& r = row.report;
    const auto p = r.per_item();
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%u,%llu,%llu,%llu,%.5f,%.5f,%.5f,%.5f,%.5f,%.5f",
                  std::string(to_string(row.dist)).c_str(), row.k, static_cast<unsigned long long>(r.n),
                  static_cast<unsigned long long>(r.u), static_cast<unsigned long long>(r.d), p.gap, p.gap_zdelta,
                  p.uh0, p.nh0g, p.nh0g_zdelta, p.nh0g_zdelta_cb);
    return buf;
}

void write_table_csv(std::ostream& out, std::span<const TableRow> rows) {
    out << table_csv_header() << '\n';
    for (const auto& row : rows) {
        out << table_csv_row(row) << '\n';
    }
}

} // namespace cgap
