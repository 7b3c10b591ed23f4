#include <doctest.h>

#include <cmath>
#include <random>

#include "cgap/bsd.hpp"
#include "cgap/error.hpp"
#include "oracles.hpp"

using namespace cgap;

namespace {

using Vec = std::vector<std::uint64_t>;

Bsd make_bsd(const SortedSet& s) {
    auto cb = std::make_shared<const Codebook>(Codebook::build(gaps_from_set(s).gaps));
    return Bsd(s, cb);
}

void sweep(const SortedSet& s, const Bsd& b) {
    const Vec el(s.elements().begin(), s.elements().end());
    const std::uint64_t t = b.run_length();
    for (std::uint64_t i = 0; i < el.size(); ++i) {
        QueryStats st;
        REQUIRE(b.select(i, &st) == el[i]);
        REQUIRE(st.decoded == i % t);
    }
    for (std::uint64_t x = 0; x < s.universe(); ++x) {
        QueryStats st;
        const auto r = b.rank(x, &st);
        REQUIRE(r == oracle::rank(el, x));
        REQUIRE(st.decoded <= t - 1);
        if (r >= 1) {
            REQUIRE(b.select(r - 1) <= x);
        }
    }
}

} // namespace

TEST_SUITE("bsd") {

TEST_CASE("worked example layout") {
    const SortedSet s(8, {0, 2, 5, 7});
    const auto b = make_bsd(s);
    CHECK(b.run_length() == 3);
    CHECK(Vec(b.heads().begin(), b.heads().end()) == Vec{0, 7});
    // Run 0 stores the gaps 2 and 3 as delta(1) delta(3); run 1 stores nothing.
    CHECK(b.stream().bits.to_string() == "1" "0101");
    CHECK(b.stream().count == 2);
    CHECK(Vec(b.pointers().begin(), b.pointers().end()) == Vec{0, 5});
    CHECK(b.select(1) == 2);
    CHECK(b.select(3) == 7);
    CHECK(b.rank(5) == 3);
    CHECK(b.rank(4) == 2);
    CHECK(b.rank(6) == 3);
    CHECK(b.rank(7) == 4);
    CHECK(b.values() == Vec{0, 2, 5, 7});
    CHECK(b.head_width() == 3);
    CHECK(b.pointer_width() == 3);
    CHECK_THROWS_AS(b.select(4), range_error);
    CHECK_THROWS_AS(b.rank(8), range_error);
}

TEST_CASE("rank below the first element is zero") {
    const SortedSet s(100, {40, 41, 90});
    const auto b = make_bsd(s);
    CHECK(b.rank(0) == 0);
    CHECK(b.rank(39) == 0);
    CHECK(b.rank(99) == 3);
}

TEST_CASE("single run when n <= t") {
    const SortedSet s(1024, {3, 100, 101, 900});
    const auto b = make_bsd(s);
    CHECK(b.run_length() == 10);
    CHECK(b.heads().size() == 1);
    CHECK(b.stream().count == 3);
}

TEST_CASE("missing gap is reported") {
    auto cb = std::make_shared<const Codebook>(Codebook::from_symbols({1}));
    const Vec v{0, 1, 3};
    CHECK_THROWS_AS(Bsd(v, 8, cb), unknown_symbol);
}

TEST_CASE("exhaustive queries on small universes") {
    std::mt19937_64 rng(17);
    for (std::uint64_t u : {2, 3, 5, 8, 16, 33, 64}) {
        for (int rep = 0; rep < 200; ++rep) {
            const std::uint64_t n = 1 + rng() % u;
            const SortedSet s(u, oracle::random_subset(rng, u, n));
            sweep(s, make_bsd(s));
        }
    }
}

TEST_CASE("round trip and invariants on larger sets") {
    std::mt19937_64 rng(18);
    for (int rep = 0; rep < 30; ++rep) {
        const std::uint64_t u = 1u << 16;
        const std::uint64_t n = 1 + rng() % 5000;
        const SortedSet s(u, oracle::random_subset(rng, u, n));
        const auto b = make_bsd(s);
        REQUIRE(b.values() == Vec(s.elements().begin(), s.elements().end()));
        const std::uint64_t runs = (n + b.run_length() - 1) / b.run_length();
        REQUIRE(b.heads().size() == runs);
        REQUIRE(b.stream().count == n - runs);
        sweep(s, b);

        // Head and pointer space against 2 log u + log n + log log u + O(1) per run.
        const double lu = std::log2(static_cast<double>(u));
        const double per_run = 2 * lu + std::log2(static_cast<double>(n)) + std::log2(lu) + 4;
        REQUIRE(static_cast<double>(b.heads_bits() + b.pointers_bits()) <= per_run * static_cast<double>(runs));
    }
}

TEST_CASE("rebuilt from parts answers identically") {
    const SortedSet s(1000, {1, 5, 9, 10, 11, 200, 300, 301, 302, 303, 304, 999});
    const auto b = make_bsd(s);
    auto cb = std::make_shared<const Codebook>(b.codebook());
    const auto c = Bsd::from_parts(1000, 12, Vec(b.heads().begin(), b.heads().end()),
                                   Vec(b.pointers().begin(), b.pointers().end()), b.stream(), cb);
    CHECK(c == b);
    CHECK(c.values() == b.values());
    CHECK_THROWS_AS(Bsd::from_parts(1000, 13, Vec(b.heads().begin(), b.heads().end()),
                                    Vec(b.pointers().begin(), b.pointers().end()), b.stream(), cb),
                    format_error);
}

}
