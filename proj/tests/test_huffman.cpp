#include <doctest.h>

#include <cmath>
#include <random>

#include "cgap/error.hpp"
#include "cgap/huffman.hpp"
#include "oracles.hpp"

using namespace cgap;

TEST_SUITE("huffman") {

TEST_CASE("worked example") {
    const std::vector<std::uint64_t> gaps{1, 2, 3, 2};
    const auto book = HuffmanBook::build(gaps);
    CHECK(book.length_of(2) == 1);
    CHECK(book.length_of(1) == 2);
    CHECK(book.length_of(3) == 2);
    CHECK(book.encoded_bits(gaps) == 6);
    const auto bits = huffman_encode(gaps, book);
    CHECK(bits.size() == 6);
    // Canonical order (length, value): 2 -> 0, 1 -> 10, 3 -> 11.
    CHECK(bits.to_string() == "10" "0" "11" "0");
    CHECK(huffman_decode(bits, book, 4) == gaps);
    CHECK_THROWS_AS(book.codeword(4), unknown_symbol);
}

TEST_CASE("single symbol uses one bit") {
    const std::vector<std::uint64_t> gaps(37, 5);
    const auto book = HuffmanBook::build(gaps);
    CHECK(book.size() == 1);
    const auto bits = huffman_encode(gaps, book);
    CHECK(bits.size() == 37);
    CHECK(huffman_decode(bits, book, 37) == gaps);
}

TEST_CASE("decode of a short stream fails") {
    const std::vector<std::uint64_t> gaps{1, 2, 3, 2};
    const auto book = HuffmanBook::build(gaps);
    const auto bits = huffman_encode(gaps, book);
    CHECK_THROWS_AS(huffman_decode(bits, book, 5), incomplete_code);
}

TEST_CASE("kraft equality, entropy bound and round trip") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 300; ++rep) {
        std::vector<std::uint64_t> gaps(1 + rng() % 3000);
        const int shape = rep % 3;
        std::geometric_distribution<int> geo(0.05 + 0.5 * (rng() % 100) / 100.0);
        for (auto& g : gaps) {
            if (shape == 0) {
                g = 1 + rng() % (1 + rng() % 200);
            } else if (shape == 1) {
                g = 1 + static_cast<std::uint64_t>(geo(rng));
            } else {
                g = (rng() % 10 == 0) ? 1 + rng() % 1000000 : 3;
            }
        }
        const auto book = HuffmanBook::build(gaps);
        const auto bits = huffman_encode(gaps, book);
        REQUIRE(huffman_decode(bits, book, gaps.size()) == gaps);
        REQUIRE(bits.size() == book.encoded_bits(gaps));
        if (book.size() >= 2) {
            long double kraft = 0;
            for (auto len : book.lengths()) {
                kraft += std::ldexp(1.0L, -static_cast<int>(len));
            }
            REQUIRE(kraft == doctest::Approx(1.0).epsilon(1e-12));
            const double nh = static_cast<double>(gaps.size()) * oracle::entropy(gaps);
            REQUIRE(static_cast<double>(bits.size()) >= nh - 1e-6);
            REQUIRE(static_cast<double>(bits.size()) <= nh + static_cast<double>(gaps.size()) + 1e-6);
        }
        // Canonical: lengths nondecreasing, values increasing within a length.
        for (std::size_t i = 1; i < book.size(); ++i) {
            REQUIRE(book.lengths()[i - 1] <= book.lengths()[i]);
            if (book.lengths()[i - 1] == book.lengths()[i]) {
                REQUIRE(book.symbols()[i - 1] < book.symbols()[i]);
                REQUIRE(book.codes()[i] == book.codes()[i - 1] + 1);
            }
        }
    }
}

TEST_CASE("serialized book size") {
    const std::vector<std::uint64_t> gaps{1, 2, 3, 2};
    const auto book = HuffmanBook::build(gaps);
    // 8 + 8 + two length counts of width_for(3) = 2 bits + 3 symbols of 2 bits
    CHECK(book.serialized_bits() == 8 + 8 + 2 * 2 + 3 * 2);
}

}
