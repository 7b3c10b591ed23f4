#include <doctest.h>

#include <sstream>

#include "cgap/error.hpp"
#include "cgap/set_io.hpp"

using namespace cgap;

namespace {

std::string message_of(const std::string& text) {
    std::istringstream in(text);
    try {
        read_set(in);
    } catch (const cgap::error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_SUITE("set_io") {

TEST_CASE("text round trip") {
    const SortedSet s(8, {0, 2, 5, 7});
    std::ostringstream out;
    write_set(out, s);
    CHECK(out.str() == "8 4\n0\n2\n5\n7\n");
    std::istringstream in(out.str());
    CHECK(read_set(in) == s);
}

TEST_CASE("text tolerates blank trailing lines and spaces") {
    std::istringstream in("10 2\n 3 \n9\r\n\n");
    CHECK(read_set(in) == SortedSet(10, {3, 9}));
}

TEST_CASE("binary round trip") {
    const SortedSet s(1ull << 40, {1, 1ull << 39, (1ull << 40) - 1});
    std::ostringstream out(std::ios::binary);
    write_set(out, s, SetFormat::binary);
    CHECK(out.str().size() == 8 * 5);
    std::istringstream in(out.str(), std::ios::binary);
    CHECK(read_set(in, SetFormat::binary) == s);
}

TEST_CASE("errors name the offending line") {
    CHECK(message_of("8 3\n1\n1\n4\n").find("line 3") != std::string::npos);
    CHECK(message_of("8 3\n1\n1\n4\n").find("duplicate") != std::string::npos);
    CHECK(message_of("8 3\n1\n5\n4\n").find("line 4") != std::string::npos);
    CHECK(message_of("8 2\n1\nx\n").find("line 3") != std::string::npos);
    CHECK(message_of("8 2\n1\n8\n").find("line 3") != std::string::npos);
    CHECK(message_of("8 3\n1\n2\n").find("expected 3") != std::string::npos);
    CHECK(message_of("8 1\n1\n2\n").find("line 3") != std::string::npos);
    CHECK(message_of("").find("line 1") != std::string::npos);

    std::istringstream dup("8 2\n4\n4\n");
    CHECK_THROWS_AS(read_set(dup), validation_error);
    std::istringstream junk("8 1\n-4\n");
    CHECK_THROWS_AS(read_set(junk), format_error);
    std::istringstream big("4 5\n");
    CHECK_THROWS_AS(read_set(big), validation_error);
}

TEST_CASE("binary errors") {
    std::istringstream shortin(std::string("\x08\0\0\0", 4), std::ios::binary);
    CHECK_THROWS_AS(read_set(shortin, SetFormat::binary), format_error);
}

}
