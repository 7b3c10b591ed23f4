#include "cgap/set_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "cgap/error.hpp"

namespace cgap {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
        throw format_error("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                           std::string(tok) + "'");
    }
    return v;
}

SortedSet read_text(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    if (!std::getline(in, raw)) {
        throw format_error("line 1: missing \"u n\" header");
    }
    ++line;
    const std::string header = trim(raw);
    const auto sp = header.find_first_of(" \t");
    if (sp == std::string::npos) {
        throw format_error("line 1: header must be \"u n\"");
    }
    const std::uint64_t u = parse_u64(std::string_view(header).substr(0, sp), line);
    const std::uint64_t n = parse_u64(trim(header.substr(sp)), line);
    if (u == 0) {
        throw format_error("line 1: universe must be positive");
    }
    if (n > u) {
        throw validation_error("line 1: n = " + std::to_string(n) + " exceeds u = " + std::to_string(u));
    }

    std::vector<std::uint64_t> el;
    el.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 1u << 24)));
    while (el.size() < n) {
        if (!std::getline(in, raw)) {
            throw format_error("line " + std::to_string(line + 1) + ": expected " + std::to_string(n) +
                               " elements, found " + std::to_string(el.size()));
        }
        ++line;
        const std::string tok = trim(raw);
        const std::uint64_t x = parse_u64(tok, line);
        if (x >= u) {
            throw validation_error("line " + std::to_string(line) + ": element " + std::to_string(x) +
                                   " is not below u = " + std::to_string(u));
        }
        if (!el.empty() && x <= el.back()) {
            throw validation_error("line " + std::to_string(line) + ": element " + std::to_string(x) +
                                   (x == el.back() ? " is a duplicate" : " is out of order"));
        }
        el.push_back(x);
    }
    while (std::getline(in, raw)) {
        ++line;
        if (!trim(raw).empty()) {
            throw format_error("line " + std::to_string(line) + ": more elements than the header declares");
        }
    }
    return SortedSet(u, std::move(el));
}

std::uint64_t get_u64(std::istream& in, const char* what) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8)) {
        throw format_error(std::string("binary set truncated while reading ") + what);
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= std::uint64_t{b[i]} << (8 * i);
    }
    return v;
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) {
        b[i] = static_cast<char>(v >> (8 * i));
    }
    out.write(b, 8);
}

SortedSet read_binary(std::istream& in) {
    const std::uint64_t u = get_u64(in, "u");
    const std::uint64_t n = get_u64(in, "n");
    if (u == 0 || n > u) {
        throw format_error("binary set header has invalid u/n");
    }
    std::vector<std::uint64_t> el;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t x = get_u64(in, "an element");
        if (x >= u || (!el.empty() && x <= el.back())) {
            throw validation_error("element index " + std::to_string(i) + " (" + std::to_string(x) +
                                   ") breaks strict order or the universe bound");
        }
        el.push_back(x);
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw format_error("trailing bytes after the declared elements");
    }
    return SortedSet(u, std::move(el));
}

} // namespace

SortedSet read_set(std::istream& in, SetFormat format) {
    return format == SetFormat::text ? read_text(in) : read_binary(in);
}

void write_set(std::ostream& out, const SortedSet& s, SetFormat format) {
    if (format == SetFormat::text) {
        out << s.universe() << ' ' << s.size() << '\n';
        for (std::uint64_t x : s.elements()) {
            out << x << '\n';
        }
        return;
    }
    put_u64(out, s.universe());
    put_u64(out, s.size());
    for (std::uint64_t x : s.elements()) {
        put_u64(out, x);
    }
}

SortedSet load_set(const std::filesystem::path& path, SetFormat format) {
    std::ifstream in(path, format == SetFormat::binary ? std::ios::binary : std::ios::in);
    if (!in) {
        throw format_error("cannot open " + path.string());
    }
    return read_set(in, format);
}

void save_set(const std::filesystem::path& path, const SortedSet& s, SetFormat format) {
    std::ofstream out(path, format == SetFormat::binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!out) {
        throw format_error("cannot open " + path.string() + " for writing");
    }
    write_set(out, s, format);
}

} // namespace cgap
