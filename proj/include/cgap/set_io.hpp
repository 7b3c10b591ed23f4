#pragma once

#include <filesystem>
#include <iosfwd>

#include "cgap/gapcore.hpp"

namespace cgap {

// Text: a "u n" header line, then n strictly increasing integers, one per line.
// Binary: little-endian u64 u, u64 n, then n u64 elements.
enum class SetFormat { text, binary };

// Parse failures throw format_error and ordering failures validation_error; both
// name the offending line (text) or element index (binary).
SortedSet read_set(std::istream& in, SetFormat format = SetFormat::text);
void write_set(std::ostream& out, const SortedSet& s, SetFormat format = SetFormat::text);

SortedSet load_set(const std::filesystem::path& path, SetFormat format = SetFormat::text);
void save_set(const std::filesystem::path& path, const SortedSet& s, SetFormat format = SetFormat::text);

} // namespace cgap
