#pragma once

#include <stdexcept>
#include <string>

namespace cgap {

// Root of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition on an argument does not hold (n > u, empty set where n >= 1 is needed, ...).
class domain_error : public error {
public:
    using error::error;
};

// Query position or index outside the valid range.
class range_error : public error {
public:
    using error::error;
};

// Input set is not strictly increasing, has duplicates or exceeds the universe.
class validation_error : public error {
public:
    using error::error;
};

// Gap stream whose gaps do not add up to the universe.
class malformed_stream : public error {
public:
    using error::error;
};

// Gap value with no codeword in the codebook.
class unknown_symbol : public error {
public:
    using error::error;
};

// Codeword runs past the end of the bit sequence.
class incomplete_code : public error {
public:
    using error::error;
};

// Unreadable set file or index container.
class format_error : public error {
public:
    using error::error;
};

} // namespace cgap
