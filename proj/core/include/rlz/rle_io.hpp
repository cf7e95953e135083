// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rlz/rle.hpp"

namespace rlz {

// Malformed serialized input or a failed file operation.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text form of a byte-alphabet run sequence: one run per line,
// "<byte decimal><TAB><exponent decimal>". Round-trips exactly.
[[nodiscard]] std::string write_rle_text(const RleString<unsigned char>& s);

// Parses the text form. Throws io_error on malformed lines, byte values
// outside 0..255, nonpositive exponents, or adjacent runs with equal bytes.
[[nodiscard]] RleString<unsigned char> read_rle_text(std::string_view text);

}  // namespace rlz
