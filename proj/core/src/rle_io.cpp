// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#include "rlz/rle_io.hpp"

#include <charconv>
#include <vector>

namespace rlz {

std::string write_rle_text(const RleString<unsigned char>& s) {
  std::string out;
  for (const auto& f : s.runs()) {
    out += std::to_string(unsigned(f.ch));
    out += '\t';
    out += std::to_string(f.exp);
    out += '\n';
  }
  return out;
}

namespace {

std::uint64_t parse_number(std::string_view field, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw io_error("rle text line " + std::to_string(line_no) + ": bad " + what);
  return value;
}

}  // namespace

RleString<unsigned char> read_rle_text(std::string_view text) {
  std::vector<RlFactor<unsigned char>> runs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) {
      if (text.empty()) break;  // tolerate one trailing newline
      throw io_error("rle text line " + std::to_string(line_no) + ": empty line");
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw io_error("rle text line " + std::to_string(line_no) + ": expected <byte>\\t<exp>");
    const std::uint64_t byte = parse_number(line.substr(0, tab), line_no, "byte value");
    const std::uint64_t exp = parse_number(line.substr(tab + 1), line_no, "exponent");
    if (byte > 255)
      throw io_error("rle text line " + std::to_string(line_no) + ": byte value above 255");
    if (exp < 1)
      throw io_error("rle text line " + std::to_string(line_no) + ": exponent must be positive");
    if (!runs.empty() && runs.back().ch == static_cast<unsigned char>(byte))
      throw io_error("rle text line " + std::to_string(line_no) +
                     ": adjacent runs with equal byte values");
    runs.push_back({static_cast<unsigned char>(byte), exp});
  }
  return RleString<unsigned char>(std::move(runs));
}

}  // namespace rlz
