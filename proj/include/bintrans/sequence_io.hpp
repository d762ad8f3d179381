#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bintrans/rational.hpp"
#include "bintrans/sequence.hpp"

namespace bintrans {

/// Raised when a sequence file has a malformed term; line is 1-based.
class SequenceParseError : public std::runtime_error {
  public:
    SequenceParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Strict rational literal: optional sign, decimal integer, optionally
/// followed by "/" and a positive decimal integer. Throws
/// std::invalid_argument on anything else.
Rational parse_rational_literal(const std::string& text);

/// Reads a sequence file: one term per line, blank lines and lines starting
/// with '#' ignored, first data line is index 0. Throws SequenceParseError
/// (with the offending line number) on a malformed term and when no data
/// line is present.
std::vector<Rational> read_sequence_file(std::istream& in);

/// Writes one term per line. Entries below valid_from are rendered as the
/// placeholder glyph: "·" normally, "_" in machine mode.
void write_sequence_lines(std::ostream& out, const Sequence& s, bool machine = false);

}  // namespace bintrans
