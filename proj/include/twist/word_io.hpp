#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "twist/word.hpp"

namespace twist {

// Above this length words are written in the binary format (8-byte
// little-endian length header, then one byte per symbol).
inline constexpr std::size_t kBinaryThreshold = std::size_t{1} << 20;

// Single line of lowercase letters, newline-terminated. Alphabet size must
// be at most 26.
std::string render_word_text(const Word& w);
void write_word_text(std::ostream& out, const Word& w);

// Length header + raw symbol bytes; any alphabet size up to 256.
void write_word_binary(std::ostream& out, const Word& w);

// Text below the threshold, binary above it.
void write_word_file(const std::string& path, const Word& w);

// Reads either format, deciding by the length header: a binary file's first
// 8 bytes decode to exactly (file size - 8). Alphabet size must be supplied;
// symbols are validated against it.
Word read_word_file(const std::string& path, const Alphabet& alphabet);

Word parse_word_text(const std::string& text, const Alphabet& alphabet);

}  // namespace twist
