#include "twist/word_io.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

namespace twist {

std::string render_word_text(const Word& w) { return w.render() + "\n"; }

void write_word_text(std::ostream& out, const Word& w) {
  out << render_word_text(w);
}

void write_word_binary(std::ostream& out, const Word& w) {
  if (w.alphabet().size() > 256)
    throw Error("binary format holds one byte per symbol; alphabet too large");
  std::uint64_t n = w.size();
  char header[8];
  for (int i = 0; i < 8; ++i)
    header[i] = static_cast<char>((n >> (8 * i)) & 0xff);
  out.write(header, 8);
  std::string bytes(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i)
    bytes[i] = static_cast<char>(static_cast<unsigned char>(w[i]));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void write_word_file(const std::string& path, const Word& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  if (w.size() > kBinaryThreshold)
    write_word_binary(out, w);
  else
    write_word_text(out, w);
  out.flush();
  if (!out) throw Error("failed writing '" + path + "'");
}

Word parse_word_text(const std::string& text, const Alphabet& alphabet) {
  std::string_view body(text);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
    body.remove_suffix(1);
  if (body.find('\n') != std::string_view::npos)
    throw Error("word text must be a single line");
  return Word::parse(body, alphabet);
}

Word read_word_file(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string raw = buf.str();

  if (raw.size() >= 8) {
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i)
      n |= static_cast<std::uint64_t>(static_cast<unsigned char>(raw[static_cast<std::size_t>(i)]))
           << (8 * i);
    if (n == raw.size() - 8) {
      std::vector<Symbol> symbols;
      symbols.reserve(raw.size() - 8);
      for (std::size_t i = 8; i < raw.size(); ++i) {
        Symbol s = static_cast<Symbol>(static_cast<unsigned char>(raw[i]));
        if (!alphabet.contains(s))
          throw Error("binary word symbol out of alphabet range");
        symbols.push_back(s);
      }
      return Word(alphabet, std::move(symbols));
    }
  }
  return parse_word_text(raw, alphabet);
}

}  // namespace twist
