#include "matula/bfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "matula/error.hpp"

namespace matula {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_integer_token(std::string_view tok) {
  std::size_t i = (tok.front() == '-' || tok.front() == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
  }
  return true;
}

}  // namespace

BFile BFile::parse(std::string_view text) {
  BFile file;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);

    // Split into whitespace-separated tokens, remembering their offsets.
    std::vector<std::pair<std::size_t, std::string_view>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (is_blank(line[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      tokens.emplace_back(line_start + i, line.substr(i, j - i));
      i = j;
    }

    if (!tokens.empty() && tokens.front().second.front() != '#') {
      if (tokens.size() != 2) throw ParseError("expected \"index value\"", tokens.front().first);
      const auto& [index_at, index_tok] = tokens[0];
      const auto& [value_at, value_tok] = tokens[1];
      if (!is_integer_token(index_tok)) throw ParseError("malformed index", index_at);
      if (!is_integer_token(value_tok)) throw ParseError("malformed value", value_at);

      std::int64_t index = 0;
      const char* first = index_tok.data() + (index_tok.front() == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, index_tok.data() + index_tok.size(), index);
      if (ec != std::errc()) throw ParseError("index out of range", index_at);
      if (!file.entries.empty() && index <= file.entries.back().index) {
        throw ParseError("indices must be strictly increasing", index_at);
      }
      std::string digits(value_tok.front() == '+' ? value_tok.substr(1) : value_tok);
      file.entries.push_back({index, BigInt(digits)});
    }
    line_start = line_end + 1;
  }
  return file;
}

BFile BFile::read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open b-file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string BFile::to_string() const {
  std::string out;
  for (const auto& e : entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.str();
    out += '\n';
  }
  return out;
}

BFileVerification verify_bfile(const BFile& file, const std::function<BigInt(std::int64_t)>& compute,
                               std::optional<std::size_t> limit) {
  BFileVerification result;
  const std::size_t count = std::min(file.entries.size(), limit.value_or(file.entries.size()));
  for (std::size_t i = 0; i < count; ++i) {
    const auto& entry = file.entries[i];
    BigInt actual = compute(entry.index);
    ++result.checked;
    if (actual != entry.value) {
      result.first_mismatch = BFileMismatch{entry.index, entry.value, std::move(actual)};
      break;
    }
  }
  return result;
}

}  // namespace matula
