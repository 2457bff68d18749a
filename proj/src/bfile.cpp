#include "rkit/bfile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>
#include <string_view>

#include "rkit/error.hpp"

namespace rkit {

namespace {

constexpr std::string_view kSpace = " \t\r";

std::string_view next_token(std::string_view& line) {
  const auto start = line.find_first_not_of(kSpace);
  if (start == std::string_view::npos) {
    line = {};
    return {};
  }
  line.remove_prefix(start);
  const auto end = std::min(line.find_first_of(kSpace), line.size());
  const auto token = line.substr(0, end);
  line.remove_prefix(end);
  return token;
}

u64 parse_u64(std::string_view token, u64 line_no) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": bad integer '" + std::string(token) + "'",
                line_no);
  }
  return v;
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile b;
  std::string raw;
  u64 line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    const auto first = line.find_first_not_of(kSpace);
    if (first == std::string_view::npos || line[first] == '#') continue;

    const auto index_tok = next_token(line);
    const auto value_tok = next_token(line);
    if (value_tok.empty() || !next_token(line).empty()) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'index value'", line_no);
    }
    const u64 index = parse_u64(index_tok, line_no);
    const u64 value = parse_u64(value_tok, line_no);
    if (b.values.empty()) {
      b.first_index = index;
    } else if (index != b.last_index() + 1) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                      " does not follow " + std::to_string(b.last_index()),
                  line_no);
    }
    b.values.push_back(value);
  }
  return b;
}

BFile read_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return parse_bfile(in);
}

CrosscheckReport crosscheck(const DerivedSequence& seq, const BFile& bfile, u64 max_n) {
  CrosscheckReport rep;
  if (bfile.values.empty()) return rep;
  const u64 lo = std::max<u64>(bfile.first_index, 1);
  const u64 hi = std::min({bfile.last_index(), seq.certified_count, max_n});
  rep.first_index = lo;
  for (u64 n = lo; n <= hi; ++n) {
    const u64 expected = bfile.values[n - bfile.first_index];
    const u64 actual = seq.elements[n - 1];
    ++rep.compared;
    rep.last_index = n;
    if (expected != actual) rep.mismatches.push_back({n, expected, actual});
  }
  return rep;
}

}  // namespace rkit
