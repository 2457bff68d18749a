#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "rkit/derivation.hpp"

namespace rkit {

/// OEIS b-file: "index value" per line, '#' lines and blank lines ignored.
/// Indices must be consecutive; the first one is the base.
struct BFile {
  u64 first_index = 1;
  std::vector<u64> values;

  u64 last_index() const { return first_index + values.size() - 1; }
};

/// Throws ParseError (detail = 1-based line number).
BFile parse_bfile(std::istream& in);
/// Throws IoError if the file cannot be opened.
BFile read_bfile(const std::filesystem::path& path);

struct Mismatch {
  u64 index = 0;
  u64 expected = 0;  // b-file value
  u64 actual = 0;    // sequence value

  bool operator==(const Mismatch&) const = default;
};

struct CrosscheckReport {
  u64 compared = 0;
  u64 first_index = 0;
  u64 last_index = 0;  // last compared index, 0 if none
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares sequence term n (1-based) with b-file entry n for every n that
/// is present in the b-file, certified in the sequence and <= max_n.
CrosscheckReport crosscheck(const DerivedSequence& seq, const BFile& bfile,
                            u64 max_n = ~u64{0});

}  // namespace rkit
