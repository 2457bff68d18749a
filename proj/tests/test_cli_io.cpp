#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "rkit/bfile.hpp"
#include "rkit/cache.hpp"
#include "rkit/cli.hpp"
#include "rkit/derivation.hpp"
#include "rkit/error.hpp"
#include "rkit/report_io.hpp"
#include "rkit/verification.hpp"

using namespace rkit;
namespace fs = std::filesystem;

namespace {

const fs::path kData = RKIT_TEST_DATA;

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("rkit_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::vector<unsigned char> bytes_of(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_bytes(const fs::path& p, const std::vector<unsigned char>& b) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
}

Errc read_error(const fs::path& p, u64* detail = nullptr) {
  try {
    cache_read(p);
  } catch (const Error& e) {
    if (detail) *detail = e.detail();
    return e.code();
  }
  FAIL("cache_read did not throw");
  return Errc::InvalidArgument;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace

TEST_CASE("cache round trip of the first 50 level-2 terms") {
  const auto seq = derived_ramanujan_primes(10000, 50);
  REQUIRE(seq.elements.size() == 50);
  REQUIRE_FALSE(seq.truncated);
  const auto path = scratch_dir() / "l2.rksq";
  cache_write(seq, path);
  CHECK(cache_read(path) == seq);
  CHECK(fs::file_size(path) == kCacheHeaderSize + 8 * 50);
}

TEST_CASE("cache header layout is little-endian and byte-stable") {
  DerivedSequence seq;
  seq.level = 2;
  seq.elements = {11, 41, 0x0102030405060708ull};
  seq.certified_count = 2;
  seq.source_limit = 0x1122;
  const auto a = scratch_dir() / "a.rksq";
  const auto b = scratch_dir() / "b.rksq";
  cache_write(seq, a);
  cache_write(seq, b);
  const auto bytes = bytes_of(a);
  CHECK(bytes == bytes_of(b));
  REQUIRE(bytes.size() == 32 + 24);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "RKSQ");
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 0);
  CHECK(bytes[6] == 2);
  CHECK(bytes[8] == 0x22);
  CHECK(bytes[9] == 0x11);
  CHECK(bytes[16] == 2);
  CHECK(bytes[24] == 3);
  CHECK(bytes[32] == 11);
  CHECK(bytes[48] == 0x08);
  CHECK(bytes[55] == 0x01);
  const auto back = cache_read(a);
  CHECK(back.elements == seq.elements);
  CHECK(back.certified_count == 2);
  CHECK_FALSE(back.heuristic);
}

TEST_CASE("corrupt caches are rejected with the byte offset") {
  const auto seq = ramanujan_primes(1000, 20);
  const auto good = scratch_dir() / "good.rksq";
  cache_write(seq, good);
  const auto bytes = bytes_of(good);
  const auto bad = scratch_dir() / "bad.rksq";
  u64 detail = 0;

  auto truncated = bytes;
  truncated.resize(bytes.size() - 3);
  write_bytes(bad, truncated);
  CHECK(read_error(bad, &detail) == Errc::CorruptCache);
  CHECK(detail == truncated.size());

  auto short_header = bytes;
  short_header.resize(20);
  write_bytes(bad, short_header);
  CHECK(read_error(bad, &detail) == Errc::CorruptCache);
  CHECK(detail == 20);

  auto magic = bytes;
  std::fill(magic.begin(), magic.begin() + 4, 'X');
  write_bytes(bad, magic);
  CHECK(read_error(bad, &detail) == Errc::CorruptCache);
  CHECK(detail == 0);

  auto version = bytes;
  version[4] = 2;
  write_bytes(bad, version);
  CHECK(read_error(bad, &detail) == Errc::CorruptCache);
  CHECK(detail == 4);

  auto order = bytes;
  std::swap_ranges(order.begin() + 40, order.begin() + 48, order.begin() + 48);
  write_bytes(bad, order);
  CHECK(read_error(bad, &detail) == Errc::CorruptCache);
  CHECK(detail == 48);

  auto certified = bytes;
  certified[16] = 0xff;
  write_bytes(bad, certified);
  CHECK(read_error(bad, &detail) == Errc::CorruptCache);
  CHECK(detail == 16);

  auto trailing = bytes;
  trailing.push_back(0);
  write_bytes(bad, trailing);
  CHECK(read_error(bad, &detail) == Errc::CorruptCache);
  CHECK(detail == bytes.size());

  CHECK(read_error(scratch_dir() / "missing.rksq") == Errc::IoError);
}

TEST_CASE("b-file parsing") {
  std::istringstream in("# comment\n\n0 7\n1 8\n  2\t9  \n");
  const auto b = parse_bfile(in);
  CHECK(b.first_index == 0);
  CHECK(b.values == std::vector<u64>{7, 8, 9});
  CHECK(b.last_index() == 2);

  auto parse_error_line = [](const std::string& text) -> u64 {
    std::istringstream s(text);
    try {
      parse_bfile(s);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
      return e.detail();
    }
    return 0;
  };
  CHECK(parse_error_line("1 2\n2 3\n4 5\n") == 3);
  CHECK(parse_error_line("# x\n1 2\n2 x3\n") == 3);
  CHECK(parse_error_line("1 2 3\n") == 1);
  CHECK(parse_error_line("1\n") == 1);
  CHECK(parse_error_line("-1 2\n") == 1);
}

TEST_CASE("crosscheck against the A104272 and A192820 prefixes") {
  const auto a104272 = read_bfile(kData / "b104272.txt");
  const auto a192820 = read_bfile(kData / "b192820.txt");
  REQUIRE(a104272.values.size() == 1000);
  REQUIRE(a192820.values.size() == 300);
  CHECK(std::vector<u64>(a104272.values.begin(), a104272.values.begin() + 6) ==
        std::vector<u64>{2, 11, 17, 29, 41, 47});
  CHECK(std::vector<u64>(a192820.values.begin(), a192820.values.begin() + 5) ==
        std::vector<u64>{11, 41, 59, 97, 149});

  const auto l1 = ramanujan_primes(100000, ~u64{0});
  const auto r1 = crosscheck(l1, a104272);
  CHECK(r1.ok());
  CHECK(r1.compared == 1000);

  const auto l2 = derived_ramanujan_primes(100000, ~u64{0});
  const auto r2 = crosscheck(l2, a192820);
  CHECK(r2.ok());
  CHECK(r2.compared == 300);

  const auto six = crosscheck(l1, a104272, 6);
  CHECK(six.compared == 6);
  CHECK(six.last_index == 6);
}

TEST_CASE("crosscheck never compares uncertified terms") {
  const auto a104272 = read_bfile(kData / "b104272.txt");
  const auto small = ramanujan_primes(1000, ~u64{0});
  const auto r = crosscheck(small, a104272);
  CHECK(r.ok());
  CHECK(r.compared == small.certified_count);
  CHECK(r.compared < 1000);
}

TEST_CASE("a corrupted b-file line is reported at its index") {
  std::ifstream in(kData / "b104272.txt");
  std::ostringstream edited;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("37 ", 0) == 0) line = "37 999999";
    edited << line << '\n';
  }
  std::istringstream s(edited.str());
  const auto b = parse_bfile(s);
  const auto l1 = ramanujan_primes(100000, ~u64{0});
  const auto r = crosscheck(l1, b);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].index == 37);
  CHECK(r.mismatches[0].expected == 999999);
  CHECK(r.mismatches[0].actual == l1.elements[36]);
}

TEST_CASE("CSV and JSON carry identical field values") {
  const VerificationContext ctx(200000);
  std::vector<VerificationReport> reports = {
      verify_theorem5(ctx, 300), verify_theorem4(ctx, 1000),
      verify_lemma3_equivalence(ctx, 3, 3)};
  // A label with a comma exercises CSV quoting.
  reports[2].counterexamples = {"k=1,l=2", "say \"x\""};

  std::ostringstream csv;
  write_csv(csv, reports);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == kCsvHeader);
  const auto json = to_json(std::span<const VerificationReport>(reports));
  REQUIRE(json.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    REQUIRE(std::getline(lines, line));
    const auto f = split_csv(line);
    REQUIRE(f.size() == 6);
    const auto& j = json[i];
    CHECK(f[0] == j["case"].get<std::string>());
    CHECK(f[1] == format_number(j["domain_lo"].get<double>()));
    CHECK(f[2] == format_number(j["domain_hi"].get<double>()));
    std::string joined;
    for (const auto& c : j["counterexamples"]) {
      if (!joined.empty()) joined += ';';
      joined += c.get<std::string>();
    }
    CHECK(f[3] == joined);
    CHECK(f[4] == format_number(j["min_margin"].get<double>()));
    CHECK(f[5] == format_number(j["elapsed_s"].get<double>()));
    // Exact round trip through text.
    CHECK(std::stod(f[4]) == reports[i].min_margin);
  }
}

TEST_CASE("report bodies serialise identically across runs") {
  const VerificationContext ctx(200000);
  auto a = to_json(verify_eq36(ctx, 500));
  auto b = to_json(verify_eq36(ctx, 500));
  a.erase("elapsed_s");
  b.erase("elapsed_s");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("cli: reference examples") {
  const auto rep = cli({"represent", "123"});
  CHECK(rep.code == kExitOk);
  CHECK(rep.out == "123 = 71+41+11\n");

  const auto pair = cli({"pair", "7"});
  CHECK(pair.code == kExitDomain);
  CHECK(pair.err.find("infeasible") != std::string::npos);

  const auto v = cli({"verify", "T5", "--n-max", "100"});
  CHECK(v.code == kExitOk);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j["case"] == "T5");
  CHECK(j["counterexamples"].empty());
  CHECK(j["domain_hi"] == 100);
}

TEST_CASE("cli: other subcommands") {
  CHECK(cli({"sieve", "--limit", "100"}).out == "pi(100) = 25\nlargest prime 97\n");
  CHECK(cli({"unrep"}).out == "122\n");
  CHECK(cli({"cram", "--c", "3/4", "--n", "1", "--limit", "10000"}).out == "R_{3/4,1} = 11\n");
  CHECK(cli({"represent", "122"}).code == kExitDomain);

  const auto p = cli({"pair", "5"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("1+10=11") != std::string::npos);

  const auto t4 = cli({"verify", "T4", "--x-max", "1000", "--format", "csv"});
  CHECK(t4.code == kExitCounterexample);
  CHECK(t4.out.rfind(kCsvHeader, 0) == 0);

  const auto cc = cli({"crosscheck", "--level", "2", "--bfile", (kData / "b192820.txt").string(),
                       "--limit", "100000"});
  CHECK(cc.code == kExitOk);
  CHECK(cc.out == "compared 300 terms (n = 1..300), 0 mismatches\n");
}

TEST_CASE("cli: seq with a cache file") {
  const auto path = (scratch_dir() / "seq.rksq").string();
  fs::remove(path);
  const auto first = cli({"seq", "--level", "2", "--limit", "10000", "--terms", "5", "--cache", path});
  CHECK(first.code == kExitOk);
  CHECK(first.out.find("1 11\n2 41\n3 59\n4 97\n5 149\n") != std::string::npos);
  CHECK(fs::exists(path));
  const auto second = cli({"seq", "--level", "2", "--limit", "10000", "--terms", "5", "--cache", path});
  CHECK(second.out.find("from cache") != std::string::npos);
  CHECK(second.out.find("5 149\n") != std::string::npos);
}

TEST_CASE("cli: RKIT_CACHE_DIR is the default cache location") {
  const auto dir = scratch_dir() / "env";
  fs::create_directories(dir);
  ::setenv("RKIT_CACHE_DIR", dir.c_str(), 1);
  CHECK(cli({"seq", "--limit", "1000", "--terms", "3"}).code == kExitOk);
  ::unsetenv("RKIT_CACHE_DIR");
  CHECK(fs::exists(cache_file_name(dir, 1, 1000)));
}

TEST_CASE("cli: usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"pair"}).code == kExitUsage);
  CHECK(cli({"verify", "Q7"}).code == kExitUsage);
  CHECK(cli({"verify", "T5", "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"cram", "--c", "3:4", "--n", "1"}).code == kExitUsage);
  CHECK(cli({"cram", "--c", "5/4", "--n", "1"}).code == kExitUsage);
  const auto help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("cli: domain errors") {
  const auto c = cli({"cram", "--c", "1/2", "--n", "500", "--limit", "1000"});
  CHECK(c.code == kExitDomain);
  CHECK(c.err.find("limit") != std::string::npos);
  CHECK(cli({"crosscheck", "--bfile", "/nonexistent/b.txt"}).code == kExitDomain);
}
