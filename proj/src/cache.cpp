#include "rkit/cache.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "rkit/error.hpp"

namespace rkit {

namespace {

void put_le(std::vector<unsigned char>& buf, u64 v, int bytes) {
  for (int i = 0; i < bytes; ++i) buf.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(std::vector<unsigned char> bytes) : bytes_(std::move(bytes)) {}

  u64 take(int n) {
    if (bytes_.size() - pos_ < static_cast<std::size_t>(n)) {
      throw Error(Errc::CorruptCache,
                  "cache truncated at byte " + std::to_string(bytes_.size()), bytes_.size());
    }
    u64 v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<u64>(bytes_[pos_ + i]) << (8 * i);
    pos_ += n;
    return v;
  }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  const unsigned char* data() const { return bytes_.data(); }

 private:
  std::vector<unsigned char> bytes_;
  std::size_t pos_ = 0;
};

[[noreturn]] void corrupt(const std::string& what, u64 offset) {
  throw Error(Errc::CorruptCache, what + " at byte " + std::to_string(offset), offset);
}

}  // namespace

void cache_write(const DerivedSequence& seq, const std::filesystem::path& path) {
  if (seq.level < 0 || seq.level > 0xffff) {
    throw Error(Errc::InvalidArgument, "level does not fit the cache header");
  }
  std::vector<unsigned char> buf;
  buf.reserve(kCacheHeaderSize + 8 * seq.elements.size());
  buf.insert(buf.end(), std::begin(kCacheMagic), std::end(kCacheMagic));
  put_le(buf, kCacheVersion, 2);
  put_le(buf, static_cast<u64>(seq.level), 2);
  put_le(buf, seq.source_limit, 8);
  put_le(buf, seq.certified_count, 8);
  put_le(buf, seq.elements.size(), 8);
  for (u64 v : seq.elements) put_le(buf, v, 8);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error(Errc::IoError, "write failed: " + path.string());
}

DerivedSequence cache_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  Reader r(std::vector<unsigned char>(std::istreambuf_iterator<char>(in), {}));

  if (r.remaining() < sizeof kCacheMagic) corrupt("cache truncated", r.remaining());
  if (std::memcmp(r.data(), kCacheMagic, sizeof kCacheMagic) != 0) corrupt("bad magic", 0);
  r.take(4);
  if (r.take(2) != kCacheVersion) corrupt("unsupported version", 4);

  DerivedSequence seq;
  seq.level = static_cast<int>(r.take(2));
  seq.source_limit = r.take(8);
  seq.certified_count = r.take(8);
  const u64 count = r.take(8);
  if (seq.certified_count > count) corrupt("certified_count exceeds element_count", 16);
  if (count > r.remaining() / 8) corrupt("cache truncated", r.pos() + r.remaining());

  seq.elements.reserve(count);
  for (u64 i = 0; i < count; ++i) {
    const std::size_t at = r.pos();
    const u64 v = r.take(8);
    if (!seq.elements.empty() && v <= seq.elements.back()) corrupt("elements not increasing", at);
    seq.elements.push_back(v);
  }
  if (r.remaining() != 0) corrupt("trailing data", r.pos());
  seq.heuristic = seq.level != 1 && seq.level != 2;
  return seq;
}

std::filesystem::path default_cache_dir() {
  const char* dir = std::getenv("RKIT_CACHE_DIR");
  return dir ? std::filesystem::path(dir) : std::filesystem::path();
}

std::filesystem::path cache_file_name(const std::filesystem::path& dir, int level, u64 limit) {
  return dir / ("level" + std::to_string(level) + "_limit" + std::to_string(limit) + ".rksq");
}

}  // namespace rkit
