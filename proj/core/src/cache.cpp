#include "skw/cache.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "skw/error.hpp"

namespace skw {

namespace {

constexpr char kMagic[8] = {'S', 'K', 'W', 'C', 'A', 'C', 'H', 'E'};

std::uint64_t fnv1a(const std::string& data, std::size_t len) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void vec(const Vec& v) {
    u64(v.size());
    for (FieldElem x : v) u32(x.residue);
  }
  void mat(const Matrix& m) {
    u64(m.size());
    for (const Vec& row : m) vec(row);
  }
  void elem(const SklElem& e) {
    i32(e.degree);
    vec(e.coeffs);
  }
  std::string& data() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  Reader(const std::string& data, std::size_t end) : data_(data), end_(end) {}
  std::uint8_t u8() {
    if (pos_ >= end_) throw Error(Errc::CorruptCache, "cache file truncated");
    return static_cast<std::uint8_t>(data_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  // Guards allocations against garbage lengths.
  std::size_t length(std::size_t unit) {
    std::uint64_t n = u64();
    if (unit && n > (end_ - pos_) / unit) throw Error(Errc::CorruptCache, "cache length field out of range");
    return static_cast<std::size_t>(n);
  }
  Vec vec() {
    Vec v(length(4));
    for (FieldElem& x : v) x.residue = u32();
    return v;
  }
  Matrix mat() {
    Matrix m(length(8));
    for (Vec& row : m) row = vec();
    return m;
  }
  SklElem elem() {
    SklElem e;
    e.degree = i32();
    e.coeffs = vec();
    return e;
  }
  bool done() const { return pos_ == end_; }

 private:
  const std::string& data_;
  std::size_t end_;
  std::size_t pos_ = 0;
};

void write_key(Writer& w, const CacheKey& k) {
  w.u64(k.modulus);
  w.u64(k.a);
  w.u64(k.b);
  w.u64(k.c);
  w.i32(k.orient);
  w.i32(k.window_s);
  w.i32(k.window_b);
  w.u64(k.seed);
}

CacheKey read_key(Reader& r) {
  CacheKey k;
  k.modulus = r.u64();
  k.a = r.u64();
  k.b = r.u64();
  k.c = r.u64();
  k.orient = r.i32();
  k.window_s = r.i32();
  k.window_b = r.i32();
  k.seed = r.u64();
  return k;
}

}  // namespace

CacheKey cache_key(const SessionParams& params, const Curve& E) {
  return CacheKey{params.prime,         E.a().residue,    E.b().residue,    E.c().residue, E.orient(),
                  params.window_s,      params.window_b,  params.seed};
}

void save_cache(const std::string& path, const GradedAlgebraModel& model, const CacheKey& key) {
  GradedAlgebraModel::Parts p = model.parts();
  Writer w;
  w.data().append(kMagic, sizeof kMagic);
  w.u32(kCacheVersion);
  write_key(w, key);
  w.i32(p.window);
  w.u64(p.words.size());
  for (const auto& ws : p.words) {
    w.u64(ws.size());
    for (const Word& word : ws) {
      w.u64(word.size());
      for (auto letter : word) w.u8(letter);
    }
  }
  w.u64(p.reductions.size());
  for (const auto& m : p.reductions) w.mat(m);
  w.u64(p.tensors.size());
  for (const auto& row : p.tensors) {
    w.u64(row.size());
    for (const auto& t : row) w.vec(t);
  }
  w.elem(p.g);
  w.elem(p.g_formula);
  w.elem(p.g_corrected);
  w.u8(p.centre.formula_central);
  w.u8(p.centre.corrected_central);
  w.u64(p.centre.centre_dim);
  w.u8(p.centre.g_spans_centre);
  w.u8(static_cast<std::uint8_t>(p.centre.source));
  w.u64(p.projection.size());
  for (const auto& m : p.projection) w.mat(m);
  w.u64(fnv1a(w.data(), w.data().size()));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(w.data().data(), static_cast<std::streamsize>(w.data().size()));
  if (!out) throw Error(Errc::IoError, "cannot write cache file '" + path + "'");
}

CacheLoad load_cache(const std::string& path, const CacheKey& key) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.size() < sizeof kMagic + 4 + 8 || data.compare(0, sizeof kMagic, kMagic, sizeof kMagic) != 0) {
    throw Error(Errc::CorruptCache, "'" + path + "' is not a cache file or is truncated");
  }
  std::size_t body = data.size() - 8;
  std::size_t header = sizeof kMagic;
  std::uint64_t stored = 0;
  for (int i = 0; i < 8; ++i) stored |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[body + i])) << (8 * i);
  if (stored != fnv1a(data, body)) throw Error(Errc::CorruptCache, "cache checksum mismatch in '" + path + "'");
  std::string payload = data.substr(header, body - header);
  Reader r(payload, payload.size());
  std::uint32_t version = r.u32();
  if (version != kCacheVersion) {
    return {std::nullopt, "ignoring cache '" + path + "': format version " + std::to_string(version)};
  }
  if (!(read_key(r) == key)) return {std::nullopt, "ignoring cache '" + path + "': built for other parameters"};

  GradedAlgebraModel::Parts p;
  p.modulus = key.modulus;
  p.window = r.i32();
  p.words.resize(r.length(8));
  for (auto& ws : p.words) {
    ws.resize(r.length(8));
    for (Word& word : ws) {
      word.resize(r.length(1));
      for (auto& letter : word) letter = r.u8();
    }
  }
  p.reductions.resize(r.length(8));
  for (auto& m : p.reductions) m = r.mat();
  p.tensors.resize(r.length(8));
  for (auto& row : p.tensors) {
    row.resize(r.length(8));
    for (auto& t : row) t = r.vec();
  }
  p.g = r.elem();
  p.g_formula = r.elem();
  p.g_corrected = r.elem();
  p.centre.formula_central = r.u8() != 0;
  p.centre.corrected_central = r.u8() != 0;
  p.centre.centre_dim = r.u64();
  p.centre.g_spans_centre = r.u8() != 0;
  std::uint8_t src = r.u8();
  if (src > 2) throw Error(Errc::CorruptCache, "bad centre source in cache");
  p.centre.source = static_cast<GSource>(src);
  p.projection.resize(r.length(8));
  for (auto& m : p.projection) m = r.mat();
  if (!r.done()) throw Error(Errc::CorruptCache, "trailing bytes in cache");
  p.a = FieldElem{static_cast<std::uint32_t>(key.a)};
  p.b = FieldElem{static_cast<std::uint32_t>(key.b)};
  p.c = FieldElem{static_cast<std::uint32_t>(key.c)};
  if (p.window != key.window_s) throw Error(Errc::CorruptCache, "cache window disagrees with its header");
  return {GradedAlgebraModel::from_parts(p), {}};
}

}  // namespace skw
