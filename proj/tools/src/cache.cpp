#include "grpwild_cli/cache.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grpwild/error.hpp"

namespace grpwild::cli {

namespace {

constexpr char kMagic[4] = {'G', 'W', 'C', '1'};

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

std::uint64_t get_u64(const std::string& in, std::size_t& pos) {
  if (pos + 8 > in.size()) throw Error("truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= std::uint64_t{static_cast<unsigned char>(in[pos + i])} << (8 * i);
  }
  pos += 8;
  return v;
}

}  // namespace

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t seed) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string cache_key(std::string_view expr, std::string_view kind,
                      std::uint64_t config_hash) {
  std::uint64_t h = fnv1a(expr.data(), expr.size());
  h = fnv1a(kind.data(), kind.size(), h ^ 0xff);
  h = fnv1a(&config_hash, sizeof config_hash, h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(kind) + "-" + buf;
}

Cache::Cache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {}

std::optional<Cache> Cache::from_config(const std::optional<std::string>& dir,
                                        std::string version) {
  if (dir && !dir->empty()) return Cache(*dir, std::move(version));
  if (const char* env = std::getenv("GRPWILD_CACHE"); env && *env) {
    return Cache(env, std::move(version));
  }
  return std::nullopt;
}

std::filesystem::path Cache::path_for(std::string_view key) const {
  return dir_ / (std::string(key) + ".bin");
}

void Cache::store(std::string_view key, const std::vector<std::uint32_t>& payload) const {
  std::filesystem::create_directories(dir_);
  std::string out(kMagic, sizeof kMagic);
  put_u64(out, version_.size());
  out += version_;
  put_u64(out, payload.size());
  const std::size_t body = out.size();
  out.resize(body + payload.size() * 4);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    for (int b = 0; b < 4; ++b) out[body + 4 * i + b] = static_cast<char>(payload[i] >> (8 * b));
  }
  put_u64(out, fnv1a(out.data(), out.size()));

  const std::filesystem::path target = path_for(key);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write cache file " + tmp.string());
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::optional<std::vector<std::uint32_t>> Cache::load(std::string_view key) const {
  const std::filesystem::path path = path_for(key);
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string in = ss.str();
  try {
    if (in.size() < sizeof kMagic + 8 || std::memcmp(in.data(), kMagic, sizeof kMagic) != 0) {
      throw Error("bad header");
    }
    std::size_t pos = sizeof kMagic;
    const std::uint64_t vlen = get_u64(in, pos);
    if (vlen > in.size() - pos) throw Error("truncated");
    const std::string version = in.substr(pos, vlen);
    pos += vlen;
    const std::uint64_t count = get_u64(in, pos);
    if (count > (in.size() - pos) / 4) throw Error("truncated");
    const std::size_t body = pos;
    pos += count * 4;
    const std::size_t checked = pos;
    const std::uint64_t sum = get_u64(in, pos);
    if (pos != in.size()) throw Error("trailing bytes");
    if (sum != fnv1a(in.data(), checked)) throw Error("checksum mismatch");
    if (version != version_) return std::nullopt;
    std::vector<std::uint32_t> payload(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::uint32_t v = 0;
      for (int b = 0; b < 4; ++b) {
        v |= std::uint32_t{static_cast<unsigned char>(in[body + 4 * i + b])} << (8 * b);
      }
      payload[i] = v;
    }
    return payload;
  } catch (const Error& e) {
    std::cerr << "warning: ignoring corrupt cache entry " << path.string() << " ("
              << e.what() << ")\n";
    return std::nullopt;
  }
}

ConjPartition partition_from_ids(std::vector<std::uint32_t> class_of) {
  ConjPartition p;
  std::uint32_t count = 0;
  for (std::uint32_t c : class_of) count = std::max(count, c + 1);
  p.classes.resize(count);
  for (Elem x = 0; x < class_of.size(); ++x) p.classes[class_of[x]].push_back(x);
  for (const auto& c : p.classes) {
    if (c.empty()) throw Error("class ids are not contiguous");
  }
  p.class_of = std::move(class_of);
  return p;
}

void Cache::store_partition(std::string_view key, const ConjPartition& p) const {
  store(key, p.class_of);
}

std::optional<ConjPartition> Cache::load_partition(std::string_view key) const {
  auto ids = load(key);
  if (!ids) return std::nullopt;
  try {
    return partition_from_ids(std::move(*ids));
  } catch (const Error& e) {
    std::cerr << "warning: ignoring corrupt cache entry " << path_for(key).string() << " ("
              << e.what() << ")\n";
    return std::nullopt;
  }
}

void Cache::store_table(std::string_view key, const TableGroup& g) const {
  std::vector<std::uint32_t> t(g.table().begin(), g.table().end());
  store(key, t);
}

std::optional<std::vector<std::uint32_t>> Cache::load_table(std::string_view key) const {
  return load(key);
}

}  // namespace grpwild::cli
