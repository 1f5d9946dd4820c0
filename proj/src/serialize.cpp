#include "trigrid/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace trigrid {

namespace {

constexpr char kMagic[4] = {'I', 'N', 'S', '1'};
constexpr std::uint32_t kFlagTree = 1u << 0;
constexpr std::uint32_t kFlagFamily = 1u << 1;

void put_u32(std::ostream& out, std::uint32_t value) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  out.write(bytes, 4);
}

void put_u64(std::ostream& out, std::uint64_t value) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  out.write(bytes, 8);
}

void put_string(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void write_planes(std::ostream& out, const BitGrid& grid) {
  const IndexConfig& config = grid.config();
  const std::uint64_t cells =
      static_cast<std::uint64_t>(config.k()) * config.k() * config.k();
  const std::uint32_t row_bytes = (config.l() + 7) / 8;
  std::vector<char> row(row_bytes);
  for (int plane = 0; plane < 2; ++plane) {
    for (std::uint64_t code = 0; code < cells; ++code) {
      const TripletId t = triplet_from_code(code, config.k());
      std::fill(row.begin(), row.end(), 0);
      for (std::uint32_t w = 1; w <= config.l(); ++w) {
        const bool bit = plane == 0 ? grid.test_position(t, w) : grid.test_mark(t, w);
        if (bit) row[(w - 1) / 8] |= static_cast<char>(1 << ((w - 1) % 8));
      }
      out.write(row.data(), row_bytes);
    }
  }
}

void write_body(std::ostream& out, const TripletIndex& index) {
  write_planes(out, index.grid());

  put_u64(out, index.containers().size());
  for (const auto& [key, container] : index.containers()) {
    put_u32(out, static_cast<std::uint32_t>(key.triplet));
    put_u32(out, key.position);
    const std::vector<StoredKey> entries = container.snapshot();
    put_u64(out, entries.size());
    for (const StoredKey& entry : entries) {
      put_string(out, entry.head);
      put_string(out, entry.payload);
    }
  }

  put_u64(out, index.shortstore().entries().size());
  for (const StoredKey& entry : index.shortstore().entries()) {
    put_string(out, entry.head);
    put_string(out, entry.payload);
  }
}

void write_header(std::ostream& out, const IndexConfig& config,
                  ContainerVariant variant, std::uint64_t key_count, bool family) {
  out.write(kMagic, 4);
  put_u32(out, config.k());
  put_u32(out, config.l());
  put_u64(out, key_count);
  std::uint32_t flags = 0;
  if (variant == ContainerVariant::tree) flags |= kFlagTree;
  if (family) flags |= kFlagFamily;
  put_u32(out, flags);
  out.write(config.alphabet().data(),
            static_cast<std::streamsize>(config.alphabet().size()));
}

struct Cursor {
  const std::string& data;
  std::size_t off = 0;

  const char* take(std::size_t n) {
    if (data.size() - off < n) throw FormatError("truncated artifact");
    const char* p = data.data() + off;
    off += n;
    return p;
  }

  std::uint32_t u32() {
    const unsigned char* p = reinterpret_cast<const unsigned char*>(take(4));
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) |
           (static_cast<std::uint32_t>(p[3]) << 24);
  }

  std::uint64_t u64() {
    std::uint64_t value = 0;
    const unsigned char* p = reinterpret_cast<const unsigned char*>(take(8));
    for (int i = 0; i < 8; ++i) value |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return value;
  }

  std::string str() {
    const std::uint32_t n = u32();
    const char* p = take(n);
    return std::string(p, n);
  }
};

// Reads one plane's worth of set bits into the grid through the setter.
template <typename Set>
void read_plane(Cursor& in, const IndexConfig& config, Set&& set) {
  const std::uint64_t cells =
      static_cast<std::uint64_t>(config.k()) * config.k() * config.k();
  const std::uint32_t row_bytes = (config.l() + 7) / 8;
  for (std::uint64_t code = 0; code < cells; ++code) {
    const char* row = in.take(row_bytes);
    for (std::uint32_t byte = 0; byte < row_bytes; ++byte) {
      const unsigned char bits = static_cast<unsigned char>(row[byte]);
      if (!bits) continue;
      for (std::uint32_t bit = 0; bit < 8; ++bit) {
        if (!(bits & (1u << bit))) continue;
        const std::uint32_t w = byte * 8 + bit + 1;
        if (w > config.l()) throw FormatError("plane padding bits set");
        set(code, w);
      }
    }
  }
}

TripletIndex read_body(Cursor& in, const IndexConfig& config, ContainerVariant variant) {
  BitGrid grid(config);
  read_plane(in, config, [&](std::uint64_t code, std::uint32_t w) {
    grid.set_position(triplet_from_code(code, config.k()), w);
  });
  read_plane(in, config, [&](std::uint64_t code, std::uint32_t w) {
    const TripletId t = triplet_from_code(code, config.k());
    if (!grid.test_position(t, w)) throw FormatError("mark bit without position bit");
    grid.set_mark(t, w);
  });

  const std::uint64_t cells =
      static_cast<std::uint64_t>(config.k()) * config.k() * config.k();
  const std::uint64_t container_count = in.u64();
  std::vector<std::pair<ContainerKey, std::vector<StoredKey>>> containers;
  containers.reserve(container_count);
  for (std::uint64_t i = 0; i < container_count; ++i) {
    ContainerKey key;
    key.triplet = in.u32();
    key.position = in.u32();
    if (key.triplet >= cells || key.position == 0 || key.position > config.l()) {
      throw FormatError("container key out of range");
    }
    if (!containers.empty() && !(containers.back().first < key)) {
      throw FormatError("containers out of order");
    }
    const std::uint64_t entry_count = in.u64();
    std::vector<StoredKey> entries;
    entries.reserve(entry_count);
    for (std::uint64_t j = 0; j < entry_count; ++j) {
      StoredKey entry;
      entry.head = in.str();
      entry.payload = in.str();
      entries.push_back(std::move(entry));
    }
    containers.emplace_back(key, std::move(entries));
  }

  const std::uint64_t short_count = in.u64();
  std::vector<StoredKey> short_entries;
  short_entries.reserve(short_count);
  for (std::uint64_t i = 0; i < short_count; ++i) {
    StoredKey entry;
    entry.head = in.str();
    entry.payload = in.str();
    short_entries.push_back(std::move(entry));
  }

  try {
    return TripletIndex::restore(config, variant, std::move(grid), containers,
                                 short_entries);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("inconsistent artifact: ") + e.what());
  }
}

}  // namespace

void save_index(std::ostream& out, const TripletIndex& index) {
  write_header(out, index.config(), index.variant(), index.key_count(), false);
  write_body(out, index);
}

void save_family(std::ostream& out, const ShiftedFamily& family) {
  write_header(out, family.config(), family.variant(), family.base().key_count(), true);
  write_body(out, family.base());
  put_u32(out, family.config().l());
  put_u32(out, 0);
  write_body(out, family.reverse_structure().inner());
  for (std::uint32_t i = 1; i <= family.shifted_count(); ++i) {
    put_u32(out, i);
    write_body(out, family.shifted(i).inner());
  }
}

LoadedArtifact load_artifact(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string data = buffer.str();
  Cursor cursor{data};

  const char* magic = cursor.take(4);
  if (!std::equal(magic, magic + 4, kMagic)) throw FormatError("bad magic");
  const std::uint32_t k = cursor.u32();
  const std::uint32_t l = cursor.u32();
  const std::uint64_t key_count = cursor.u64();
  const std::uint32_t flags = cursor.u32();
  if (flags & ~(kFlagTree | kFlagFamily)) throw FormatError("unknown flags");
  const ContainerVariant variant =
      (flags & kFlagTree) ? ContainerVariant::tree : ContainerVariant::list;
  const std::string alphabet(cursor.take(k), k);

  IndexConfig config = [&] {
    try {
      return IndexConfig(alphabet, l);
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("bad header: ") + e.what());
    }
  }();

  LoadedArtifact artifact;
  TripletIndex base = read_body(cursor, config, variant);
  if (base.key_count() != key_count) throw FormatError("key count mismatch");

  if (flags & kFlagFamily) {
    if (cursor.u32() != l) throw FormatError("wrong structure count");
    if (cursor.u32() != 0) throw FormatError("structures out of order");
    TripletIndex reverse = read_body(cursor, config, variant);
    std::vector<TripletIndex> shifted;
    shifted.reserve(l - 1);
    for (std::uint32_t i = 1; i < l; ++i) {
      if (cursor.u32() != i) throw FormatError("structures out of order");
      shifted.push_back(read_body(cursor, config, variant));
    }
    try {
      artifact.family = ShiftedFamily::restore(std::move(base), std::move(reverse),
                                               std::move(shifted));
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("inconsistent family: ") + e.what());
    }
    artifact.is_family = true;
  } else {
    artifact.index = std::move(base);
  }

  if (cursor.off != data.size()) throw FormatError("trailing bytes");
  return artifact;
}

void save_index_at(const std::string& path, const TripletIndex& index) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open artifact for writing: " + path);
  save_index(out, index);
  out.flush();
  if (!out) throw FormatError("failed writing artifact: " + path);
}

void save_family_at(const std::string& path, const ShiftedFamily& family) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open artifact for writing: " + path);
  save_family(out, family);
  out.flush();
  if (!out) throw FormatError("failed writing artifact: " + path);
}

LoadedArtifact load_artifact_at(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open artifact: " + path);
  return load_artifact(in);
}

}  // namespace trigrid
