#include <array>
#include <cstring>
#include <fstream>

#include "kfk/arith_sieve.hpp"
#include "kfk/errors.hpp"

// Layout: "KFKT", u16 version, u8 kind, u64 lo, u64 hi, then (hi - lo) u64 values.
// Every integer is little-endian.

namespace kfk {

namespace {

constexpr std::array<char, 4> kMagic = {'K', 'F', 'K', 'T'};
constexpr std::uint16_t kVersion = 1;

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>(static_cast<unsigned char>(value >> (8 * i)));
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw format_error("table cache truncated");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[i]) << (8 * i);
  return value;
}

}  // namespace

void write_table_cache(const FunctionTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint16_t>(out, kVersion);
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(table.kind()));
  put_le<std::uint64_t>(out, table.interval().lo);
  put_le<std::uint64_t>(out, table.interval().hi);
  for (const std::uint64_t v : table.values()) put_le<std::uint64_t>(out, v);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

FunctionTable read_table_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw format_error(path.string() + ": not a KFKT table cache");
  const auto version = get_le<std::uint16_t>(in);
  if (version != kVersion) {
    throw format_error(path.string() + ": unsupported cache version " + std::to_string(version));
  }
  const auto kind_code = get_le<std::uint8_t>(in);
  if (kind_code > static_cast<std::uint8_t>(FunctionKind::user)) {
    throw format_error(path.string() + ": unknown function kind code");
  }
  Interval interval{get_le<std::uint64_t>(in), get_le<std::uint64_t>(in)};
  try {
    validate(interval);
  } catch (const std::exception& e) {
    throw format_error(path.string() + ": invalid interval (" + e.what() + ")");
  }
  std::vector<std::uint64_t> values(interval.size());
  for (auto& v : values) v = get_le<std::uint64_t>(in);
  if (in.peek() != std::char_traits<char>::eof()) {
    throw format_error(path.string() + ": trailing bytes after table values");
  }
  return FunctionTable(static_cast<FunctionKind>(kind_code), interval, std::move(values));
}

}  // namespace kfk
