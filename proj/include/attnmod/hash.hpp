#ifndef ATTNMOD_HASH_HPP
#define ATTNMOD_HASH_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace attnmod {

inline std::uint64_t fnv1a64(const void* data, std::size_t size,
                             std::uint64_t seed = 0xCBF29CE484222325ull) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

inline std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

std::uint64_t fnv1a64_file(const std::string& path);  // throws IoError

}  // namespace attnmod

#endif  // ATTNMOD_HASH_HPP
