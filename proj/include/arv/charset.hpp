#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace arv {

// Character-set variants: the 62 alphanumeric ASCII bytes, optionally
// extended with exactly one extra byte ('#', '/' or '\'').
enum class Variant : uint8_t { Alnum = 0, Hash, Slash, Tick };

constexpr uint8_t kHashByte = 0x23;
constexpr uint8_t kSlashByte = 0x2F;
constexpr uint8_t kTickByte = 0x27;

constexpr bool is_alnum_byte(uint8_t b) {
  return (b >= '0' && b <= '9') || (b >= 'A' && b <= 'Z') ||
         (b >= 'a' && b <= 'z');
}

struct Charset {
  Variant variant;
  std::array<bool, 256> allowed{};

  static Charset of(Variant v) {
    Charset cs;
    cs.variant = v;
    for (int b = 0; b < 256; ++b) cs.allowed[b] = is_alnum_byte(uint8_t(b));
    switch (v) {
      case Variant::Alnum: break;
      case Variant::Hash: cs.allowed[kHashByte] = true; break;
      case Variant::Slash: cs.allowed[kSlashByte] = true; break;
      case Variant::Tick: cs.allowed[kTickByte] = true; break;
    }
    return cs;
  }

  bool contains(uint8_t b) const { return allowed[b]; }

  bool contains_all(std::span<const uint8_t> bytes) const {
    for (uint8_t b : bytes)
      if (!allowed[b]) return false;
    return true;
  }

  // Allowed byte values in ascending order.
  std::string bytes() const {
    std::string out;
    for (int b = 0; b < 256; ++b)
      if (allowed[b]) out.push_back(char(b));
    return out;
  }

  size_t size() const {
    size_t n = 0;
    for (bool a : allowed) n += a;
    return n;
  }
};

const char* variant_name(Variant v);
bool variant_from_name(std::string_view name, Variant& out);

inline bool is_charset_valid(std::span<const uint8_t> bytes, const Charset& cs) {
  return cs.contains_all(bytes);
}

}  // namespace arv
