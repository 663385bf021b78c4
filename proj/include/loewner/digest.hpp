#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "loewner/sym_matrix.hpp"

namespace loewner {

/// FNV-1a 64-bit over a canonical payload string; enough to key reports for
/// reproducible aggregation (not cryptographic).
inline uint64_t fnv1a64(const std::string& payload) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g,", v);
  out += buf;
}

inline void append_matrix(std::string& out, const SymMatrix& m) {
  out += "[" + std::to_string(m.dim()) + ":";
  for (double v : m.data())
    append_number(out, v);
  out += "]";
}

} // namespace loewner
