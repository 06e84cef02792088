#pragma once

#include <cstdint>
#include <string>

namespace ehl {

// Shortest round-trip decimal representation of a double. Keeps CSV bodies
// byte-stable across runs.
std::string fmt_double(double v);

// FNV-1a 64-bit content digest, hex encoded.
std::string fnv1a64_hex(const std::string& bytes);

void write_text_file(const std::string& path, const std::string& body);
std::string read_text_file(const std::string& path);

}  // namespace ehl
