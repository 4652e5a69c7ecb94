#pragma once

#include <cstdint>
#include <string>

namespace focklat::cli {

/// "%.17g": enough digits to round-trip any double.
std::string format_double(double value);

/// FNV-1a 64-bit digest as 16 hex characters.
std::string fnv1a64_hex(const std::string& bytes);

/// Writes through a temp file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

/// Writes to `path` when non-empty, otherwise to stdout.
void emit(const std::string& path, const std::string& content);

} // namespace focklat::cli
