#pragma once

#define FOCKLAT_VERSION "0.1.0"

namespace focklat {

inline const char* version() { return FOCKLAT_VERSION; }

} // namespace focklat
