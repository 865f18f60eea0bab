#pragma once

#define RINGCOUL_VERSION "0.1.0"

namespace ringcoul {
inline constexpr const char* version() { return RINGCOUL_VERSION; }
}
