#ifndef ZETA_VERSION_HPP
#define ZETA_VERSION_HPP

namespace zeta {
inline constexpr const char* kVersion = "1.0.0";
}

#endif
