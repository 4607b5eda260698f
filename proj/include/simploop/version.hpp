#ifndef SIMPLOOP_VERSION_HPP
#define SIMPLOOP_VERSION_HPP

namespace simploop {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
