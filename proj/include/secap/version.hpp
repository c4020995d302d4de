#ifndef SECAP_VERSION_HPP
#define SECAP_VERSION_HPP

namespace secap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace secap

#endif
