#ifndef EHCUT_VERSION_HPP
#define EHCUT_VERSION_HPP

namespace ehcut {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ehcut

#endif
