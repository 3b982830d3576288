#ifndef ATTNMOD_VERSION_HPP
#define ATTNMOD_VERSION_HPP

namespace attnmod {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace attnmod

#endif  // ATTNMOD_VERSION_HPP
