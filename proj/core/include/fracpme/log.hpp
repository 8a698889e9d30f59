#pragma once

#include <cstdio>
#include <utility>

namespace fracpme::log {

enum class Level { Error = 0, Info = 1, Debug = 2 };

// Current verbosity; initialised once from the FRACPME_LOG environment
// variable (error | info | debug), default "error".
Level level();
void set_level(Level lvl);

bool enabled(Level lvl);

namespace detail {
void vprint(Level lvl, const char* fmt, ...);
}

template <typename... Args>
void error(const char* fmt, Args&&... args) {
    detail::vprint(Level::Error, fmt, std::forward<Args>(args)...);
}
template <typename... Args>
void info(const char* fmt, Args&&... args) {
    detail::vprint(Level::Info, fmt, std::forward<Args>(args)...);
}
template <typename... Args>
void debug(const char* fmt, Args&&... args) {
    detail::vprint(Level::Debug, fmt, std::forward<Args>(args)...);
}

}  // namespace fracpme::log
