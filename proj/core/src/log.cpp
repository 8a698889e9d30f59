#include "fracpme/log.hpp"

#include <atomic>
#include <cstdarg>
#include <cstdlib>
#include <cstring>

namespace fracpme::log {

namespace {

Level parse_env() {
    const char* env = std::getenv("FRACPME_LOG");
    if (env == nullptr) return Level::Error;
    if (std::strcmp(env, "debug") == 0) return Level::Debug;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    return Level::Error;
}

std::atomic<Level>& state() {
    static std::atomic<Level> lvl{parse_env()};
    return lvl;
}

}  // namespace

Level level() { return state().load(std::memory_order_relaxed); }
void set_level(Level lvl) { state().store(lvl, std::memory_order_relaxed); }
bool enabled(Level lvl) { return static_cast<int>(lvl) <= static_cast<int>(level()); }

namespace detail {

void vprint(Level lvl, const char* fmt, ...) {
    if (!enabled(lvl)) return;
    const char* tag = lvl == Level::Error ? "error" : (lvl == Level::Info ? "info" : "debug");
    std::fprintf(stderr, "[fracpme:%s] ", tag);
    va_list args;
    va_start(args, fmt);
    std::vfprintf(stderr, fmt, args);
    va_end(args);
    std::fputc('\n', stderr);
}

}  // namespace detail

}  // namespace fracpme::log
