#include "plan2bt/log.hpp"

#include <cstdlib>

namespace plan2bt::log {

Level threshold() {
  static Level level = [] {
    const char* env = std::getenv("PLAN2BT_LOG");
    if (env == nullptr) return Level::Warn;
    std::string v(env);
    if (v == "error") return Level::Error;
    if (v == "warn") return Level::Warn;
    if (v == "info") return Level::Info;
    if (v == "debug") return Level::Debug;
    return Level::Warn;
  }();
  return level;
}

void write(Level level, const std::string& message) {
  if (level > threshold()) return;
  const char* tag = level == Level::Error ? "error"
                    : level == Level::Warn ? "warn"
                    : level == Level::Info ? "info"
                                           : "debug";
  std::fprintf(stderr, "[plan2bt %s] %s\n", tag, message.c_str());
}

}  // namespace plan2bt::log
