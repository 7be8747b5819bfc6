#include "btes/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace btes {
namespace {

LogLevel env_level() {
  const char* env = std::getenv("BTES_LOG");
  if (env == nullptr) return LogLevel::Warn;
  const std::string v(env);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  return LogLevel::Warn;
}

}  // namespace

bool log_enabled(LogLevel level) {
  static const LogLevel threshold = env_level();
  return static_cast<int>(level) <= static_cast<int>(threshold);
}

void log_message(LogLevel level, const std::string& msg) {
  if (!log_enabled(level)) return;
  const char* tag = level == LogLevel::Warn ? "warn" : level == LogLevel::Info ? "info" : "debug";
  std::cerr << "[btes:" << tag << "] " << msg << '\n';
}

}  // namespace btes
