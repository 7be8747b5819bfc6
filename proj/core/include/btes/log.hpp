#pragma once

#include <string>

namespace btes {

// Verbosity from the BTES_LOG environment variable: "debug" > "info" >
// default (warnings only).
enum class LogLevel { Warn = 0, Info = 1, Debug = 2 };

bool log_enabled(LogLevel level);
void log_message(LogLevel level, const std::string& msg);

}  // namespace btes
