// util/log.h

// Copyright 2026  Daptain Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DAPTAIN_UTIL_LOG_H_
#define DAPTAIN_UTIL_LOG_H_

#include <sstream>
#include <string>

namespace daptain {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

// Level is read once from the DAPTAIN_LOG environment variable
// (error|info|debug, default info).
LogLevel VerbosityLevel();

// Messages at or below the configured level are written to stderr on
// destruction, one line each.
class LogMessage {
 public:
  LogMessage(LogLevel level, const char* tag);
  ~LogMessage();
  std::ostream& stream() { return ss_; }

 private:
  bool enabled_;
  std::ostringstream ss_;
};

}  // namespace daptain

#define DAPTAIN_ERROR \
  ::daptain::LogMessage(::daptain::LogLevel::kError, "ERROR").stream()
#define DAPTAIN_WARN \
  ::daptain::LogMessage(::daptain::LogLevel::kError, "WARNING").stream()
#define DAPTAIN_INFO \
  ::daptain::LogMessage(::daptain::LogLevel::kInfo, "INFO").stream()
#define DAPTAIN_DEBUG \
  ::daptain::LogMessage(::daptain::LogLevel::kDebug, "DEBUG").stream()

#endif  // DAPTAIN_UTIL_LOG_H_
