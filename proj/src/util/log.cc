// util/log.cc

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

#include "util/log.h"

#include <cstdlib>
#include <iostream>

namespace daptain {

LogLevel VerbosityLevel() {
  static LogLevel level = [] {
    const char* env = std::getenv("DAPTAIN_LOG");
    if (env == nullptr) return LogLevel::kInfo;
    std::string v(env);
    if (v == "error") return LogLevel::kError;
    if (v == "debug") return LogLevel::kDebug;
    return LogLevel::kInfo;
  }();
  return level;
}

LogMessage::LogMessage(LogLevel level, const char* tag)
    : enabled_(level <= VerbosityLevel()) {
  if (enabled_) ss_ << tag << ": ";
}

LogMessage::~LogMessage() {
  if (enabled_) std::cerr << ss_.str() << std::endl;
}

}  // namespace daptain
