// Copyright 2026 The qmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Line-oriented event-log files:
 *
 *     # qmeas event log v1
 *     # generator: mt19937_64
 *     # seed: 42
 *     # config_hash: fnv1a64:3b7c0e1f2a9d8c41
 *     # labels: ++ +- -+ --
 *     # count: 3
 *     +-
 *     --
 *     -+
 */

#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "qmeas/sampler.hpp"

namespace qmeas::cli {

/// `log.config_descriptor` is written as the config_hash header value.
void write_event_log(std::ostream &os, const EventLog &log);
void write_event_log_file(const std::string &path, const EventLog &log);

/// Throws IoError for unreadable files and malformed content.
EventLog read_event_log(std::istream &is);
EventLog read_event_log_file(const std::string &path);

} // namespace qmeas::cli
