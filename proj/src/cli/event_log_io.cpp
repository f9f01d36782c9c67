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

#include "qmeas/cli/event_log_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qmeas/errors.hpp"

namespace qmeas::cli {

namespace {

constexpr const char *kMagic = "# qmeas event log v1";

} // namespace

void write_event_log(std::ostream &os, const EventLog &log) {
    os << kMagic << '\n'
       << "# generator: " << log.generator << '\n'
       << "# seed: " << log.seed << '\n'
       << "# config_hash: " << log.config_descriptor << '\n'
       << "# labels:";
    for (const auto &l : log.label_set) {
        os << ' ' << l;
    }
    os << '\n' << "# count: " << log.count() << '\n';
    for (const auto k : log.events) {
        os << log.label_set[k] << '\n';
    }
}

void write_event_log_file(const std::string &path, const EventLog &log) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_event_log(out, log);
    out.flush();
    if (!out) {
        throw IoError("failed writing event log to '" + path + "'");
    }
}

EventLog read_event_log(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line != kMagic) {
        throw IoError("not an event log (bad magic line)");
    }
    std::map<std::string, std::string> header;
    while (is.peek() == '#') {
        std::getline(is, line);
        const auto colon = line.find(':');
        if (line.size() < 2 || colon == std::string::npos) {
            throw IoError("malformed header line '" + line + "'");
        }
        const std::string key = line.substr(2, colon - 2);
        std::string value = line.substr(colon + 1);
        if (!value.empty() && value.front() == ' ') {
            value.erase(0, 1);
        }
        header[key] = value;
    }
    for (const char *key : {"generator", "seed", "config_hash", "labels", "count"}) {
        if (!header.contains(key)) {
            throw IoError(std::string("event log header lacks '") + key + "'");
        }
    }

    EventLog log;
    log.generator = header["generator"];
    log.config_descriptor = header["config_hash"];
    std::size_t expected = 0;
    try {
        log.seed = std::stoull(header["seed"]);
        expected = std::stoull(header["count"]);
    } catch (const std::exception &) {
        throw IoError("event log header has a non-numeric seed or count");
    }
    std::istringstream labels(header["labels"]);
    std::map<std::string, std::uint32_t> index;
    for (std::string l; labels >> l;) {
        index[l] = static_cast<std::uint32_t>(log.label_set.size());
        log.label_set.push_back(l);
    }
    log.events.reserve(expected);
    while (std::getline(is, line)) {
        const auto it = index.find(line);
        if (it == index.end()) {
            throw IoError("event '" + line + "' is not in the label set");
        }
        log.events.push_back(it->second);
    }
    if (log.count() != expected) {
        throw IoError("event log declares " + std::to_string(expected) + " events but holds " +
                      std::to_string(log.count()));
    }
    return log;
}

EventLog read_event_log_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return read_event_log(in);
}

} // namespace qmeas::cli
