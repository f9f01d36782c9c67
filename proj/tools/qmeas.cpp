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

// Command-line front end. Exit codes: 0 success, 2 config error,
// 3 numeric invariant violation, 4 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qmeas/cli/runners.hpp"
#include "qmeas/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct Options {
    std::string config;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> n;
};

int run(const std::string &command, const Options &opt) {
    using namespace qmeas::cli;
    ExperimentSpec spec = load_spec(opt.config);
    const ExperimentKind expected = parse_kind(command);
    if (spec.kind != expected) {
        throw qmeas::ConfigError("kind", "config is for '" + to_string(spec.kind) +
                                             "' but the subcommand is '" + command + "'");
    }
    if (opt.out) {
        spec.output = *opt.out;
    }
    if (opt.format) {
        spec.format = *opt.format;
    }
    if (opt.seed) {
        spec.seed = *opt.seed;
    }
    if (opt.n) {
        spec.n_events = *opt.n;
    }
    validate_spec(spec);

    if (spec.kind == ExperimentKind::Sample) {
        const auto result = run_sample(spec);
        write_table(std::cout, result.summary, spec);
        return 0;
    }
    const Table table = run_experiment(spec);
    if (spec.output.empty()) {
        write_table(std::cout, table, spec);
        return 0;
    }
    std::ofstream file(spec.output, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw qmeas::IoError("cannot open '" + spec.output + "' for writing");
    }
    write_table(file, table, spec);
    if (!file) {
        throw qmeas::IoError("failed writing '" + spec.output + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Joint nonideal polarization measurements, Martens entropies and "
                 "generalized EPR-Bell experiments"};
    app.require_subcommand(1);

    Options opt;
    const auto add = [&](const std::string &name, const std::string &help) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config, "JSON experiment config")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", opt.out,
                        "output path (table, or the event log for 'sample')");
        sub->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", opt.seed, "generator seed (sample)");
        sub->add_option("--n", opt.n, "number of events (sample)");
        return sub;
    };
    add("whichway", "joint distribution, nonideality matrices and Martens check");
    add("martens-sweep", "J(lambda) versus J(mu) over a gamma grid");
    add("bell", "single-run quadrivariate Bell experiment and its CHSH value");
    add("aspect", "four corner experiments combined into one CHSH value");
    add("sample", "Monte Carlo event log and empirical summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const qmeas::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qmeas::IoError &e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const qmeas::Error &e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
}
