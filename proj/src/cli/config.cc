// Copyright 2026 The nlcnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlcnot/cli/config.h"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <map>

#include "CLI11.hpp"

namespace nlc::cli {

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::Single:
            return "single";
        case Mode::MonteCarlo:
            return "montecarlo";
        case Mode::Purify:
            return "purify";
        case Mode::Validate:
            return "validate";
        case Mode::Exact:
            return "exact";
    }
    return "unknown";
}

std::string_view to_string(Format format) {
    return format == Format::Json ? "json" : "csv";
}

UsageError::UsageError(std::string flag, const std::string &message)
    : std::runtime_error(flag + ": " + message), flag_(std::move(flag)) {
}

ChannelSpec RunConfig::channel() const {
    return ChannelSpec::from_alpha(alpha);
}

GateConfig RunConfig::gate_config() const {
    GateConfig g;
    g.control = QubitInput{control[0], control[1]};
    g.target = QubitInput{target[0], target[1]};
    g.channel = channel();
    g.corrector = corrector;
    g.max_attempts = max_attempts;
    return g;
}

namespace {

double parse_real(const std::string &flag, const std::string &text) {
    errno = 0;
    char *end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno != 0 || !std::isfinite(v)) {
        throw UsageError(flag, "'" + text + "' is not a real number");
    }
    return v;
}

void parse_pair(const std::string &flag, const std::string &text, double out[2]) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw UsageError(flag, "expected two comma-separated reals, got '" + text + "'");
    }
    double x = parse_real(flag, text.substr(0, comma));
    double y = parse_real(flag, text.substr(comma + 1));
    double n = std::hypot(x, y);
    if (n == 0) {
        throw UsageError(flag, "amplitudes must not both be zero");
    }
    out[0] = x / n;
    out[1] = y / n;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string> &arguments) {
    RunConfig cfg;
    CLI::App app{"Probabilistic nonlocal C-NOT simulator", "nlcnot"};

    std::string alpha_text;
    std::string control_text;
    std::string target_text;
    std::string corrector_text = "cuo";
    std::string mode_text = "single";
    std::string format_text = "json";
    long long trials = 1;
    long long max_attempts = 64;
    std::string trace_text;

    app.add_option("--alpha", alpha_text, "Larger Schmidt coefficient of the shared e-bit, in [1/sqrt(2), 1)");
    app.add_option("--control", control_text, "Control qubit amplitudes a,b (default 0.7071,0.7071)");
    app.add_option("--target", target_text, "Target qubit amplitudes c,d (default 1,0)");
    app.add_option("--corrector", corrector_text, "Corrector unit: cuo | povm | orth");
    app.add_option("--trials", trials, "Number of trials");
    app.add_option("--seed", cfg.seed, "Root seed");
    app.add_option("--mode", mode_text, "single | montecarlo | purify | validate | exact");
    app.add_option("--format", format_text, "json | csv");
    app.add_option("--max-attempts", max_attempts, "Attempts per gate before giving up");
    app.add_option("--trace", trace_text, "Write the event log (line-delimited JSON) to this path");

    std::vector<std::string> reversed(arguments.rbegin(), arguments.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError &e) {
        std::string what = e.what();
        std::string flag = "arguments";
        for (const char *f : {"--alpha", "--control", "--target", "--corrector", "--trials", "--seed", "--mode",
                              "--format", "--max-attempts", "--trace"}) {
            if (what.find(f) != std::string::npos) {
                flag = f;
                break;
            }
        }
        throw UsageError(flag, what);
    }

    if (!alpha_text.empty()) {
        cfg.alpha = parse_real("--alpha", alpha_text);
        if (cfg.alpha < M_SQRT1_2 - ChannelSpec::kPerfectTol || cfg.alpha >= 1) {
            throw UsageError("--alpha", "must lie in [1/sqrt(2), 1) so that alpha >= beta > 0, got " + alpha_text);
        }
    }
    if (!control_text.empty()) {
        parse_pair("--control", control_text, cfg.control);
    }
    if (!target_text.empty()) {
        parse_pair("--target", target_text, cfg.target);
    }

    static const std::map<std::string, CorrectorKind> correctors = {
        {"cuo", CorrectorKind::Cuo}, {"povm", CorrectorKind::PovmLiteral}, {"orth", CorrectorKind::Orthogonal}};
    static const std::map<std::string, Mode> modes = {
        {"single", Mode::Single},     {"montecarlo", Mode::MonteCarlo}, {"purify", Mode::Purify},
        {"validate", Mode::Validate}, {"exact", Mode::Exact}};
    static const std::map<std::string, Format> formats = {{"json", Format::Json}, {"csv", Format::Csv}};

    if (auto it = correctors.find(corrector_text); it != correctors.end()) {
        cfg.corrector = it->second;
    } else {
        throw UsageError("--corrector", "expected cuo, povm or orth, got '" + corrector_text + "'");
    }
    if (auto it = modes.find(mode_text); it != modes.end()) {
        cfg.mode = it->second;
    } else {
        throw UsageError("--mode", "expected single, montecarlo, purify, validate or exact, got '" + mode_text + "'");
    }
    if (auto it = formats.find(format_text); it != formats.end()) {
        cfg.format = it->second;
    } else {
        throw UsageError("--format", "expected json or csv, got '" + format_text + "'");
    }
    if (trials < 1) {
        throw UsageError("--trials", "must be at least 1");
    }
    cfg.trials = static_cast<std::uint64_t>(trials);
    if (max_attempts < 1 || max_attempts > 1'000'000) {
        throw UsageError("--max-attempts", "must lie in [1, 1000000]");
    }
    cfg.max_attempts = static_cast<std::uint32_t>(max_attempts);
    if (!trace_text.empty()) {
        cfg.trace_path = trace_text;
    }
    return cfg;
}

}  // namespace nlc::cli
