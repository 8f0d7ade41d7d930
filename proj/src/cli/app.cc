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

#include "nlcnot/cli/app.h"

#include <fstream>
#include <memory>

#include "nlcnot/cli/config.h"
#include "nlcnot/cli/report.h"
#include "nlcnot/error.h"

namespace nlc::cli {

namespace {

int run_mode(const RunConfig &cfg, std::ostream &out, std::ostream *trace) {
    TraceSink sink;
    if (trace) {
        sink = [trace](std::uint64_t trial, std::span<const TraceEvent> events) {
            write_trace(*trace, events, trial);
        };
    }
    switch (cfg.mode) {
        case Mode::Single: {
            SeededDraws draws(cfg.seed, 0);
            RunResult result = run_nonlocal_cnot(cfg.gate_config(), draws);
            if (trace) {
                write_trace(*trace, result.trace);
            }
            out << emit_report(cfg, result);
            return result.succeeded ? kExitOk : kExitMaxAttempts;
        }
        case Mode::MonteCarlo:
            out << emit_report(cfg, monte_carlo_experiment(cfg.gate_config(), cfg.trials, cfg.seed, sink));
            return kExitOk;
        case Mode::Purify:
            out << emit_report(cfg, purification_experiment(cfg.channel(), cfg.corrector, cfg.trials, cfg.seed, sink));
            return kExitOk;
        case Mode::Validate:
            out << emit_report(cfg, run_validation(cfg.channel()));
            return kExitOk;
        case Mode::Exact:
            out << emit_report(cfg, run_exact(cfg));
            return kExitOk;
    }
    return kExitRuntimeError;
}

}  // namespace

int run(const std::vector<std::string> &arguments, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    try {
        cfg = parse_config(arguments);
    } catch (const HelpRequested &h) {
        out << h.text;
        return kExitOk;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        std::unique_ptr<std::ofstream> trace;
        if (cfg.trace_path) {
            trace = std::make_unique<std::ofstream>(*cfg.trace_path, std::ios::binary);
            if (!*trace) {
                err << "error: --trace: cannot open '" << *cfg.trace_path << "'\n";
                return kExitUsage;
            }
        }
        int status = run_mode(cfg, out, trace.get());
        if (status == kExitMaxAttempts) {
            err << "error: no success after " << cfg.max_attempts << " attempts\n";
        }
        return status;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntimeError;
    }
}

}  // namespace nlc::cli
