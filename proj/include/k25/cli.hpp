#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "k25/theorem.hpp"

namespace k25::cli {

/// Test seams: when set, replaces the classifier used by `verify`.
struct Hooks {
    ClassifyFn classify;
};

/// Runs one CLI invocation. Arguments exclude the program name. Documents
/// go to `out` (one JSON document per line; `gen` emits a raw graph6 line),
/// diagnostics to `err`. Returns the process exit code: 0 for an answered
/// query or satisfied property, 2 when a counterexample or violation was
/// found, 1 for usage or ingestion errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks* hooks = nullptr);

} // namespace k25::cli
