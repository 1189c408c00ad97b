#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "isotonic/cli/manifest.hpp"

namespace isotonic::cli {

enum ExitCode : int { Success = 0, NumericalFailure = 1, InvalidArguments = 2 };

/// Runs the command described by `m`, writing results to `out` (or to files for
/// reproduce-tables and when "out" is set). Library errors propagate.
int execute(const RunManifest& m, std::ostream& out);

/// execute() with errors mapped to exit codes and a one-line diagnostic on `err`.
int run(const RunManifest& m, std::ostream& out, std::ostream& err);

struct Check {
    std::string check;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

/// Suites: identities, orthonormality, ode, oracle, duality, limit, tables, all.
/// Throws DomainError for an unknown suite.
std::vector<Check> validate_suite(const std::string& suite);

}  // namespace isotonic::cli
