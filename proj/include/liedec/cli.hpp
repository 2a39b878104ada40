#pragma once

#include <iosfwd>

namespace liedec::cli {

enum ExitCode : int { kOk = 0, kSpecError = 2, kNumericalFailure = 3 };

/// Entry point of the `liedec` tool:
///   liedec decompose SPEC [--out FILE] [--tol-rank X] [--tol-eig X]
///                         [--pivot P]... [--splitting-coeffs C1,C2,...]
///   liedec simulate SPEC SCHEDULE [--out FILE] [same flags]
///   liedec demo two-spin [--out FILE]
/// A pivot P is `drift`, `control:K` (0-based) or `generator:K`, meaning i H
/// for the corresponding Hamiltonian term.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liedec::cli
