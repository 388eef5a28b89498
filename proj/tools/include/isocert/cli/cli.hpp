#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isocert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInconclusive = 2;
/// A theorem clause fails on a model listed as a known open question.
inline constexpr int kExitDocumentedDiscrepancy = 3;
inline constexpr int kExitUsage = 64;

/// Default worker count: ISOCERT_THREADS if set to a positive integer, else 1.
unsigned default_threads();

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isocert::cli
