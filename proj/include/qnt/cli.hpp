#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qnt/matrix.hpp"

namespace qnt::cli {

enum ExitCode : int { ok = 0, usage = 1, suite_failure = 2, numerical_failure = 3 };

/// Entry point shared by the executable and the tests. Artifacts go to
/// `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 17 significant digits, "-0" folded to "0".
std::string format_double(double v);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace qnt::cli
