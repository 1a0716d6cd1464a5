#pragma once

#include <string>
#include <vector>

namespace qnt {

struct SuiteCheck {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Outcome of one identity suite. Notes carry findings that are reported but
/// do not gate `overall`.
struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  std::vector<std::string> notes;

  void add(std::string name, double residual, double threshold);
  bool overall() const;
};

inline constexpr double kDefaultTolerance = 1e-10;

/// `tolerance` replaces the default 1e−10 bound; bounds with their own
/// scale (1e−12·d, 1e−14, exact) are unaffected.
SuiteReport natural_suite(double tolerance = kDefaultTolerance, std::size_t dim = 12, std::size_t max_block = 8);
SuiteReport integer_suite(double tolerance = kDefaultTolerance, std::size_t dim_max = 15);
SuiteReport qmap_suite(double tolerance = kDefaultTolerance);
SuiteReport sun_suite(double tolerance = kDefaultTolerance);
/// Distribution and entropy bounds are fixed (1e−9, 1e−10, 1e−12, 1e−14).
SuiteReport distribution_suite();
SuiteReport entropy_suite();

/// Suite names accepted by run_suite, in reporting order.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite concurrently for "all" (reports
/// keep the order of suite_names()). Throws std::invalid_argument for an
/// unknown name.
std::vector<SuiteReport> run_suite(const std::string& name, double tolerance = kDefaultTolerance,
                                   std::size_t dim_max = 15);

}  // namespace qnt
