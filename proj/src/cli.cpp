#include "qnt/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "qnt/ensemble.hpp"
#include "qnt/error.hpp"
#include "qnt/integer_rep.hpp"
#include "qnt/natural_rep.hpp"
#include "qnt/qmap.hpp"
#include "qnt/qunit.hpp"
#include "qnt/suites.hpp"

namespace qnt::cli {

using nlohmann::json;

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real() == 0.0 ? 0.0 : m(r, c).real());
      ri.push_back(m(r, c).imag() == 0.0 ? 0.0 : m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = cplx(j.at("re").at(r).at(c).get<double>(), j.at("im").at(r).at(c).get<double>());
  return m;
}

namespace {

enum class Format { csv, json, pretty };

struct Emitter {
  Format format;
  std::ostream& out;

  void matrix(const ComplexMatrix& m) const {
    switch (format) {
      case Format::json:
        out << matrix_to_json(m).dump() << '\n';
        break;
      case Format::csv:
        matrix_csv(m);
        break;
      case Format::pretty:
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t c = 0; c < m.cols(); ++c) {
            const cplx z = m(r, c);
            std::ostringstream cell;
            cell << std::setprecision(6) << (z.real() == 0.0 ? 0.0 : z.real());
            if (z.imag() != 0.0) cell << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
            out << (c ? " " : "") << std::setw(14) << cell.str();
          }
          out << '\n';
        }
        break;
    }
  }

  void matrix_csv(const ComplexMatrix& m) const {
    out << "row";
    for (std::size_t c = 1; c <= m.cols(); ++c) out << ",col" << c << "_re,col" << c << "_im";
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << r + 1;
      for (std::size_t c = 0; c < m.cols(); ++c)
        out << ',' << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
      out << '\n';
    }
  }

  /// Rows of preformatted cells; json values keep their native types.
  void table(const std::vector<std::string>& header, const std::vector<std::vector<json>>& rows) const {
    auto cell = [](const json& v) -> std::string {
      if (v.is_string()) return v.get<std::string>();
      if (v.is_number_float()) return format_double(v.get<double>());
      return v.dump();
    };
    if (format == Format::json) {
      json arr = json::array();
      for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump() << '\n';
      return;
    }
    const char* sep = format == Format::csv ? "," : "  ";
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? sep : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? sep : "") << cell(row[i]);
      out << '\n';
    }
  }
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "pretty") return Format::pretty;
  return Format::csv;
}

// ---------------------------------------------------------------------------

struct RepArgs {
  std::string space = "integer", parity = "even", component = "3";
  std::size_t dim = 3;
};

ComplexMatrix build_rep(const RepArgs& a) {
  using natural::Direction;
  using natural::Parity;
  if (a.space == "integer") {
    if (a.component == "1" || a.component == "2" || a.component == "3")
      return integer::build_Z(std::stoi(a.component), a.dim);
    if (a.component == "raise") return integer::ladder_Z(Direction::raise, a.dim);
    if (a.component == "lower") return integer::ladder_Z(Direction::lower, a.dim);
    throw std::invalid_argument("integer space has components 1, 2, 3, raise, lower");
  }
  if (a.component != "raise" && a.component != "lower" && a.component != "number")
    throw std::invalid_argument("natural space has components raise, lower, number");
  if (a.parity == "full") {
    if (a.dim < 2 || a.dim % 2 != 0) throw std::invalid_argument("full parity needs an even --dim >= 2");
    const std::size_t b = a.dim / 2;
    if (a.component == "number") return natural::assemble_full_N(b);
    if (b < 2) throw std::invalid_argument("full-parity ladders need --dim >= 4");
    const Direction dir = a.component == "raise" ? Direction::raise : Direction::lower;
    const ComplexMatrix e00{{1, 0}, {0, 0}}, e11{{0, 0}, {0, 1}};
    return kron(natural::ladder_matrix(dir, Parity::even, b), e00) +
           kron(natural::ladder_matrix(dir, Parity::odd, b), e11);
  }
  const Parity parity = a.parity == "odd" ? Parity::odd : Parity::even;
  if (a.component == "number") return natural::number_matrix(parity, a.dim);
  return natural::ladder_matrix(a.component == "raise" ? Direction::raise : Direction::lower, parity, a.dim);
}

// ---------------------------------------------------------------------------

struct DistArgs {
  double q = 1.0;
  std::string sector = "both";
  long long nmax = -1;
};

void emit_dist(const Emitter& e, const DistArgs& a) {
  if (!(a.q >= 0.0) || !std::isfinite(a.q)) throw std::invalid_argument("--q must be a finite modulus >= 0");
  const cplx q(a.q, 0.0);
  if (a.sector != "even" && a.q == 0.0) throw std::invalid_argument("the odd sector needs --q > 0");
  const std::size_t nmax = a.nmax >= 0 ? static_cast<std::size_t>(a.nmax) : default_nmax(q);
  std::vector<std::string> header{"n"};
  if (a.sector != "odd") header.push_back("p_even");
  if (a.sector != "even") header.push_back("p_odd");
  std::vector<std::vector<json>> rows;
  for (std::size_t n = 0; n <= nmax; ++n) {
    std::vector<json> row{n};
    if (a.sector != "odd") row.emplace_back(p_even(q, n));
    if (a.sector != "even") row.emplace_back(p_odd(q, n));
    rows.push_back(std::move(row));
  }
  e.table(header, rows);
}

// ---------------------------------------------------------------------------

int emit_check(const Emitter& e, const std::string& suite, double tol, std::size_t dim_max) {
  const auto reports = run_suite(suite, tol, dim_max);
  bool all = true;
  if (e.format == Format::json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"residual", c.residual}, {"threshold", c.threshold}, {"pass", c.pass}});
      arr.push_back({{"suite", r.suite}, {"checks", checks}, {"notes", r.notes}, {"overall", r.overall()}});
      all = all && r.overall();
    }
    e.out << arr.dump() << '\n';
  } else if (e.format == Format::csv) {
    e.out << "suite,check,residual,threshold,pass\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks)
        e.out << r.suite << ",\"" << c.name << "\"," << format_double(c.residual) << ','
              << format_double(c.threshold) << ',' << (c.pass ? "true" : "false") << '\n';
      for (const auto& n : r.notes) e.out << r.suite << ",\"note: " << n << "\",,,\n";
      e.out << r.suite << ",overall,,," << (r.overall() ? "true" : "false") << '\n';
      all = all && r.overall();
    }
  } else {
    for (const auto& r : reports) {
      e.out << "[" << r.suite << "]\n";
      for (const auto& c : r.checks)
        e.out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << "  (residual " << std::setprecision(3)
              << c.residual << " <= " << c.threshold << ")\n";
      for (const auto& n : r.notes) e.out << "  NOTE " << n << '\n';
      e.out << "  overall: " << (r.overall() ? "pass" : "FAIL") << '\n';
      all = all && r.overall();
    }
  }
  return all ? ok : suite_failure;
}

// ---------------------------------------------------------------------------

void emit_charpoly(const Emitter& e, const std::string& n_text) {
  const HalfInt n = HalfInt::parse(n_text);
  if (n.twice() < 1) throw std::invalid_argument("--n must be >= 1/2");
  const RationalPolynomial p = char_poly_exact(integer::build_Z3_exact(n.dimension()));
  if (e.format == Format::pretty) {
    e.out << "det(Z3 - xI) = " << p.str() << '\n';
    return;
  }
  std::vector<std::vector<json>> rows;
  for (int k = p.degree(); k >= 0; --k)
    rows.push_back({k, to_fraction_string(p.coefficient(static_cast<std::size_t>(k)))});
  e.table({"power", "coefficient"}, rows);
}

// ---------------------------------------------------------------------------

void emit_qmap(const Emitter& e, int p, std::size_t d) {
  const auto t = qmap::build_T(p, d);
  const ComplexMatrix r = qmap::build_R(p, d);
  const qmap::RReport rep = qmap::r_report(p, d);

  std::vector<std::string> header{"m", "r", "eigenbasis_diagonal", "norm_ratio"};
  std::vector<std::vector<json>> rows;
  for (const auto& row : rep.rows) {
    const std::string law = p == 3 ? "1/1" : to_fraction_string(row.law);
    rows.push_back({row.m.str(), law, row.computed, to_fraction_string(row.oracle)});
  }
  if (e.format == Format::json) {
    json table = json::array();
    for (const auto& row : rows) table.push_back({{"m", row[0]}, {"r", row[1]}, {"eigenbasis_diagonal", row[2]}, {"norm_ratio", row[3]}});
    e.out << json{{"component", p}, {"d_from", d}, {"d_to", t.d_to}, {"T", matrix_to_json(t.matrix)},
                  {"R", matrix_to_json(r)}, {"r", table}}
                 .dump()
          << '\n';
    return;
  }
  e.out << "# T\n";
  e.matrix(t.matrix);
  e.out << "# R\n";
  e.matrix(r);
  e.out << "# r\n";
  e.table(header, rows);
}

// ---------------------------------------------------------------------------

void emit_prime(const Emitter& e, unsigned n) {
  const Qunit q = prime_qunit(n);
  std::vector<std::vector<json>> rows;
  for (std::size_t label = 0; label < q.dimension(); ++label)
    if (q.amplitude(label) != 0.0) rows.push_back({label, q.amplitude(label).real()});
  e.table({"label", "amplitude"}, rows);
}

// ---------------------------------------------------------------------------

cplx parse_scalar(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v.at(0).get<double>(), v.at(1).get<double>()};
  throw std::invalid_argument("entropy spec: scalars are numbers or [re, im] pairs");
}

std::vector<cplx> parse_vector(const json& v) {
  if (!v.is_array()) throw std::invalid_argument("entropy spec: expected an array of amplitudes");
  std::vector<cplx> out;
  for (const auto& x : v) out.push_back(parse_scalar(x));
  return out;
}

DensityMatrix parse_density(const json& j) {
  if (j.contains("maximally_mixed")) return maximally_mixed(j.at("maximally_mixed").get<std::size_t>());
  if (j.contains("pure")) return density_from_ensemble(Ensemble::pure(Qunit::natural(parse_vector(j.at("pure")))));
  if (j.contains("members")) {
    std::vector<Qunit> members;
    for (const auto& m : j.at("members")) members.push_back(Qunit::natural(parse_vector(m)));
    const auto weights = j.at("weights").get<std::vector<double>>();
    const bool normalize = j.value("normalize", false);
    return density_from_ensemble(
        Ensemble(std::move(members), weights, normalize ? WeightPolicy::normalize : WeightPolicy::strict));
  }
  if (j.contains("matrix")) {
    const auto& rows = j.at("matrix");
    ComplexMatrix m(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto row = parse_vector(rows.at(r));
      if (row.size() != rows.size()) throw std::invalid_argument("entropy spec: matrix must be square");
      for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
    }
    return DensityMatrix::from_matrix(std::move(m));
  }
  throw std::invalid_argument("entropy spec: expected one of maximally_mixed, pure, members, matrix, factors");
}

void emit_entropy(const Emitter& e, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("spec file is not valid JSON: ") + ex.what());
  }
  DensityMatrix rho = maximally_mixed(1);
  if (spec.contains("factors")) {
    std::vector<DensityMatrix> factors;
    for (const auto& f : spec.at("factors")) factors.push_back(parse_density(f));
    rho = product_density(factors);
  } else {
    rho = parse_density(spec);
  }
  const double omega = omega_entropy(rho);
  const std::vector<std::vector<json>> rows{
      std::vector<json>{rho.dimension(), omega, shannon_bits(rho.dimension()), rho.purity()}};
  e.table({"dimension", "omega", "shannon_bits", "purity"}, rows);
}

double default_tolerance() {
  const char* env = std::getenv("QNT_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string("QNT_TOL must be a positive number, got '") + env + "'");
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator algebra toolkit for natural and integer q-numbers", "qnt"};
  app.require_subcommand(1);
  std::string format = "csv";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));

  RepArgs rep;
  auto* rep_cmd = app.add_subcommand("rep", "Emit one operator matrix");
  rep_cmd->add_option("--space", rep.space)->check(CLI::IsMember({"natural", "integer"}));
  rep_cmd->add_option("--parity", rep.parity)->check(CLI::IsMember({"even", "odd", "full"}));
  rep_cmd->add_option("--dim", rep.dim, "Matrix dimension")->required()->check(CLI::Range(1, 4096));
  rep_cmd->add_option("--component", rep.component)
      ->check(CLI::IsMember({"1", "2", "3", "raise", "lower", "number"}));

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Sector probability distributions");
  dist_cmd->add_option("--q", dist.q, "Modulus |q| of the N+ eigenvalue")->required();
  dist_cmd->add_option("--sector", dist.sector)->check(CLI::IsMember({"even", "odd", "both"}));
  dist_cmd->add_option("--nmax", dist.nmax, "Largest index n (default ceil(8 lambda) + 40)")->check(CLI::Range(0LL, 100000LL));

  std::string suite = "all";
  double tol = 0.0;
  std::size_t dim_max = 15;
  auto* check_cmd = app.add_subcommand("check", "Run identity suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.emplace_back("all");
  check_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_choices));
  auto* tol_opt = check_cmd->add_option("--tol", tol, "Tolerance for default-bound checks")->check(CLI::PositiveNumber);
  check_cmd->add_option("--dim-max", dim_max, "Largest dimension for the integer suite")->check(CLI::Range(2, 64));

  std::string charpoly_n;
  auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial of Z3");
  charpoly_cmd->add_option("--n", charpoly_n, "Label n, integer or half-integer")->required();

  int qmap_p = 1;
  std::size_t qmap_d = 3;
  auto* qmap_cmd = app.add_subcommand("qmap", "Quantum mapping T, retraction R and r(m)");
  qmap_cmd->add_option("--d", qmap_d)->required()->check(CLI::Range(2, 64));
  qmap_cmd->add_option("--component", qmap_p)->check(CLI::Range(1, 3));

  unsigned prime_n = 2;
  auto* prime_cmd = app.add_subcommand("prime-qunit", "Equal-amplitude qunit on prime labels");
  prime_cmd->add_option("--n", prime_n)->required();

  std::string spec_path;
  auto* entropy_cmd = app.add_subcommand("entropy", "Omega entropy of a density description");
  entropy_cmd->add_option("--spec", spec_path, "JSON density description")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  const Emitter emitter{parse_format(format), out};
  try {
    if (*rep_cmd) emitter.matrix(build_rep(rep));
    if (*dist_cmd) emit_dist(emitter, dist);
    if (*check_cmd) return emit_check(emitter, suite, *tol_opt ? tol : default_tolerance(), dim_max);
    if (*charpoly_cmd) emit_charpoly(emitter, charpoly_n);
    if (*qmap_cmd) emit_qmap(emitter, qmap_p, qmap_d);
    if (*prime_cmd) emit_prime(emitter, prime_n);
    if (*entropy_cmd) emit_entropy(emitter, spec_path);
  } catch (const NumericalError& e) {
    err << "qnt: numerical failure: " << e.what() << '\n';
    return numerical_failure;
  } catch (const std::invalid_argument& e) {
    err << "qnt: " << e.what() << '\n';
    return usage;
  } catch (const std::out_of_range& e) {
    err << "qnt: " << e.what() << '\n';
    return usage;
  }
  return ok;
}

}  // namespace qnt::cli
