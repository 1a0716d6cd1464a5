#include "qnt/suites.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qnt/eigen.hpp"
#include "qnt/ensemble.hpp"
#include "qnt/integer_rep.hpp"
#include "qnt/natural_rep.hpp"
#include "qnt/qmap.hpp"
#include "qnt/qunit.hpp"
#include "qnt/sun.hpp"

namespace qnt {

void SuiteReport::add(std::string name, double residual, double threshold) {
  checks.push_back({std::move(name), residual, threshold, residual <= threshold});
}

bool SuiteReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

namespace {

const cplx kI(0.0, 1.0);

double interior_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t k = a.rows() - 1;
  return max_abs_diff(a.block(k, k), b.block(k, k));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport natural_suite(double tolerance, std::size_t dim, std::size_t max_block) {
  using namespace natural;
  SuiteReport rep{"natural", {}, {}};
  const std::string at = " (d=" + std::to_string(dim) + ", interior)";

  for (Parity parity : {Parity::even, Parity::odd}) {
    const std::string tag = parity == Parity::even ? "even" : "odd";
    const ComplexMatrix up = ladder_matrix(Direction::raise, parity, dim);
    const ComplexMatrix dn = ladder_matrix(Direction::lower, parity, dim);
    const ComplexMatrix n = parity == Parity::even ? number_matrix(parity, dim) : regularized_odd_number_matrix(dim);
    const ComplexMatrix two_i = cplx(2.0) * ComplexMatrix::identity(dim);

    rep.add(tag + ": [N,N+] = -2N+" + at, interior_diff(commutator(n, up), cplx(-2.0) * up), tolerance);
    rep.add(tag + ": [N,N-] = 2N-" + at, interior_diff(commutator(n, dn), cplx(2.0) * dn), tolerance);
    rep.add(tag + ": N+N- - N = 2I" + at, interior_diff(up * dn - n, two_i), tolerance);
    rep.add(tag + ": number_matrix = N-N+" + at, interior_diff(number_matrix(parity, dim), dn * up), tolerance);

    if (parity == Parity::odd) {
      const ComplexMatrix raw = number_matrix(parity, dim);
      rep.notes.push_back("odd block with unregularized N = diag(0,3,5,...): |[N,N+] + 2N+| = " +
                          fmt(interior_diff(commutator(raw, up), cplx(-2.0) * up)) + ", |N+N- - N - 2I| = " +
                          fmt(interior_diff(up * dn - raw, two_i)) +
                          "; the identities hold once the first entry is regularized to 1");
    }
  }

  double spectrum = 0.0;
  for (std::size_t b = 1; b <= max_block; ++b) {
    const auto values = hermitian_eigenvalues(assemble_full_N(b));
    for (std::size_t k = 0; k < values.size(); ++k)
      spectrum = std::max(spectrum, std::abs(values[k] - static_cast<double>(values.size() - 1 - k)));
  }
  rep.add("spectrum of assembled N = {0..2b-1}, b=1.." + std::to_string(max_block), spectrum, 0.0);

  double seed_failures = 0.0;
  for (std::uint64_t n = 2; n <= 40; ++n) {
    const auto s = qnsv_from_seed(n);
    if (s.coefficient_squared() * Rational(s.double_factorial) != 1) seed_failures += 1.0;
  }
  rep.add("seed coefficient^2 * n!! = 1 exactly, n=2..40", seed_failures, 0.0);
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport integer_suite(double tolerance, std::size_t dim_max) {
  if (dim_max < 2) throw std::invalid_argument("integer suite: dim-max must be >= 2");
  SuiteReport rep{"integer", {}, {}};
  const std::string range = ", d=2.." + std::to_string(dim_max);

  double comm = 0.0, cas = 0.0, cas_comm = 0.0, herm = 0.0, spectrum = 0.0, ladder = 0.0;
  double poly_mismatch = 0.0, root_mismatch = 0.0;
  for (std::size_t d = 2; d <= dim_max; ++d) {
    const auto z = integer::ZRep::build(d);
    const double dd = static_cast<double>(d);
    for (int p = 1; p <= 3; ++p) {
      const ComplexMatrix& a = z.component(p);
      const ComplexMatrix& b = z.component(p % 3 + 1);
      const ComplexMatrix& c = z.component((p + 1) % 3 + 1);
      comm = std::max(comm, max_abs_diff(commutator(a, b), kI * c) / dd);
      herm = std::max({herm, hermitian_defect(a), std::abs(a.trace())});
      const ComplexMatrix z2 = z.casimir();
      cas_comm = std::max(cas_comm, commutator(z2, a).max_abs() / dd);

      const auto values = hermitian_eigenvalues(a);
      for (std::size_t k = 0; k < d; ++k)
        spectrum = std::max(spectrum, std::abs(values[k] - (z.n.to_double() - static_cast<double>(k))));
    }
    const double nn = z.n.to_double();
    cas = std::max(cas, max_abs_diff(z.casimir(), cplx(nn * (nn + 1)) * ComplexMatrix::identity(d)) / dd);

    const ComplexMatrix zp = integer::ladder_Z(natural::Direction::raise, d);
    for (std::size_t r = 0; r + 1 < d; ++r) {
      const Rational m = z.n.value() - Rational(static_cast<long long>(r + 1));
      const Rational expected = (z.n.value() - m) * (z.n.value() + m + 1);
      ladder = std::max(ladder, std::abs(std::norm(zp(r, r + 1)) - to_double(expected)));
    }

    const RationalPolynomial d_poly = integer::char_poly_D(z.n);
    if (char_poly_exact(integer::build_Z3_exact(d)) != d_poly) poly_mismatch += 1.0;
    for (std::int64_t k2 = -z.n.twice(); k2 <= z.n.twice(); k2 += 2)
      if (d_poly.evaluate(Rational(k2, 2)) != 0) root_mismatch += 1.0;
  }
  rep.add("[Z_i,Z_j] = i eps_ijk Z_k, residual/d" + range, comm, 1e-12);
  rep.add("Z^2 = n(n+1)I, residual/d" + range, cas, 1e-12);
  rep.add("[Z^2,Z_p] = 0, residual/d" + range, cas_comm, 1e-12);
  rep.add("Z_p Hermitian and traceless" + range, herm, tolerance);
  rep.add("spectrum of Z_p = {n..-n}" + range, spectrum, tolerance);
  rep.add("|(Z+)_{r,r+1}|^2 = (n-m)(n+m+1)" + range, ladder, 1e-12);
  rep.add("char_poly(Z_3) = prod (k-x) exactly" + range, poly_mismatch, 0.0);
  rep.add("D(m) = 0 exactly at every m" + range, root_mismatch, 0.0);

  double norm_err = 0.0;
  const std::size_t norm_max = std::min<std::size_t>(dim_max, 11);
  for (int p = 1; p <= 2; ++p)
    for (std::size_t d = 2; d <= norm_max; ++d)
      for (const auto& v : integer::z_eigensystem(p, d)) {
        const double expected = integer::closed_form_norm(HalfInt::from_dimension(d), v.m);
        norm_err = std::max(norm_err, std::abs(v.norm - expected) / expected);
      }
  rep.add("eigenvector norm = 2^n sqrt((n+m)!(n-m)!/(2n)!), relative, p=1,2, d=2.." + std::to_string(norm_max),
          norm_err, 1e-9);
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport qmap_suite(double tolerance) {
  using namespace qmap;
  SuiteReport rep{"qmap", {}, {}};

  double r3 = 0.0;
  for (std::size_t d = 2; d <= 15; ++d) r3 = std::max(r3, max_abs_diff(build_R(3, d), ComplexMatrix::identity(d)));
  rep.add("R_3 = I exactly, d=2..15", r3, 0.0);
  const auto shift = compose_T(3, 3, 7).matrix;
  rep.add("T_3(5->7) T_3(3->5) is an isometry", max_abs_diff(shift.adjoint() * shift, ComplexMatrix::identity(3)), 0.0);

  double off = 0.0, law = 0.0, oracle = 0.0, agree = 0.0;
  for (int p = 1; p <= 2; ++p)
    for (std::size_t d = 2; d <= 11; ++d) {
      const RReport r = r_report(p, d);
      off = std::max(off, r.off_diagonal);
      law = std::max(law, r.law_residual);
      oracle = std::max(oracle, r.oracle_residual);
      for (const auto& row : r.rows)
        if (row.law != row.oracle) agree += 1.0;
    }
  rep.add("R_1, R_2 diagonal in the Z_p eigenbasis, d=2..11", off, 1e-12);
  rep.add("diag(R_p) = 1 + 1/d - 4m^2/(d(d+1)), d=2..11", law, tolerance);
  rep.add("diag(R_p) = norm ratio <n+1,m|n+1,m>/<n,m|n,m>, d=2..11", oracle, tolerance);
  rep.add("r(m) law = norm ratio exactly, d=2..11", agree, 0.0);

  double hom = 0.0;
  for (int p = 1; p <= 3; ++p)
    for (std::size_t d : {3, 5, 7}) hom = std::max(hom, r_report(p, d).homomorphism_residual);
  rep.add("Z_p(d+2) T_p v = m T_p v, p=1,2,3, d=3,5,7", hom, 1e-8);

  double sym = 0.0, boundary = 0.0;
  for (std::size_t d = 2; d <= 15; ++d) {
    const HalfInt n = HalfInt::from_dimension(d);
    for (HalfInt m = n; m >= -n; m = m - HalfInt::from_int(1))
      if (r_eigenvalue(d, m) != r_eigenvalue(d, -m)) sym += 1.0;
    if (r_eigenvalue(d, n) != Rational(4, static_cast<long long>(d + 1))) boundary += 1.0;
  }
  rep.add("r(m) = r(-m) exactly, d=2..15", sym, 0.0);
  rep.add("r at |m| = n equals 4/(d+1) exactly, d=2..15", boundary, 0.0);

  const Rational r31 = r_eigenvalue(3, HalfInt::from_int(1));
  rep.notes.push_back("boundary value 4/(d-1) is inconsistent with the r(m) law: d=3, m=1 gives r = " +
                      to_fraction_string(r31) + " while 4/(d-1) = 2/1");

  ComplexMatrix shifted(5, 3);
  for (std::size_t s = 1; s < 3; ++s) shifted(s - 1, s) = 1.0;
  rep.notes.push_back("T_3 with ones at r+1 = s gives T^dagger T = diag(0,1,1) at d=3 (residual from I: " +
                      fmt(max_abs_diff(shifted.adjoint() * shifted, ComplexMatrix::identity(3))) +
                      "); ones at r = s+1 are used");
  rep.notes.push_back("R_1 at d=3 in the canonical basis has off-diagonal magnitude " +
                      fmt(max_off_diagonal(build_R(1, 3))) + "; it is diagonal only in the Z_1 eigenbasis");
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport sun_suite(double tolerance) {
  using namespace sun;
  SuiteReport rep{"sun", {}, {}};
  const GellMannSet g = gellmann_from_Z();
  const GellMannSet ref = gellmann_standard();

  double table = 0.0, trace = 0.0;
  for (int a = 1; a <= 8; ++a) {
    table = std::max(table, max_abs_diff(g[a], ref[a]));
    for (int b = 1; b <= 8; ++b)
      trace = std::max(trace, std::abs((g[a] * g[b]).trace() - cplx(a == b ? 2.0 : 0.0)));
  }
  rep.add("lambda_a from Z combinations = standard Gell-Mann matrices", table, 1e-14);
  rep.add("Tr(lambda_a lambda_b) = 2 delta_ab", trace, 1e-12);

  const StructureConstants s = structure_constants(g);
  double closure = 0.0, anti = 0.0, unit_factor = 0.0, perm = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      ComplexMatrix fsum(3, 3), dsum(3, 3);
      for (int c = 0; c < 8; ++c) {
        fsum += cplx(s.f[a][b][c]) * g.lambdas[c];
        dsum += cplx(s.dsym[a][b][c]) * g.lambdas[c];
        const double fv = s.f[a][b][c], dv = s.dsym[a][b][c];
        perm = std::max({perm, std::abs(fv + s.f[b][a][c]), std::abs(fv + s.f[a][c][b]), std::abs(fv + s.f[c][b][a]),
                         std::abs(fv - s.f[b][c][a]), std::abs(fv - s.f[c][a][b])});
        perm = std::max({perm, std::abs(dv - s.dsym[b][a][c]), std::abs(dv - s.dsym[a][c][b]),
                         std::abs(dv - s.dsym[c][b][a]), std::abs(dv - s.dsym[b][c][a]), std::abs(dv - s.dsym[c][a][b])});
      }
      const ComplexMatrix comm = commutator(g.lambdas[a], g.lambdas[b]);
      closure = std::max(closure, max_abs_diff(comm, cplx(0.0, 2.0) * fsum));
      unit_factor = std::max(unit_factor, max_abs_diff(comm, kI * fsum));
      const ComplexMatrix expected = cplx(2.0) * dsum + cplx(a == b ? 4.0 / 3.0 : 0.0) * ComplexMatrix::identity(3);
      anti = std::max(anti, max_abs_diff(anticommutator(g.lambdas[a], g.lambdas[b]), expected));
    }
  rep.add("[lambda_a,lambda_b] = 2i f_abc lambda_c", closure, tolerance);
  rep.add("{lambda_a,lambda_b} = 2 d_abc lambda_c + (4/3) delta_ab I", anti, tolerance);
  rep.add("f antisymmetric, d symmetric under index permutations", perm, 1e-12);
  rep.add("f_123 = 1", std::abs(s.f_at(1, 2, 3) - 1.0), 1e-12);
  rep.add("f_458 = sqrt(3)/2", std::abs(s.f_at(4, 5, 8) - std::sqrt(3.0) / 2.0), 1e-12);
  rep.add("d_118 = 1/sqrt(3)", std::abs(s.d_at(1, 1, 8) - 1.0 / std::sqrt(3.0)), 1e-12);
  rep.notes.push_back("with f from the trace formula, [lambda_a,lambda_b] = i f_abc lambda_c misses by " +
                      fmt(unit_factor) + "; closure needs the factor 2i");

  const CartanKilling ck = cartan_killing(s);
  double metric = 0.0, inverse = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      metric = std::max(metric, std::abs(ck.metric[a][b] - (a == b ? 3.0 : 0.0)));
      double prod = 0.0;
      for (int c = 0; c < 8; ++c) prod += ck.metric[a][c] * ck.inverse[c][b];
      inverse = std::max(inverse, std::abs(prod - (a == b ? 1.0 : 0.0)));
    }
  rep.add("g_ab = f_acd f_bcd = 3 delta_ab", metric, tolerance);
  rep.add("g g^-1 = I", inverse, tolerance);

  const ComplexMatrix c2 = casimir_su3(g);
  double c2_comm = 0.0;
  for (const auto& l : g.lambdas) c2_comm = std::max(c2_comm, commutator(l, c2).max_abs());
  rep.add("C_2 = (4/3) I", max_abs_diff(c2, cplx(4.0 / 3.0) * ComplexMatrix::identity(3)), 1e-12);
  rep.add("[lambda_a, C_2] = 0", c2_comm, 1e-12);

  const cplx h = 1.0 / std::sqrt(2.0);
  const ComplexMatrix sign_flipped{{0, -kI * h, 0}, {kI * h, 0, -kI * h}, {0, -kI * h, 0}};
  rep.notes.push_back("{Z_2,Z_3} with entries (2,3) = -i/sqrt2 and (3,2) = -i/sqrt2 is not Hermitian (defect " +
                      fmt(hermitian_defect(sign_flipped)) + "); the computed anticommutator has (2,3) = +i/sqrt2");

  double ggm_sum = 0.0, ggm_comm = 0.0, ggm_herm = 0.0, rank = 0.0, herm_basis = 0.0, casimir = 0.0;
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto z = ggm_generators_exact(d);
    auto at = [&](std::size_t l, std::size_t k) -> const RationalMatrix& { return z[l * d + k]; };
    RationalMatrix sum(d, d);
    for (std::size_t l = 0; l < d; ++l) sum = sum + at(l, l);
    if (!sum.is_zero()) ggm_sum += 1.0;
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t k = 0; k < d; ++k) {
        RationalMatrix transposed(d, d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) transposed(i, j) = at(l, k)(j, i);
        if (!(transposed == at(k, l))) ggm_herm += 1.0;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s2 = 0; s2 < d; ++s2) {
            const RationalMatrix lhs = at(l, k) * at(r, s2) - at(r, s2) * at(l, k);
            RationalMatrix rhs(d, d);
            if (r == k) rhs = rhs + at(l, s2);
            if (l == s2) rhs = rhs - at(r, k);
            if (!(lhs == rhs)) ggm_comm += 1.0;
          }
      }

    const auto hs = hermitian_generators(d);
    if (span_rank(hs) != d * d - 1 || span_rank(ggm_generators(d)) != d * d - 1) rank += 1.0;
    for (std::size_t a = 0; a < hs.size(); ++a) {
      herm_basis = std::max({herm_basis, hermitian_defect(hs[a]), std::abs(hs[a].trace())});
      for (std::size_t b = 0; b < hs.size(); ++b)
        herm_basis = std::max(herm_basis, std::abs((hs[a] * hs[b]).trace() - cplx(a == b ? 2.0 : 0.0)));
    }
    const double dd = static_cast<double>(d);
    casimir = std::max(casimir, std::abs(casimir_coefficient(d) - (dd * dd - 1.0) / (2.0 * dd)));
  }
  rep.add("sum_l Z_l^l = 0 exactly, d=2..5", ggm_sum, 0.0);
  rep.add("[Z_l^k, Z_r^s] = delta_rk Z_l^s - delta_ls Z_r^k exactly, d=2..5", ggm_comm, 0.0);
  rep.add("(Z_l^k)^dagger = Z_k^l exactly, d=2..5", ggm_herm, 0.0);
  rep.add("generators span d^2-1 dimensions, d=2..5", rank, 0.0);
  rep.add("Hermitian generators traceless with Tr(H_a H_b) = 2 delta_ab, d=2..5", herm_basis, 1e-12);
  rep.add("Casimir coefficient = (d^2-1)/(2d), d=2..5", casimir, 1e-12);
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport distribution_suite() {
  SuiteReport rep{"distribution", {}, {}};
  double sum_even = 0.0, sum_odd = 0.0, mean_n = 0.0, mean_star = 0.0, forms = 0.0;
  double unimodal = 0.0, mode = 0.0, eigen = 0.0;
  for (double q2 : {1.0, 2.0, 4.0, 8.0}) {
    const cplx q(std::sqrt(q2), 0.0);
    const std::size_t nmax = default_nmax(q);
    double se = 0.0, so = 0.0, mn = 0.0, ms = 0.0;
    std::vector<double> pe, po;
    for (std::size_t n = 0; n <= nmax; ++n) {
      pe.push_back(p_even(q, n));
      po.push_back(p_odd(q, n));
      se += pe.back();
      so += po.back();
      mn += pe.back() * 2.0 * static_cast<double>(n);
      ms += pe.back() * (2.0 * static_cast<double>(n) + 1.0);
      forms = std::max(forms, std::abs(po.back() - p_odd_factored(q, n)));
    }
    sum_even = std::max(sum_even, std::abs(se - 1.0));
    sum_odd = std::max(sum_odd, std::abs(so - 1.0));
    mean_n = std::max(mean_n, std::abs(mn - q2));
    mean_star = std::max(mean_star, std::abs(ms - (q2 + 1.0)));

    const double floor_lambda = std::floor(q2 / 2.0);
    for (const auto* p : {&pe, &po}) {
      const auto peak = static_cast<std::size_t>(std::max_element(p->begin(), p->end()) - p->begin());
      for (std::size_t n = 1; n <= peak; ++n)
        if ((*p)[n] < (*p)[n - 1]) unimodal += 1.0;
      for (std::size_t n = peak + 1; n < p->size(); ++n)
        if ((*p)[n] > (*p)[n - 1]) unimodal += 1.0;
      mode = std::max(mode, std::abs(static_cast<double>(peak) - floor_lambda));
    }

    const Qunit even = sector_qunit(normalize_even_sector(q), nmax);
    const auto amps = even.amplitudes();
    const std::size_t dim = amps.size();
    const ComplexMatrix up = natural::ladder_matrix(natural::Direction::raise, natural::Parity::even, (dim + 1) / 2);
    std::vector<cplx> block;
    for (std::size_t k = 0; k < dim; k += 2) block.push_back(amps[k]);
    const auto image = up * block;
    for (std::size_t k = 0; k + 1 < block.size(); ++k) eigen = std::max(eigen, std::abs(image[k] - q * block[k]));
  }
  rep.add("sum p_even = 1, |q|^2 in {1,2,4,8}", sum_even, 1e-9);
  rep.add("sum p_odd = 1, |q|^2 in {1,2,4,8}", sum_odd, 1e-9);
  rep.add("sum p_even 2n = |q|^2", mean_n, 1e-9);
  rep.add("sum p_even (2n+1) = |q|^2 + 1", mean_star, 1e-9);
  rep.add("direct and factored p_odd agree pointwise", forms, 1e-14);
  rep.add("p_even, p_odd unimodal (violations)", unimodal, 0.0);
  rep.add("mode within floor(|q|^2/2) +- 1 (distance)", mode, 1.0);
  rep.add("N+ Q = q Q on the even sector interior", eigen, 1e-8);
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<cplx> random_ket(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> gauss;
  std::vector<cplx> v(d);
  for (auto& x : v) x = cplx(gauss(rng), gauss(rng));
  const double n = norm(v);
  for (auto& x : v) x /= n;
  return v;
}

DensityMatrix random_mixed(std::mt19937_64& rng, std::size_t d, std::size_t members) {
  std::uniform_real_distribution<double> uni(0.1, 1.0);
  std::vector<Qunit> kets;
  std::vector<double> w;
  for (std::size_t i = 0; i < members; ++i) {
    kets.push_back(Qunit::natural(random_ket(rng, d)));
    w.push_back(uni(rng));
  }
  return density_from_ensemble(Ensemble(std::move(kets), std::move(w), WeightPolicy::normalize));
}

}  // namespace

SuiteReport entropy_suite() {
  SuiteReport rep{"entropy", {}, {}};
  std::mt19937_64 rng(20260101);

  double pure = 0.0, mixed = 0.0, additive = 0.0, bits = 0.0;
  for (std::size_t d = 1; d <= 8; ++d) {
    pure = std::max(pure, omega_entropy(density_from_ensemble(Ensemble::pure(Qunit::natural(random_ket(rng, d))))));
    mixed = std::max(mixed, std::abs(omega_entropy(maximally_mixed(d)) - std::log(static_cast<double>(d))));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_mixed(rng, 2 + trial % 3, 3);
    const auto b = random_mixed(rng, 2 + (trial + 1) % 2, 4);
    additive = std::max(additive,
                        std::abs(omega_entropy(product_density({a, b})) - omega_entropy(a) - omega_entropy(b)));
  }
  for (int k = 0; k <= 20; ++k)
    bits = std::max(bits, std::abs(shannon_bits(std::size_t{1} << k) - static_cast<double>(k)));

  rep.add("Omega = 0 for pure states, d=1..8", pure, 1e-12);
  rep.add("Omega(I/d) = ln d, d=1..8", mixed, 1e-12);
  rep.add("Omega additive over tensor products", additive, 1e-10);
  rep.add("Shannon bits log2(2^k) = k exactly, k=0..20", bits, 0.0);
  return rep;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"natural", "integer", "qmap", "sun", "distribution", "entropy"};
  return names;
}

namespace {

SuiteReport run_one(const std::string& name, double tolerance, std::size_t dim_max) {
  if (name == "natural") return natural_suite(tolerance);
  if (name == "integer") return integer_suite(tolerance, dim_max);
  if (name == "qmap") return qmap_suite(tolerance);
  if (name == "sun") return sun_suite(tolerance);
  if (name == "distribution") return distribution_suite();
  if (name == "entropy") return entropy_suite();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

std::vector<SuiteReport> run_suite(const std::string& name, double tolerance, std::size_t dim_max) {
  if (name != "all") return {run_one(name, tolerance, dim_max)};
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& n : suite_names())
    jobs.push_back(std::async(std::launch::async, run_one, n, tolerance, dim_max));
  std::vector<SuiteReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace qnt
