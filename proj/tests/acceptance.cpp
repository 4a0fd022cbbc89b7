// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails. `--extended` runs only the long eigenvalue rows (d = 8, 9).

#include "fdconvex/hessian.hpp"
#include "fdconvex/pipeline.hpp"
#include "fdconvex/psdcert.hpp"
#include "fdconvex/reduction.hpp"
#include "fdconvex/repset.hpp"

#include "reference_blocks.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace fdconvex;

namespace {

constexpr double kEigenTolerance = 1e-8;        // smallest block eigenvalues
constexpr double kCountSecondsLimit = 60.0;     // enumeration through 8 edges
constexpr double kCompressPsdTolerance = 1e-9;  // sign of a full-matrix eigenvalue
constexpr double kPatternTolerance = 1e-10;     // k = 0 eigenvalue formulas
constexpr double kHessianStep = 1e-4;
constexpr double kHessianTolerance = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why)
  {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

std::string fixed(double v, int digits = 8)
{
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome multigraph_counts()
{
  Outcome out;
  const std::size_t expected[] = {1, 3, 8, 23, 66, 212, 686, 2389};
  const auto start = std::chrono::steady_clock::now();
  std::string seen;
  for (int m = 1; m <= 8; ++m) {
    const std::size_t got = enumerate_multigraphs(m).size();
    seen += (m > 1 ? "," : "") + std::to_string(got);
    if (got != expected[m - 1]) out.fail("d=" + std::to_string(m + 2) + " count " + std::to_string(got));
  }
  const double secs = seconds_since(start);
  if (secs > kCountSecondsLimit) out.fail("took " + fixed(secs, 1) + " s");
  if (out.pass) out.detail = seen + " in " + fixed(secs, 2) + " s";
  return out;
}

Outcome table_eigenvalues(int from, int to)
{
  const double expected_min[] = {0.00357563, 0.00059703, 0.00015202, 0.00004653, 0.00001583, 0.00000576, 0.00000220};
  Outcome out;
  RunConfig cfg;
  std::string seen;
  for (int d = from; d <= to; ++d) {
    const DegreeReport r = verify_degree(d, cfg);
    const double want = expected_min[d - 3];
    seen += " d=" + std::to_string(d) + ":" + fixed(r.lambda_min_blocks) + "(" + fixed(r.wall_seconds, 1) + "s)";
    if (std::abs(r.lambda_min_blocks - want) > kEigenTolerance)
      out.fail("d=" + std::to_string(d) + " lambda_min " + fixed(r.lambda_min_blocks) + " vs " + fixed(want));
    if (r.verdict != DegreeVerdict::CONVEX) out.fail("d=" + std::to_string(d) + " not proven");
  }
  if (out.pass) out.detail = seen.substr(1);
  return out;
}

Outcome reference_blocks_exact()
{
  Outcome out;
  CoeffCache cache;
  for (const auto& c : reference::cases()) {
    const ReductionBlocks b = theorem_blocks(parse_multigraph(c.edges), cache);
    if (b.b1 != reference::matrix(c.b1, c.factor)) out.fail(c.edges + " B1 differs");
    if (b.b2 != reference::matrix(c.b2, c.factor)) out.fail(c.edges + " B2 differs");
    if (b.scalar != parse_rational(c.scalar)) out.fail(c.edges + " scalar " + to_string(b.scalar));
    const double l1 = jacobi_eigen(b.b1).min_eigenvalue, l2 = jacobi_eigen(b.b2).min_eigenvalue;
    if (std::abs(l1 - c.b1_lambda_min) > kEigenTolerance) out.fail(c.edges + " lambda_min(B1) " + fixed(l1));
    if (std::abs(l2 - c.b2_lambda_min) > kEigenTolerance) out.fail(c.edges + " lambda_min(B2) " + fixed(l2));
  }
  if (out.pass) out.detail = "4 multigraphs, all entries equal";
  return out;
}

Outcome ldlt_certificates()
{
  Outcome out;
  const char* expected[] = {"13/2360", "17/21232", "2341/12369056"};
  RunConfig cfg;
  for (int d = 3; d <= 5; ++d) {
    const DegreeReport r = verify_degree(d, cfg);
    const Rational want = parse_rational(expected[d - 3]);
    const bool blocks = r.min_pivot_blocks && *r.min_pivot_blocks == want;
    const bool with_scalar = r.min_pivot_with_scalar && *r.min_pivot_with_scalar == want;
    if (!blocks && !with_scalar) {
      out.fail("d=" + std::to_string(d) + " min pivot " +
               (r.min_pivot_blocks ? to_string(*r.min_pivot_blocks) : std::string("-")));
    }
    out.detail += std::string(out.detail.empty() ? "" : ", ") + "d=" + std::to_string(d) + ":" +
                  (blocks ? "blocks" : "") + (blocks && with_scalar ? "+" : "") + (with_scalar ? "with-scalar" : "");
  }
  return out;
}

Outcome hadamard_identity()
{
  Outcome out;
  CoeffCache cache;
  std::size_t checked = 0;
  for (int m = 1; m <= 3; ++m)
    for (const Multigraph& g : enumerate_multigraphs(m)) {
      const ExponentVector gamma = g.exponent();
      for (int n = std::max(2, g.k()); n <= 7; ++n) {
        const auto [mg, rg] = mgamma_rgamma(gamma, n, cache);
        RationalSymMatrix inner = rg;
        for (const auto& term : gamma.terms()) inner = inner + qgamma_matrix(gamma.minus(term.first), n, false, cache);
        if (hadamard(mg, inner) != qgamma_matrix(gamma, n, false, cache)) out.fail(to_string(g) + " n=" + std::to_string(n));
        ++checked;
      }
    }
  if (out.pass) out.detail = std::to_string(checked) + " (multigraph, n) pairs";
  return out;
}

Outcome reduction_soundness()
{
  Outcome out;
  CoeffCache cache;
  std::size_t checked = 0;
  for (int m = 1; m <= 2; ++m)
    for (const Multigraph& g : enumerate_multigraphs(m)) {
      const int k = g.k();
      const EntryOracle oracle = entry_oracle(g, cache);
      for (int n = k + 4; n <= k + 5; ++n) {
        const RationalSymMatrix q = qgamma_matrix(g, n, true, cache);
        const RepresentativeSet set = representative_vectors(k, n);
        const auto formulas = block_formulas(oracle, k, n);
        bool blocks_psd = true;
        for (int i = 1; i <= 3; ++i) {
          const RationalSymMatrix c = compress(q, n, set.family(i));
          if (c != formulas[static_cast<std::size_t>(i - 1)]) out.fail(to_string(g) + " n=" + std::to_string(n) + " U" + std::to_string(i));
          blocks_psd = blocks_psd && ldlt_pivoted(c).verdict == PsdVerdict::PSD;
        }
        const bool full_psd = jacobi_eigen(q).min_eigenvalue >= -kCompressPsdTolerance;
        if (full_psd != blocks_psd) out.fail(to_string(g) + " n=" + std::to_string(n) + " PSD mismatch");
        ++checked;
      }
    }
  if (out.pass) out.detail = std::to_string(checked) + " (multigraph, n) pairs";
  return out;
}

Outcome orbit_counting()
{
  Outcome out;
  for (int k = 0; k <= 3; ++k)
    for (int n = k + 4; n <= k + 5; ++n) {
      const auto brute = orbit_count_bruteforce(k, n);
      if (brute != orbit_count_formula(k)) out.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " brute " + std::to_string(brute));
    }
  for (int k = 0; k <= 6; ++k)
    if (orbit_count_formula(k) != representative_square_sum(k)) out.fail("k=" + std::to_string(k) + " square sum");
  if (out.pass) out.detail = "k<=3 brute force, k<=6 square sums";
  return out;
}

Outcome k0_pattern()
{
  Outcome out;
  std::mt19937_64 rng(20240615);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x = oracle::random_rational(rng, 12), y = oracle::random_rational(rng, 12), z = oracle::random_rational(rng, 12);
    std::vector<double> expected;
    for (const auto& [v, mult] : remark_k0_eigen(x, y, z))
      for (int i = 0; i < mult; ++i) expected.push_back(v.get_d());
    std::sort(expected.begin(), expected.end());
    const EigenReport r = jacobi_eigen(a4_pattern(x, y, z));
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (std::abs(r.eigenvalues[i] - expected[i]) > kPatternTolerance) {
        out.fail("triple " + to_string(x) + "," + to_string(y) + "," + to_string(z));
        break;
      }
  }
  const RationalSymMatrix a = a4_pattern(3, 1, 2);
  const bool pd = ldlt_pivoted(a).verdict == PsdVerdict::PSD && jacobi_eigen(a).min_eigenvalue > 0;
  if (!pd) out.fail("(3,1,2) pattern not positive definite");
  const ReductionBlocks b = theorem_blocks_from_oracle(
      [&](const Edge& e, const Edge& f) { return a(lex_index(e, 4), lex_index(f, 4)); }, 0);
  const Rational y_minus_z = b.b2(0, 0);
  if (!(y_minus_z < 0)) out.fail("(3,1,2) has y - z >= 0");
  if (ldlt_pivoted(b.b2).verdict != PsdVerdict::NOT_PSD) out.fail("(3,1,2) B2 certified PSD");
  if (out.pass) out.detail = "50 triples; (3,1,2) positive definite with y-z=" + to_string(y_minus_z);
  return out;
}

Outcome hessian_agreement()
{
  Outcome out;
  CoeffCache cache;
  double worst = 0;
  for (auto [n, d] : {std::pair{3, 3}, {4, 3}, {4, 4}})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const double dev = hessian_fd_check(n, d, SimplexPoint::random_interior(n, seed), kHessianStep, cache);
      worst = std::max(worst, dev);
      if (dev > kHessianTolerance) out.fail("(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ") seed " + std::to_string(seed));
    }
  if (out.pass) {
    std::ostringstream s;
    s << "max deviation " << std::scientific << std::setprecision(2) << worst;
    out.detail = s.str();
  }
  return out;
}

Outcome block_value_nonnegative()
{
  Outcome out;
  CoeffCache cache;
  std::size_t checked = 0;
  for (int m = 1; m <= 7; ++m)
    for (const Multigraph& g : enumerate_multigraphs(m)) {
      if (blockvalue(g, cache) < 0) out.fail(to_string(g));
      ++checked;
    }
  if (out.pass) out.detail = std::to_string(checked) + " multigraphs";
  return out;
}

bool report(const std::string& id, const std::string& name, const std::function<Outcome()>& run)
{
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << " -- " << o.detail << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv)
{
  const bool extended = argc > 1 && std::strcmp(argv[1], "--extended") == 0;
  bool ok = true;
  if (extended) {
    ok &= report("2x", "smallest block eigenvalue, d = 8..9", [] { return table_eigenvalues(8, 9); });
    return ok ? 0 : 1;
  }
  ok &= report("1", "multigraph counts, d = 3..10", multigraph_counts);
  ok &= report("2", "smallest block eigenvalue, d = 3..7", [] { return table_eigenvalues(3, 7); });
  ok &= report("3", "d = 3, 4 blocks exact", reference_blocks_exact);
  ok &= report("4", "minimum LDLT pivots", ldlt_certificates);
  ok &= report("5", "Hadamard decomposition of Q", hadamard_identity);
  ok &= report("6", "compression equals closed-form blocks", reduction_soundness);
  ok &= report("7", "orbit counts", orbit_counting);
  ok &= report("8", "k = 0 eigenvalue formulas", k0_pattern);
  ok &= report("9", "finite-difference Hessian", hessian_agreement);
  ok &= report("10", "block value nonnegative", block_value_nonnegative);
  return ok ? 0 : 1;
}
