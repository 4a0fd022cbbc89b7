#pragma once

#include "fdconvex/multigraph.hpp"
#include "fdconvex/psdcert.hpp"
#include "fdconvex/reduction.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fdconvex {

enum class ReportFormat { Text, Json, Csv };
enum class CacheMode { Shared, Private };
enum class DegreeVerdict { CONVEX, NOT_PROVEN };

const char* to_string(DegreeVerdict v);
ReportFormat parse_report_format(const std::string& name);
/// COEFF_CACHE_MODE=shared|private; shared when unset. Throws
/// std::invalid_argument on any other value.
CacheMode cache_mode_from_env();

struct RunConfig {
  int degree_from = 3;
  int degree_to = 3;
  unsigned jobs = 1;
  ReportFormat format = ReportFormat::Text;
  std::optional<std::filesystem::path> certificate_dir;
  bool dump_blocks = false;
  bool scaled = true;
  CacheMode cache_mode = CacheMode::Shared;
};

/// Result of reducing and certifying a single multigraph.
struct MultigraphRecord {
  Multigraph graph;
  int k = 0;
  /// γ!, the factor between the scaled and unscaled blocks.
  BigInt gamma_factorial;
  Rational scalar;
  double b1_lambda_min = 0;
  double b2_lambda_min = 0;
  /// Natural-order LDLᵀ pivots.
  PsdCertificate b1_natural;
  PsdCertificate b2_natural;
  /// Verdicts from the pivoted factorization.
  PsdVerdict b1_verdict = PsdVerdict::PSD;
  PsdVerdict b2_verdict = PsdVerdict::PSD;
  /// Present only with RunConfig::dump_blocks.
  std::optional<ReductionBlocks> blocks;

  bool proven() const;
  double lambda_min_blocks() const;
  double lambda_min_with_scalar() const;
  /// Smallest natural-order pivot of b1 and b2, and the same including the
  /// scalar as a 1×1 matrix. Empty when a block is refuted.
  std::optional<Rational> min_pivot_blocks() const;
  std::optional<Rational> min_pivot_with_scalar() const;
};

struct DegreeReport {
  int degree = 0;
  std::vector<MultigraphRecord> records;  // canonical multigraph order
  double lambda_min_blocks = 0;
  double lambda_min_with_scalar = 0;
  std::optional<Rational> min_pivot_blocks;
  std::optional<Rational> min_pivot_with_scalar;
  DegreeVerdict verdict = DegreeVerdict::CONVEX;
  /// d >= 10: beyond the range computed in practice so far.
  bool extended_runtime = false;
  bool scaled = true;
  double wall_seconds = 0;

  std::size_t count() const { return records.size(); }
};

/// Reduction and exact certification of one multigraph.
MultigraphRecord certify_multigraph(const Multigraph& g, CoeffCache& cache, bool scaled, bool keep_blocks);

/// Every multigraph with d-2 edges, fanned out over cfg.jobs threads.
/// Throws std::invalid_argument for d < 3 (f_2 is handled separately).
DegreeReport verify_degree(int d, const RunConfig& cfg);

/// Byte-deterministic serialization; wall time is not written.
void emit_report(std::ostream& out, const std::vector<DegreeReport>& reports, ReportFormat format,
                 bool dump_blocks = false);

/// One JSON file per multigraph in `dir`, named d<D>_<index>.json.
void write_certificates(const DegreeReport& report, const std::filesystem::path& dir);

struct ExtremeObservation {
  std::size_t argmin = 0;  // record attaining lambda_min_blocks
  bool attained_at_matching = false;
  /// Records whose smaller block eigenvalue sits in b1.
  std::size_t minimum_in_b1 = 0;
  bool all_minima_in_b1 = false;
};

ExtremeObservation observe_extremes(const DegreeReport& report);

}  // namespace fdconvex
