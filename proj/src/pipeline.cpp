#include "fdconvex/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fdconvex {

const char* to_string(DegreeVerdict v)
{
  return v == DegreeVerdict::CONVEX ? "CONVEX" : "NOT_PROVEN";
}

ReportFormat parse_report_format(const std::string& name)
{
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format '" + name + "'");
}

CacheMode cache_mode_from_env()
{
  const char* raw = std::getenv("COEFF_CACHE_MODE");
  if (raw == nullptr || std::string(raw).empty() || std::string(raw) == "shared") return CacheMode::Shared;
  if (std::string(raw) == "private") return CacheMode::Private;
  throw std::invalid_argument("COEFF_CACHE_MODE must be 'shared' or 'private'");
}

bool MultigraphRecord::proven() const
{
  return scalar >= 0 && b1_verdict == PsdVerdict::PSD && b2_verdict == PsdVerdict::PSD;
}

double MultigraphRecord::lambda_min_blocks() const
{
  return std::min(b1_lambda_min, b2_lambda_min);
}

double MultigraphRecord::lambda_min_with_scalar() const
{
  return std::min(lambda_min_blocks(), scalar.get_d());
}

std::optional<Rational> MultigraphRecord::min_pivot_blocks() const
{
  if (b1_natural.verdict != PsdVerdict::PSD || b2_natural.verdict != PsdVerdict::PSD) return std::nullopt;
  auto a = b1_natural.min_pivot();
  auto b = b2_natural.min_pivot();
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::optional<Rational> MultigraphRecord::min_pivot_with_scalar() const
{
  auto blocks = min_pivot_blocks();
  if (!blocks) return std::nullopt;
  return std::min(*blocks, scalar);
}

MultigraphRecord certify_multigraph(const Multigraph& g, CoeffCache& cache, bool scaled, bool keep_blocks)
{
  MultigraphRecord rec;
  rec.graph = g;
  rec.k = g.k();
  rec.gamma_factorial = exponent_factorial(g.exponent());
  ReductionBlocks blocks = theorem_blocks(g, cache, scaled);
  rec.scalar = blocks.scalar;

  rec.b1_natural = ldlt_natural(blocks.b1);
  rec.b2_natural = ldlt_natural(blocks.b2);
  rec.b1_verdict = ldlt_pivoted(blocks.b1).verdict;
  rec.b2_verdict = ldlt_pivoted(blocks.b2).verdict;

  const EigenReport e1 = jacobi_eigen(blocks.b1);
  const EigenReport e2 = jacobi_eigen(blocks.b2);
  if (!e1.converged || !e2.converged) {
    throw std::runtime_error("Jacobi did not converge for " + to_string(g));
  }
  rec.b1_lambda_min = e1.min_eigenvalue;
  rec.b2_lambda_min = e2.min_eigenvalue;
  if (keep_blocks) rec.blocks = std::move(blocks);
  return rec;
}

DegreeReport verify_degree(int d, const RunConfig& cfg)
{
  if (d < 3) throw std::invalid_argument("verify_degree needs d >= 3");
  const auto start = std::chrono::steady_clock::now();

  const std::vector<Multigraph> graphs = enumerate_multigraphs(d - 2);
  DegreeReport report;
  report.degree = d;
  report.extended_runtime = d >= 10;
  report.scaled = cfg.scaled;
  report.records.resize(graphs.size());

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(graphs.size())));
  CoeffCache shared_cache;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    std::unique_ptr<CoeffCache> own;
    CoeffCache* cache = &shared_cache;
    if (cfg.cache_mode == CacheMode::Private) {
      own = std::make_unique<CoeffCache>();
      cache = own.get();
    }
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        report.records[i] = certify_multigraph(graphs[i], *cache, cfg.scaled, cfg.dump_blocks);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  report.lambda_min_blocks = std::numeric_limits<double>::infinity();
  report.lambda_min_with_scalar = std::numeric_limits<double>::infinity();
  bool pivots_complete = true;
  for (const auto& rec : report.records) {
    report.lambda_min_blocks = std::min(report.lambda_min_blocks, rec.lambda_min_blocks());
    report.lambda_min_with_scalar = std::min(report.lambda_min_with_scalar, rec.lambda_min_with_scalar());
    if (!rec.proven()) report.verdict = DegreeVerdict::NOT_PROVEN;
    auto pb = rec.min_pivot_blocks();
    auto ps = rec.min_pivot_with_scalar();
    if (!pb || !ps) {
      pivots_complete = false;
      continue;
    }
    if (!report.min_pivot_blocks || *pb < *report.min_pivot_blocks) report.min_pivot_blocks = *pb;
    if (!report.min_pivot_with_scalar || *ps < *report.min_pivot_with_scalar) report.min_pivot_with_scalar = *ps;
  }
  if (!pivots_complete) {
    report.min_pivot_blocks.reset();
    report.min_pivot_with_scalar.reset();
  }

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json rationals(const std::vector<Rational>& values)
{
  ordered_json out = ordered_json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

ordered_json matrix_json(const RationalSymMatrix& m)
{
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json optional_rational(const std::optional<Rational>& q)
{
  return q ? ordered_json(to_string(*q)) : ordered_json(nullptr);
}

ordered_json record_json(const MultigraphRecord& rec, bool dump_blocks)
{
  ordered_json r;
  r["edges"] = to_string(rec.graph);
  r["k"] = rec.k;
  r["scalar"] = to_string(rec.scalar);
  r["b1_lambda_min"] = rec.b1_lambda_min;
  r["b2_lambda_min"] = rec.b2_lambda_min;
  r["b1_pivots"] = rationals(rec.b1_natural.pivots);
  r["b2_pivots"] = rationals(rec.b2_natural.pivots);
  r["b1_verdict"] = to_string(rec.b1_verdict);
  r["b2_verdict"] = to_string(rec.b2_verdict);
  r["verdict"] = rec.proven() ? "PSD" : "NOT_PSD";
  if (dump_blocks && rec.blocks) {
    r["b1"] = matrix_json(rec.blocks->b1);
    r["b2"] = matrix_json(rec.blocks->b2);
  }
  return r;
}

ordered_json report_json(const DegreeReport& report, bool dump_blocks)
{
  ordered_json j;
  j["degree"] = report.degree;
  j["count"] = report.count();
  j["lambda_min"] = report.lambda_min_blocks;
  j["lambda_min_with_scalar"] = report.lambda_min_with_scalar;
  j["min_pivot"] = optional_rational(report.min_pivot_blocks);
  j["min_pivot_with_scalar"] = optional_rational(report.min_pivot_with_scalar);
  j["scaled"] = report.scaled;
  j["extended_runtime"] = report.extended_runtime;
  j["verdict"] = to_string(report.verdict);
  ordered_json records = ordered_json::array();
  for (const auto& rec : report.records) records.push_back(record_json(rec, dump_blocks));
  j["records"] = std::move(records);
  return j;
}

std::string fixed8(double v)
{
  std::ostringstream s;
  s << std::fixed << std::setprecision(8) << v;
  return s.str();
}

}  // namespace

void emit_report(std::ostream& out, const std::vector<DegreeReport>& reports, ReportFormat format, bool dump_blocks)
{
  switch (format) {
    case ReportFormat::Text: {
      out << "d | multigraphs | lambda_min\n";
      for (const auto& r : reports) out << r.degree << " | " << r.count() << " | " << fixed8(r.lambda_min_blocks) << "\n";
      out << "\n";
      for (const auto& r : reports) {
        out << "d=" << r.degree << ": " << to_string(r.verdict);
        out << "  min_pivot=" << (r.min_pivot_blocks ? to_string(*r.min_pivot_blocks) : "-");
        out << "  min_pivot_with_scalar=" << (r.min_pivot_with_scalar ? to_string(*r.min_pivot_with_scalar) : "-");
        out << "  lambda_min_with_scalar=" << fixed8(r.lambda_min_with_scalar);
        if (r.extended_runtime) out << "  (extended runtime)";
        out << "\n";
        if (dump_blocks) {
          for (const auto& rec : r.records) {
            if (!rec.blocks) continue;
            out << "  " << to_string(rec.graph) << "  k=" << rec.k << "  scalar=" << to_string(rec.scalar) << "\n";
            for (const auto* m : {&rec.blocks->b1, &rec.blocks->b2}) {
              out << "  " << (m == &rec.blocks->b1 ? "B1" : "B2") << "\n";
              for (std::size_t i = 0; i < m->order(); ++i) {
                out << "   ";
                for (std::size_t j = 0; j < m->order(); ++j) out << ' ' << to_string((*m)(i, j));
                out << "\n";
              }
            }
          }
        }
      }
      break;
    }
    case ReportFormat::Json: {
      ordered_json doc;
      if (reports.size() == 1) {
        doc = report_json(reports.front(), dump_blocks);
      } else {
        doc = ordered_json::array();
        for (const auto& r : reports) doc.push_back(report_json(r, dump_blocks));
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv: {
      out << "d,multigraphs,lambda_min,verdict\n";
      for (const auto& r : reports)
        out << r.degree << ',' << r.count() << ',' << fixed8(r.lambda_min_blocks) << ',' << to_string(r.verdict) << "\n";
      break;
    }
  }
}

void write_certificates(const DegreeReport& report, const std::filesystem::path& dir)
{
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    ordered_json c;
    c["degree"] = report.degree;
    c["edges"] = to_string(rec.graph);
    c["k"] = rec.k;
    c["scaled"] = report.scaled;
    c["scalar"] = to_string(rec.scalar);
    c["b1_pivots"] = rationals(rec.b1_natural.pivots);
    c["b2_pivots"] = rationals(rec.b2_natural.pivots);
    c["min_pivot"] = optional_rational(rec.min_pivot_blocks());
    c["min_pivot_with_scalar"] = optional_rational(rec.min_pivot_with_scalar());
    c["b1_lambda_min"] = rec.b1_lambda_min;
    c["b2_lambda_min"] = rec.b2_lambda_min;
    c["verdict"] = rec.proven() ? "PSD" : "NOT_PSD";
    for (const auto* cert : {&rec.b1_natural, &rec.b2_natural}) {
      if (cert->verdict != PsdVerdict::NOT_PSD) continue;
      ordered_json w;
      w["block"] = cert == &rec.b1_natural ? "B1" : "B2";
      w["vector"] = rationals(cert->witness);
      w["value"] = to_string(cert->witness_value);
      c["witnesses"].push_back(std::move(w));
    }
    const auto path = dir / ("d" + std::to_string(report.degree) + "_" + std::to_string(i) + ".json");
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << c.dump(2) << "\n";
    if (!file) throw std::runtime_error("write failed for " + path.string());
  }
}

ExtremeObservation observe_extremes(const DegreeReport& report)
{
  ExtremeObservation obs;
  if (report.records.empty()) return obs;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    if (rec.lambda_min_blocks() < report.records[obs.argmin].lambda_min_blocks()) obs.argmin = i;
    if (rec.b1_lambda_min <= rec.b2_lambda_min) ++obs.minimum_in_b1;
  }
  obs.attained_at_matching = report.records[obs.argmin].graph.is_matching();
  obs.all_minima_in_b1 = obs.minimum_in_b1 == report.records.size();
  return obs;
}

}  // namespace fdconvex
