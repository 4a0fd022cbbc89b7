#include "fdconvex/hessian.hpp"
#include "fdconvex/multigraph.hpp"
#include "fdconvex/pipeline.hpp"
#include "fdconvex/reduction.hpp"
#include "fdconvex/repset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>

using namespace fdconvex;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotProven = 2;

constexpr double kFiniteDifferenceStep = 1e-4;

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

void print_matrix(const char* name, const RationalSymMatrix& m)
{
  std::cout << name << " (order " << m.order() << ")\n";
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) std::cout << (j ? " " : "  ") << to_string(m(i, j));
    std::cout << "\n";
  }
}

int run_enumerate(int edges, const std::string& format)
{
  const auto graphs = enumerate_multigraphs(edges);
  if (format == "json") {
    ordered_json doc;
    doc["edges"] = edges;
    doc["count"] = graphs.size();
    doc["multigraphs"] = ordered_json::array();
    for (const auto& g : graphs) doc["multigraphs"].push_back(to_string(g));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "count " << graphs.size() << "\n";
    for (const auto& g : graphs) std::cout << to_string(g) << "\n";
  }
  return kExitOk;
}

int run_hessian_check(int d, int n, int samples, std::uint64_t seed)
{
  CoeffCache cache;
  std::cout << std::scientific << std::setprecision(3);
  for (int s = 0; s < samples; ++s) {
    const SimplexPoint x = SimplexPoint::random_interior(n, seed + static_cast<std::uint64_t>(s));
    std::cout << "sample " << s << " max_deviation " << hessian_fd_check(n, d, x, kFiniteDifferenceStep, cache) << "\n";
  }
  return kExitOk;
}

int run_orbit_count(int k, int n)
{
  std::cout << "formula " << orbit_count_formula(k) << "\n";
  std::cout << "bruteforce " << orbit_count_bruteforce(k, n) << "\n";
  std::cout << "square_sum " << representative_square_sum(k) << "\n";
  return kExitOk;
}

int run_blocks(const std::string& text, const std::string& format, bool scaled)
{
  Multigraph g = parse_multigraph(text);
  if (!g.labeled_on_prefix()) {
    g = canonical_form(g);
    std::cerr << "relabeled to " << to_string(g) << "\n";
  }
  CoeffCache cache;
  const ReductionBlocks b = theorem_blocks(g, cache, scaled);
  if (format == "json") {
    ordered_json doc;
    doc["edges"] = to_string(g);
    doc["k"] = b.k;
    doc["scaled"] = scaled;
    doc["scalar"] = to_string(b.scalar);
    doc["x"] = to_string(b.classes.x);
    doc["y"] = to_string(b.classes.y);
    doc["z"] = to_string(b.classes.z);
    doc["b1"] = matrix_json(b.b1);
    doc["b2"] = matrix_json(b.b2);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "edges " << to_string(g) << "\nk " << b.k << "\nscalar " << to_string(b.scalar) << "\n";
    print_matrix("B1", b.b1);
    print_matrix("B2", b.b2);
  }
  return kExitOk;
}

int run_verify(int from, int to, RunConfig cfg)
{
  if (to < from) throw std::invalid_argument("--to must not be below --degree");
  cfg.degree_from = from;
  cfg.degree_to = to;
  std::vector<DegreeReport> reports;
  for (int d = from; d <= to; ++d) {
    if (d >= 10) std::cerr << "d=" << d << ": extended runtime expected\n";
    reports.push_back(verify_degree(d, cfg));
    std::cerr << "d=" << d << ": " << reports.back().count() << " multigraphs in " << std::fixed
              << std::setprecision(2) << reports.back().wall_seconds << " s\n";
    if (cfg.certificate_dir) write_certificates(reports.back(), *cfg.certificate_dir);
  }
  emit_report(std::cout, reports, cfg.format, cfg.dump_blocks);
  for (const auto& r : reports)
    if (r.verdict != DegreeVerdict::CONVEX) return kExitNotProven;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact convexity certification for the union-size polynomials f_d"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "list multigraphs with a given number of edges");
  int edges = 1;
  std::string enum_format = "text";
  enumerate->add_option("--edges", edges)->required()->check(CLI::Range(1, 12));
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"text", "json"}));

  auto* hcheck = app.add_subcommand("hessian-check", "finite differences against the coefficient Hessian");
  int h_degree = 3, h_n = 3, h_samples = 5;
  std::uint64_t h_seed = 1;
  hcheck->add_option("--degree", h_degree)->required()->check(CLI::Range(2, 8));
  hcheck->add_option("--n", h_n)->required()->check(CLI::Range(2, 12));
  hcheck->add_option("--samples", h_samples)->check(CLI::Range(1, 1000));
  hcheck->add_option("--seed", h_seed);

  auto* orbits = app.add_subcommand("orbit-count", "orbits of S_{n-k} on pairs of edges");
  int o_k = 0, o_n = 4;
  orbits->add_option("--k", o_k)->required()->check(CLI::NonNegativeNumber);
  orbits->add_option("--n", o_n)->required();

  auto* blocks = app.add_subcommand("blocks", "reduction blocks of one multigraph");
  std::string b_graph;
  std::string b_format = "text";
  bool b_no_scale = false;
  blocks->add_option("--multigraph", b_graph)->required();
  blocks->add_option("--format", b_format)->check(CLI::IsMember({"text", "json"}));
  blocks->add_flag("--no-scale", b_no_scale);

  auto* verify = app.add_subcommand("verify", "certify every multigraph of a degree");
  int v_from = 3;
  std::optional<int> v_to;
  unsigned v_jobs = 1;
  std::string v_format = "text";
  std::string v_certs;
  bool v_dump = false, v_no_scale = false;
  verify->add_option("--degree", v_from)->required()->check(CLI::Range(3, 20));
  verify->add_option("--to", v_to)->check(CLI::Range(3, 20));
  verify->add_option("--jobs", v_jobs)->check(CLI::Range(1u, 256u));
  verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--certificates", v_certs);
  verify->add_flag("--dump-blocks", v_dump);
  verify->add_flag("--no-scale", v_no_scale);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*enumerate) return run_enumerate(edges, enum_format);
    if (*hcheck) return run_hessian_check(h_degree, h_n, h_samples, h_seed);
    if (*orbits) return run_orbit_count(o_k, o_n);
    if (*blocks) return run_blocks(b_graph, b_format, !b_no_scale);
    if (*verify) {
      RunConfig cfg;
      cfg.jobs = v_jobs;
      cfg.format = parse_report_format(v_format);
      if (!v_certs.empty()) cfg.certificate_dir = v_certs;
      cfg.dump_blocks = v_dump;
      cfg.scaled = !v_no_scale;
      cfg.cache_mode = cache_mode_from_env();
      return run_verify(v_from, v_to.value_or(v_from), cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
