#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetacode/codes.hpp"
#include "zetacode/cycle_stats.hpp"
#include "zetacode/ensemble.hpp"
#include "zetacode/graph.hpp"
#include "zetacode/io.hpp"
#include "zetacode/matrix.hpp"
#include "zetacode/parity.hpp"
#include "zetacode/zeta.hpp"

using nlohmann::json;
using namespace zetacode;

namespace {

constexpr const char* kVersion = "0.1.0";

void emit_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParseError(out_path, 0, "cannot open output file");
  f << text;
}

// deterministic top-level document; keys come out sorted by nlohmann's map
std::string json_doc(const std::string& command, const json& config, const json& seed,
                     json result) {
  json doc;
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["config"] = config;
  doc["seed"] = seed;
  doc["result"] = std::move(result);
  return doc.dump(2) + "\n";
}

std::string csv_doc(const std::string& command, const json& config, const json& seed,
                    const std::string& header, const std::vector<std::string>& rows) {
  std::ostringstream os;
  os << "# version=" << kVersion << "\n";
  os << "# command=" << command << "\n";
  os << "# seed=" << seed.dump() << "\n";
  os << "# config=" << config.dump() << "\n";
  os << header << "\n";
  for (const auto& r : rows) os << r << "\n";
  return os.str();
}

// shortest round-trip formatting, shared with the json output
std::string num(double v) { return json(v).dump(); }

std::vector<double> parse_grid(const std::string& s) {
  auto a = s.find(':');
  auto b = s.rfind(':');
  if (a == std::string::npos || b == a)
    throw std::invalid_argument("grid '" + s + "' must look like A:B:STEP");
  double lo, hi, step;
  try {
    lo = std::stod(s.substr(0, a));
    hi = std::stod(s.substr(a + 1, b - a - 1));
    step = std::stod(s.substr(b + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("grid '" + s + "' has non-numeric parts");
  }
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (hi < lo) throw std::invalid_argument("grid end must not precede its start");
  std::size_t n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(lo + step * static_cast<double>(i));
  return out;
}

ParityCheckMatrix load_parity(const std::string& alist_path, const std::string& dense_path) {
  if (!alist_path.empty() && !dense_path.empty())
    throw std::invalid_argument("pass either --alist or --dense, not both");
  if (!alist_path.empty()) return read_alist(alist_path);
  if (!dense_path.empty()) return read_dense_parity(dense_path);
  throw std::invalid_argument("a parity check matrix is required (--alist or --dense)");
}

void require_json_format(const std::string& format) {
  if (format != "json")
    throw std::invalid_argument(
        "csv output is only available for row-shaped results (ensemble, cycles, ldp)");
}

json zeta_estimate_json(const ZetaEstimate& z) {
  json j;
  j["u"] = z.u;
  j["mean"] = z.mean;
  j["stderr"] = z.stderr_mean;
  j["included"] = z.included;
  j["excluded"] = z.excluded;
  j["ill_conditioned"] = z.ill_conditioned;
  j["radius_min"] = z.radius_min;
  j["radius_median"] = z.radius_median;
  return j;
}

json tail_estimate_json(const TailEstimate& e) {
  json j;
  j["N"] = e.N;
  j["p"] = e.p;
  j["statistic"] = statistic_name(e.statistic);
  j["t"] = e.t;
  j["threshold"] = e.threshold;
  j["hits"] = e.hits;
  j["samples"] = e.samples;
  j["p_hat"] = e.p_hat;
  j["ci_lo"] = e.ci_lo;
  j["ci_hi"] = e.ci_hi;
  j["below_resolution"] = e.below_resolution;
  j["phi_hat"] = e.phi_hat;
  return j;
}

std::string tail_estimate_csv(const TailEstimate& e) {
  std::ostringstream os;
  os << e.N << "," << num(e.p) << "," << num(e.t) << "," << num(e.p_hat) << "," << num(e.ci_lo)
     << "," << num(e.ci_hi) << "," << num(e.phi_hat);
  return os.str();
}

struct CommonOpts {
  std::string out;
  std::string format = "json";
  unsigned threads = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--out", out, "output file (default: stdout)");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", threads, "worker threads, 0 = all cores");
  }
};

struct ZetaOpts {
  CommonOpts common;
  std::string graph_path;
  bool univariate = false;
  bool multivariate = false;
  std::uint32_t degree = 0;
  bool degree_given = false;
};

int run_zeta(const ZetaOpts& o) {
  require_json_format(o.common.format);
  UndirectedMultigraph g = read_edge_list(o.graph_path);
  bool multivariate = o.multivariate;
  std::uint32_t D = o.degree_given ? o.degree : static_cast<std::uint32_t>(2 * g.num_edges());

  json config;
  config["graph"] = o.graph_path;
  config["mode"] = multivariate ? "multivariate" : "univariate";
  config["degree"] = D;
  config["num_vertices"] = g.num_vertices();
  config["num_edges"] = g.num_edges();

  json result;
  if (multivariate) {
    auto vm = per_edge_variables(g.num_edges());
    result["zeta_inverse"] = multipoly_json(edge_zeta_inverse_det(g, vm, D));
  } else {
    result["zeta_inverse"] = unipoly_json(edge_zeta_inverse_det_univariate(g, D));
    result["bass"] = unipoly_json(ihara_zeta_inverse_bass(g));
  }
  emit_text(o.common.out, json_doc("zeta", config, nullptr, std::move(result)));
  return 0;
}

struct PseudoOpts {
  CommonOpts common;
  std::string alist_path, dense_path;
  std::uint32_t degree = 0;
  bool degree_given = false;
};

int run_pseudo(const PseudoOpts& o) {
  require_json_format(o.common.format);
  ParityCheckMatrix H = load_parity(o.alist_path, o.dense_path);
  std::uint32_t D = o.degree_given ? o.degree : pseudocodewords_default_truncation(H);
  auto set = pseudocodewords_from_zeta(H, D);

  json config;
  if (!o.alist_path.empty()) config["alist"] = o.alist_path;
  if (!o.dense_path.empty()) config["dense"] = o.dense_path;
  config["degree"] = D;
  config["num_bits"] = H.cols();
  config["num_checks"] = H.rows();

  json members = json::array();
  for (const auto& [e, c] : set.members) {
    std::vector<std::uint8_t> mod2(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) mod2[i] = static_cast<std::uint8_t>(e[i] % 2);
    json m;
    m["exp"] = e;
    m["coef"] = c.get_str();
    m["mod2"] = mod2;
    m["is_codeword"] = exponent_mod2_is_codeword(e, H);
    members.push_back(std::move(m));
  }
  json result;
  result["num_bits"] = set.num_bits;
  result["truncation"] = set.truncation;
  result["count"] = set.members.size();
  result["members"] = std::move(members);
  emit_text(o.common.out, json_doc("pseudo", config, nullptr, std::move(result)));
  return 0;
}

struct CoverOpts {
  CommonOpts common;
  std::string alist_path, dense_path;
  std::size_t M = 2;
  std::uint64_t seed = 0;
};

int run_cover(const CoverOpts& o) {
  require_json_format(o.common.format);
  ParityCheckMatrix H = load_parity(o.alist_path, o.dense_path);
  TannerGraph T = tanner_from_parity(H);
  auto perms = random_cover_permutations(T.graph.num_edges(), o.M, o.seed);
  json perms_echo = perms;
  TannerCover tc = tanner_cover(H, o.M, std::move(perms));

  json config;
  if (!o.alist_path.empty()) config["alist"] = o.alist_path;
  if (!o.dense_path.empty()) config["dense"] = o.dense_path;
  config["M"] = o.M;
  config["num_bits"] = H.cols();
  config["num_checks"] = H.rows();

  json words = json::array();
  std::size_t valid = 0;
  for (const auto& lifted_word : codewords_bruteforce(tc.lifted)) {
    PseudoCodeword w = pseudo_from_cover(tc, lifted_word);
    auto [proj, ok] = mod2_projection(w, o.M, H);
    if (ok) ++valid;
    json omega = json::array();
    for (const auto& q : w.omega) omega.push_back(q.get_str());
    json entry;
    entry["word"] = lifted_word;
    entry["omega"] = std::move(omega);
    entry["projection"] = proj;
    entry["projection_is_codeword"] = ok;
    words.push_back(std::move(entry));
  }

  json result;
  result["permutations"] = std::move(perms_echo);
  result["lifted_rows"] = tc.lifted.rows();
  result["lifted_cols"] = tc.lifted.cols();
  result["lifted_codewords"] = words.size();
  result["valid_projections"] = valid;
  result["pseudo_codewords"] = std::move(words);
  emit_text(o.common.out, json_doc("cover", config, o.seed, std::move(result)));
  return 0;
}

struct EnsembleOpts {
  CommonOpts common;
  std::string kind;
  std::string graph_path;
  std::size_t N = 0;
  double p = 0.0;
  std::size_t bits = 0, checks = 0, bit_degree = 0;
  double u = 0.0;
  bool u_given = false;
  std::string u_grid;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

EnsembleSpec build_spec(const EnsembleOpts& o, json& config) {
  config["kind"] = o.kind;
  if (o.kind == "point_mass") {
    if (o.graph_path.empty())
      throw std::invalid_argument("point_mass needs --graph");
    config["graph"] = o.graph_path;
    return EnsembleSpec::point_mass(read_edge_list(o.graph_path), o.seed);
  }
  if (!o.seed_given)
    throw std::invalid_argument("--seed is required for stochastic ensembles");
  if (o.kind == "erdos_renyi") {
    if (o.N == 0) throw std::invalid_argument("erdos_renyi needs --N");
    config["N"] = o.N;
    config["p"] = o.p;
    return EnsembleSpec::erdos_renyi(o.N, o.p, o.seed);
  }
  if (o.bits == 0 || o.checks == 0 || o.bit_degree == 0)
    throw std::invalid_argument("bipartite_config needs --bits, --checks and --bit-degree");
  config["bits"] = o.bits;
  config["checks"] = o.checks;
  config["bit_degree"] = o.bit_degree;
  return EnsembleSpec::bipartite_config(o.bits, o.checks, o.bit_degree, o.seed);
}

int run_ensemble(const EnsembleOpts& o) {
  if (o.u_given == !o.u_grid.empty())
    throw std::invalid_argument("pass exactly one of --u or --u-grid");
  json config;
  EnsembleSpec spec = build_spec(o, config);
  std::vector<double> us = o.u_given ? std::vector<double>{o.u} : parse_grid(o.u_grid);
  config["samples"] = o.samples;
  config["u_points"] = us;

  std::vector<ZetaEstimate> points;
  if (o.u_given)
    points.push_back(averaged_zeta(spec, o.u, o.samples, o.common.threads));
  else
    points = averaged_zeta_grid(spec, us, o.samples, o.common.threads);

  if (o.common.format == "csv") {
    std::vector<std::string> rows;
    for (const auto& z : points) {
      std::ostringstream os;
      os << num(z.u) << "," << num(z.mean) << "," << num(z.stderr_mean) << "," << z.included
         << "," << z.excluded << "," << z.ill_conditioned << "," << num(z.radius_min) << ","
         << num(z.radius_median);
      rows.push_back(os.str());
    }
    emit_text(o.common.out,
              csv_doc("ensemble", config, o.seed,
                      "u,mean,stderr,included,excluded,ill_conditioned,radius_min,radius_median",
                      rows));
    return 0;
  }
  json pts = json::array();
  for (const auto& z : points) pts.push_back(zeta_estimate_json(z));
  json result;
  result["points"] = std::move(pts);
  emit_text(o.common.out, json_doc("ensemble", config, o.seed, std::move(result)));
  return 0;
}

struct GaussianOpts {
  CommonOpts common;
  std::string graph_path;
  double u = 0.0;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::string variant = "both";
  std::size_t wick_max = 4;
};

int run_gaussian(const GaussianOpts& o) {
  require_json_format(o.common.format);
  UndirectedMultigraph g = read_edge_list(o.graph_path);
  EdgeAdjacencyMatrix adj(g);
  Mat<double> m = adj.dense();

  json config;
  config["graph"] = o.graph_path;
  config["u"] = o.u;
  config["samples"] = o.samples;
  config["variant"] = o.variant;
  config["wick_max"] = o.wick_max;

  json result;
  {
    std::size_t dim = m.rows();
    Mat<double> im = Mat<double>::identity(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) im(i, j) -= o.u * m(i, j);
    LuDet d = det_lu(im);
    if (d.singular)
      result["exact"] = nullptr;
    else
      result["exact"] = 1.0 / d.value;
  }

  json estimates;
  auto add_estimate = [&](const char* name, GaussianVariant v) {
    GaussianEstimate est = gaussian_det_estimator(m, o.u, o.samples, v, o.seed, o.common.threads);
    json j;
    j["mean"] = est.mean;
    j["stderr"] = est.stderr_mean;
    j["samples"] = est.samples;
    estimates[name] = std::move(j);
  };
  if (o.variant == "complex" || o.variant == "both")
    add_estimate("complex_gaussian", GaussianVariant::complex_gaussian);
  if (o.variant == "real" || o.variant == "both")
    add_estimate("paper_real", GaussianVariant::paper_real);
  result["estimates"] = std::move(estimates);

  Mat<mpz_class> Bz = adj.dense_int();
  Mat<mpq_class> Bq(Bz.rows(), Bz.cols());
  for (std::size_t i = 0; i < Bz.rows(); ++i)
    for (std::size_t j = 0; j < Bz.cols(); ++j) Bq(i, j) = mpq_class(Bz(i, j));
  json wick = json::array();
  double partial = 0.0;
  for (std::size_t k = 0; k <= o.wick_max; ++k) {
    WickCoefficient c = wick_coefficient(Bq, k);
    partial += c.value.get_d() * std::pow(o.u, static_cast<double>(k));
    json j;
    j["k"] = k;
    j["value"] = c.value.get_str();
    wick.push_back(std::move(j));
  }
  result["wick"] = std::move(wick);
  result["real_series_partial_sum"] = partial;
  emit_text(o.common.out, json_doc("gaussian", config, o.seed, std::move(result)));
  return 0;
}

struct CyclesOpts {
  CommonOpts common;
  std::string graph_path;
  std::uint32_t degree = 8;
};

int run_cycles(const CyclesOpts& o) {
  if (o.degree < 2) throw std::invalid_argument("--degree must be at least 2");
  UndirectedMultigraph g = read_edge_list(o.graph_path);

  json config;
  config["graph"] = o.graph_path;
  config["degree"] = o.degree;
  config["num_vertices"] = g.num_vertices();
  config["num_edges"] = g.num_edges();

  auto counts = prime_cycle_length_counts(prime_cycles(g, o.degree), o.degree);
  auto walks = closed_walk_counts(g, o.degree);

  if (o.common.format == "csv") {
    std::vector<std::string> rows;
    for (std::uint32_t m = 1; m <= o.degree; ++m) {
      std::ostringstream os;
      os << m << "," << counts[m] << "," << walks[m - 1].get_str();
      rows.push_back(os.str());
    }
    emit_text(o.common.out,
              csv_doc("cycles", config, nullptr, "length,prime_classes,closed_walks", rows));
    return 0;
  }

  json census = json::array();
  for (std::uint32_t m = 1; m <= o.degree; ++m) {
    json row;
    row["length"] = m;
    row["prime_classes"] = counts[m];
    row["closed_walks"] = walks[m - 1].get_str();
    census.push_back(std::move(row));
  }
  json result;
  result["simple"] = g.is_simple();
  if (g.is_simple()) {
    result["triangles"] = count_triangles(g);
    result["four_cycles"] = count_4cycles(g);
  }
  result["census"] = std::move(census);
  emit_text(o.common.out, json_doc("cycles", config, nullptr, std::move(result)));
  return 0;
}

struct LdpOpts {
  CommonOpts common;
  std::string statistic = "triangles";
  std::size_t N = 0;
  std::vector<std::size_t> n_list;
  double p = 0.0;
  double t = 0.0;
  bool t_given = false;
  std::string t_grid;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

int run_ldp(const LdpOpts& o) {
  CycleStatistic stat =
      o.statistic == "triangles" ? CycleStatistic::triangles : CycleStatistic::four_cycles;
  json config;
  config["statistic"] = o.statistic;
  config["p"] = o.p;
  config["samples"] = o.samples;

  std::vector<TailEstimate> estimates;
  json probe_json;
  if (!o.n_list.empty()) {
    if (!o.t_given || !o.t_grid.empty())
      throw std::invalid_argument("rate scaling over --n-list needs a single --t");
    if (o.N != 0) throw std::invalid_argument("pass either --N or --n-list, not both");
    config["n_list"] = o.n_list;
    config["t"] = o.t;
    ScalingProbe probe =
        rate_scaling_probe(o.p, o.t, o.n_list, o.samples, stat, o.seed, o.common.threads);
    estimates = probe.per_n;
    probe_json["phi_min"] = probe.phi_min;
    probe_json["phi_max"] = probe.phi_max;
    probe_json["spread"] = probe.spread;
    probe_json["any_below_resolution"] = probe.any_below_resolution;
  } else {
    if (o.N == 0) throw std::invalid_argument("tail estimation needs --N (or --n-list)");
    if (o.t_given == !o.t_grid.empty())
      throw std::invalid_argument("pass exactly one of --t or --t-grid");
    std::vector<double> ts = o.t_given ? std::vector<double>{o.t} : parse_grid(o.t_grid);
    config["N"] = o.N;
    config["t_points"] = ts;
    EnsembleSpec spec = EnsembleSpec::erdos_renyi(o.N, o.p, o.seed);
    estimates = tail_curve(spec, stat, ts, o.samples, o.common.threads);
  }

  if (o.common.format == "csv") {
    std::vector<std::string> rows;
    rows.reserve(estimates.size());
    for (const auto& e : estimates) rows.push_back(tail_estimate_csv(e));
    emit_text(o.common.out,
              csv_doc("ldp", config, o.seed, "N,p,t,p_hat,ci_lo,ci_hi,phi_hat", rows));
    return 0;
  }
  json rows = json::array();
  for (const auto& e : estimates) rows.push_back(tail_estimate_json(e));
  json result;
  result["estimates"] = std::move(rows);
  if (!probe_json.is_null()) result["probe"] = std::move(probe_json);
  emit_text(o.common.out, json_doc("ldp", config, o.seed, std::move(result)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge and Ihara zeta functions, cycle-code pseudo-codewords, and"
               " ensemble-averaged cycle statistics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ZetaOpts zeta_opts;
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta function of a graph file");
  zeta_opts.common.attach(zeta_cmd);
  zeta_cmd->add_option("--graph", zeta_opts.graph_path, "edge list file")->required();
  auto* uni = zeta_cmd->add_flag("--univariate", zeta_opts.univariate, "single-variable form");
  zeta_cmd->add_flag("--multivariate", zeta_opts.multivariate, "one variable per edge")
      ->excludes(uni);
  zeta_cmd->add_option("--degree", zeta_opts.degree, "truncation degree (default 2|E|)")
      ->each([&](const std::string&) { zeta_opts.degree_given = true; });

  PseudoOpts pseudo_opts;
  auto* pseudo_cmd = app.add_subcommand("pseudo", "zeta pseudo-codeword set of a cycle code");
  pseudo_opts.common.attach(pseudo_cmd);
  pseudo_cmd->add_option("--alist", pseudo_opts.alist_path, "alist parity check file");
  pseudo_cmd->add_option("--dense", pseudo_opts.dense_path, "dense 0/1 parity check file");
  pseudo_cmd->add_option("--degree", pseudo_opts.degree, "truncation degree (default 2n)")
      ->each([&](const std::string&) { pseudo_opts.degree_given = true; });

  CoverOpts cover_opts;
  auto* cover_cmd = app.add_subcommand("cover", "random M-cover lift and projection check");
  cover_opts.common.attach(cover_cmd);
  cover_cmd->add_option("--alist", cover_opts.alist_path, "alist parity check file");
  cover_cmd->add_option("--dense", cover_opts.dense_path, "dense 0/1 parity check file");
  cover_cmd->add_option("--M", cover_opts.M, "cover degree")->check(CLI::PositiveNumber);
  cover_cmd->add_option("--seed", cover_opts.seed, "permutation seed")->required();

  EnsembleOpts ens_opts;
  auto* ens_cmd = app.add_subcommand("ensemble", "averaged zeta over a u-grid");
  ens_opts.common.attach(ens_cmd);
  ens_cmd->add_option("--kind", ens_opts.kind, "ensemble kind")
      ->check(CLI::IsMember({"point_mass", "erdos_renyi", "bipartite_config"}))
      ->required();
  ens_cmd->add_option("--graph", ens_opts.graph_path, "edge list file for point_mass");
  ens_cmd->add_option("--N", ens_opts.N, "erdos_renyi vertex count");
  ens_cmd->add_option("--p", ens_opts.p, "erdos_renyi edge probability");
  ens_cmd->add_option("--bits", ens_opts.bits, "bipartite_config bit count");
  ens_cmd->add_option("--checks", ens_opts.checks, "bipartite_config check count");
  ens_cmd->add_option("--bit-degree", ens_opts.bit_degree, "bipartite_config bit degree");
  ens_cmd->add_option("--u", ens_opts.u, "single evaluation point")
      ->each([&](const std::string&) { ens_opts.u_given = true; });
  ens_cmd->add_option("--u-grid", ens_opts.u_grid, "grid A:B:STEP");
  ens_cmd->add_option("--samples", ens_opts.samples, "sample count");
  ens_cmd->add_option("--seed", ens_opts.seed, "sampling seed")
      ->each([&](const std::string&) { ens_opts.seed_given = true; });

  GaussianOpts gauss_opts;
  auto* gauss_cmd = app.add_subcommand("gaussian", "gaussian determinant estimator harness");
  gauss_opts.common.attach(gauss_cmd);
  gauss_cmd->add_option("--graph", gauss_opts.graph_path, "edge list file")->required();
  gauss_cmd->add_option("--u", gauss_opts.u, "evaluation point")->required();
  gauss_cmd->add_option("--samples", gauss_opts.samples, "sample count");
  gauss_cmd->add_option("--seed", gauss_opts.seed, "sampling seed")->required();
  gauss_cmd->add_option("--variant", gauss_opts.variant, "estimator variant")
      ->check(CLI::IsMember({"complex", "real", "both"}));
  gauss_cmd->add_option("--wick-max", gauss_opts.wick_max, "highest exact coefficient")
      ->check(CLI::Range(std::size_t{0}, std::size_t{8}));

  CyclesOpts cyc_opts;
  auto* cyc_cmd = app.add_subcommand("cycles", "prime cycle and short cycle census");
  cyc_opts.common.attach(cyc_cmd);
  cyc_cmd->add_option("--graph", cyc_opts.graph_path, "edge list file")->required();
  cyc_cmd->add_option("--degree", cyc_opts.degree, "census length cap");

  LdpOpts ldp_opts;
  auto* ldp_cmd = app.add_subcommand("ldp", "tail probabilities and rate scaling");
  ldp_opts.common.attach(ldp_cmd);
  ldp_cmd->add_option("--statistic", ldp_opts.statistic, "cycle statistic")
      ->check(CLI::IsMember({"triangles", "four_cycles"}));
  ldp_cmd->add_option("--N", ldp_opts.N, "vertex count");
  ldp_cmd->add_option("--n-list", ldp_opts.n_list, "vertex counts for rate scaling")
      ->delimiter(',');
  ldp_cmd->add_option("--p", ldp_opts.p, "edge probability")->required();
  ldp_cmd->add_option("--t", ldp_opts.t, "density threshold")
      ->each([&](const std::string&) { ldp_opts.t_given = true; });
  ldp_cmd->add_option("--t-grid", ldp_opts.t_grid, "grid A:B:STEP");
  ldp_cmd->add_option("--samples", ldp_opts.samples, "sample count");
  ldp_cmd->add_option("--seed", ldp_opts.seed, "sampling seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (zeta_cmd->parsed()) return run_zeta(zeta_opts);
    if (pseudo_cmd->parsed()) return run_pseudo(pseudo_opts);
    if (cover_cmd->parsed()) return run_cover(cover_opts);
    if (ens_cmd->parsed()) return run_ensemble(ens_opts);
    if (gauss_cmd->parsed()) return run_gaussian(gauss_opts);
    if (cyc_cmd->parsed()) return run_cycles(cyc_opts);
    if (ldp_cmd->parsed()) return run_ldp(ldp_opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
