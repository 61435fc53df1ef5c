// turan: hypergraph Lagrangians, density arithmetic, and desk-scale probes
// of the permanent conjectures, in one binary.
//
// Exit codes: 0 success, 1 internal failure (or failed verify checks),
// 2 validation error, 3 guard violation.

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/conjectures.hpp"
#include "turan/constructions.hpp"
#include "turan/density.hpp"
#include "turan/extremal.hpp"
#include "turan/hypergraph.hpp"
#include "turan/lagrangian.hpp"
#include "turan/verify.hpp"

#include <fstream>
#include <iostream>
#include <random>

using nlohmann::ordered_json;
using namespace turan;

namespace {

std::uint64_t resolve_seed(std::uint64_t seed) {
  if (seed != 0) return seed;
  std::random_device rd;  // seed 0 requests entropy
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

RMultigraph read_graph_arg(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  return load_graph(path);
}

void emit_graph(const RMultigraph& g, const std::string& out_path) {
  if (out_path.empty())
    std::cout << serialize_graph(g);
  else
    save_graph(g, out_path);
}

ordered_json lagrangian_json(const LagrangianReport& report) {
  ordered_json j;
  j["lambda"] = report.estimate;
  j["witness"] = report.witness;
  j["restarts"] = report.restarts_used;
  j["iterations"] = report.iterations;
  j["seed"] = report.seed;
  return j;
}

int digits_for_bits(int bits) {
  int digits = static_cast<int>(bits * 0.30103);
  return std::max(6, std::min(digits, 50));
}

struct AlgebraResult {
  std::string op;
  bool is_density = false;
  Density density;
  Scalar scalar;
  bool is_split = false;
  WeightSplit split;
};

AlgebraResult eval_algebra(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw validation_error("algebra: empty expression");
  std::string op = tokens[0];
  std::vector<std::string> args;
  int r = -1;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i] == "--r") {
      if (i + 1 >= tokens.size()) throw validation_error("algebra: --r needs a value");
      r = std::stoi(tokens[++i]);
    } else {
      args.push_back(tokens[i]);
    }
  }
  auto need_args = [&](std::size_t k) {
    if (args.size() != k)
      throw validation_error("algebra: '" + op + "' expects " + std::to_string(k) +
                             " argument(s)");
  };
  auto need_r = [&]() {
    if (r < 0) throw validation_error("algebra: '" + op + "' needs --r");
    return r;
  };
  auto scalar_arg = [&](std::size_t i) { return Scalar(parse_rational(args[i])); };

  AlgebraResult res;
  res.op = op;
  if (op == "star" || op == "circ") {
    need_args(2);
    Density a = parse_density(args[0]);
    Density b = parse_density(args[1]);
    res.is_density = true;
    res.density = op == "star" ? star_op(a, b) : circ_op(a, b);
  } else if (op == "oplus") {
    need_args(2);
    res.scalar = oplus(scalar_arg(0), scalar_arg(1), need_r());
  } else if (op == "otimes2") {
    need_args(2);
    res.scalar = otimes2(scalar_arg(0), scalar_arg(1));
  } else if (op == "g") {
    need_args(3);
    res.scalar = g_func(scalar_arg(0), scalar_arg(1), need_r(), scalar_arg(2));
  } else if (op == "argmax") {
    need_args(2);
    res.scalar = g_argmax(scalar_arg(0), scalar_arg(1), need_r());
  } else if (op == "h") {
    need_args(1);
    res.scalar = h_map(scalar_arg(0), need_r());
  } else if (op == "hinv") {
    need_args(1);
    res.scalar = h_inv(scalar_arg(0), need_r());
  } else if (op == "j") {
    need_args(1);
    res.scalar = j_map(scalar_arg(0), need_r());
  } else if (op == "jump") {
    need_args(3);
    res.is_density = true;
    res.density = jump_image(parse_rational(args[0]), std::stoi(args[1]), std::stoi(args[2]));
  } else if (op == "splitmax") {
    need_args(2);
    res.is_split = true;
    res.split = weight_split_max(std::stoi(args[0]), std::stoi(args[1]));
  } else if (op == "incbound") {
    need_args(3);
    res.scalar = oplus_increment_bound(scalar_arg(0), scalar_arg(1), scalar_arg(2), need_r());
  } else {
    throw validation_error("algebra: unknown operation '" + op +
                           "' (try star, circ, oplus, otimes2, g, argmax, h, hinv, j, "
                           "jump, splitmax, incbound)");
  }
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergraph Lagrangians and an algebra of Turán densities"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  int exit_code = 0;

  // ---- lagrangian ----------------------------------------------------------
  auto* lag = app.add_subcommand("lagrangian", "Estimate lambda(G) from below");
  std::string lag_graph;
  LambdaConfig lag_config;
  lag->add_option("--graph", lag_graph, "Hypergraph file ('-' for stdin)")->required();
  lag->add_option("--restarts", lag_config.restarts, "Random restarts (default 64)");
  lag->add_option("--max-iters", lag_config.max_iters, "Ascent iterations per start");
  lag->add_option("--tol", lag_config.tol, "Relative-improvement stop (default 1e-12)");
  lag->add_option("--seed", lag_config.seed, "RNG seed; 0 draws entropy (default 1)");
  lag->add_option("--face-enum-limit", lag_config.subset_enum_limit,
                  "Enumerate support faces when v(G) is at most this (default 12)");
  lag->callback([&]() {
    lag_config.seed = resolve_seed(lag_config.seed);
    LagrangianReport report = lambda_estimate(read_graph_arg(lag_graph), lag_config);
    if (format == "csv") {
      std::cout << "lambda,restarts,iterations,seed\n"
                << format_double(report.estimate, 17) << ',' << report.restarts_used << ','
                << report.iterations << ',' << report.seed << "\n";
    } else {
      std::cout << lagrangian_json(report).dump(2) << "\n";
    }
  });

  // ---- construct -----------------------------------------------------------
  auto* con = app.add_subcommand("construct", "Product constructions on hypergraph files");
  con->require_subcommand(1);
  std::string con_a, con_b, con_out;
  int power_r = 2, power_k = 1;
  long long power_guard = 100;
  std::vector<int> blowup_sizes;
  std::vector<int> induced_keep;

  auto add_binary = [&](const std::string& name, const std::string& help,
                        RMultigraph (*fn)(const RMultigraph&, const RMultigraph&)) {
    auto* sub = con->add_subcommand(name, help);
    sub->add_option("a", con_a, "First hypergraph file")->required();
    sub->add_option("b", con_b, "Second hypergraph file")->required();
    sub->add_option("--out", con_out, "Output file (default stdout)");
    sub->callback([&, fn]() { emit_graph(fn(read_graph_arg(con_a), read_graph_arg(con_b)), con_out); });
  };
  add_binary("star", "(r+s)-graph of unions of a G-edge and an H-edge", star_product);
  add_binary("oplus", "join with all crossing r-multisets", oplus_join);
  add_binary("cross", "join with all crossing r-sets", cross_product);
  add_binary("strong", "grid-style strong product", strong_product);
  add_binary("circ", "edges completed by arbitrary multisets on the other side", circ_product);
  add_binary("union", "disjoint union", disjoint_union);

  auto* con_power = con->add_subcommand("power", "k-fold strong power of the single r-edge");
  con_power->add_option("--r", power_r, "Uniformity")->required();
  con_power->add_option("--k", power_k, "Exponent")->required();
  con_power->add_option("--vertex-guard", power_guard, "Max r^k vertices (default 100)");
  con_power->add_option("--out", con_out, "Output file (default stdout)");
  con_power->callback([&]() { emit_graph(strong_power(power_r, power_k, power_guard), con_out); });

  auto* con_j = con->add_subcommand("j", "apex over all (r-1)-multisets");
  con_j->add_option("a", con_a, "Hypergraph file")->required();
  con_j->add_option("--out", con_out, "Output file (default stdout)");
  con_j->callback([&]() { emit_graph(j_augment(read_graph_arg(con_a)), con_out); });

  auto* con_comp = con->add_subcommand("complement", "complement in the multiset universe");
  con_comp->add_option("a", con_a, "Hypergraph file")->required();
  con_comp->add_option("--out", con_out, "Output file (default stdout)");
  con_comp->callback([&]() { emit_graph(complement(read_graph_arg(con_a)), con_out); });

  auto* con_blow = con->add_subcommand("blowup", "profile blow-up (back to simple graphs)");
  con_blow->add_option("a", con_a, "Hypergraph file")->required();
  con_blow->add_option("--sizes", blowup_sizes, "Part sizes, one per vertex")->required();
  con_blow->add_option("--out", con_out, "Output file (default stdout)");
  con_blow->callback([&]() { emit_graph(blow_up(read_graph_arg(con_a), blowup_sizes), con_out); });

  auto* con_ind = con->add_subcommand("induced", "induced subgraph, relabeled");
  con_ind->add_option("a", con_a, "Hypergraph file")->required();
  con_ind->add_option("--keep", induced_keep, "Vertices to keep")->required();
  con_ind->add_option("--out", con_out, "Output file (default stdout)");
  con_ind->callback([&]() { emit_graph(induced(read_graph_arg(con_a), induced_keep), con_out); });

  // ---- algebra --------------------------------------------------------------
  auto* alg = app.add_subcommand("algebra", "Evaluate a density-arithmetic expression");
  std::vector<std::string> alg_tokens;
  int alg_precision = 166;
  alg->add_option("expr", alg_tokens, "e.g.  star (1,1) (5/9,3)  |  oplus 1/2 0 --r 4")
      ->required();
  alg->add_option("--precision", alg_precision, "Output precision in bits (default 166)");
  alg->callback([&]() {
    // allow the whole expression to be one quoted string
    std::vector<std::string> tokens;
    for (const auto& t : alg_tokens) {
      std::istringstream ss(t);
      std::string word;
      while (ss >> word) tokens.push_back(word);
    }
    AlgebraResult res = eval_algebra(tokens);
    int digits = digits_for_bits(alg_precision);
    ordered_json j;
    j["op"] = res.op;
    if (res.is_split) {
      j["x0"] = format_rational(res.split.x0);
      j["fmax"] = format_rational(res.split.fmax);
      j["x0_double"] = to_double(res.split.x0);
      j["fmax_double"] = to_double(res.split.fmax);
      if (format == "csv") {
        std::cout << "x0,fmax\n" << format_rational(res.split.x0) << ','
                  << format_rational(res.split.fmax) << "\n";
        return;
      }
    } else {
      const Scalar& value = res.is_density ? res.density.value : res.scalar;
      j["exact"] = value.exact();
      j["value"] = value.str(digits);
      j["value_double"] = value.dbl();
      if (res.is_density) j["uniformity"] = res.density.uniformity;
      if (format == "csv") {
        std::cout << "value,uniformity,exact\n" << value.str(digits) << ','
                  << (res.is_density ? std::to_string(res.density.uniformity) : "") << ','
                  << (value.exact() ? "true" : "false") << "\n";
        return;
      }
    }
    std::cout << j.dump(2) << "\n";
  });

  // ---- conjecture -----------------------------------------------------------
  auto* conj = app.add_subcommand("conjecture", "Desk-scale probes of the permanent conjectures");
  conj->require_subcommand(1);

  auto* dit = conj->add_subcommand("dittert", "Maximize psi over the matrix simplex");
  int dit_n = 2, dit_guard = 4;
  DittertConfig dit_config;
  dit->add_option("--n", dit_n, "Matrix order")->required();
  dit->add_option("--restarts", dit_config.restarts, "Random restarts (default 64)");
  dit->add_option("--max-iters", dit_config.max_iters, "Ascent iterations per start");
  dit->add_option("--seed", dit_config.seed, "RNG seed; 0 draws entropy");
  dit->add_option("--guard", dit_guard, "Max order (default 4)");
  dit->callback([&]() {
    dit_config.seed = resolve_seed(dit_config.seed);
    DittertReport report = dittert_search(dit_n, dit_config, dit_guard);
    Rational target = 2 * Rational(1, int_pow(Int(dit_n), dit_n)) -
                      Rational(factorial(dit_n), int_pow(Int(dit_n), 2 * dit_n));
    if (format == "csv") {
      std::cout << "n,best_psi,conjectured_max,restarts,iterations,seed\n"
                << dit_n << ',' << format_double(report.best_psi, 17) << ','
                << format_double(to_double(target), 17) << ',' << report.restarts_used << ','
                << report.iterations << ',' << report.seed << "\n";
      return;
    }
    ordered_json j;
    j["n"] = dit_n;
    j["best_psi"] = report.best_psi;
    j["conjectured_max"] = to_double(target);
    j["conjectured_max_exact"] = format_rational(target);
    j["witness"] = report.best.entries;
    j["restarts"] = report.restarts_used;
    j["iterations"] = report.iterations;
    j["seed"] = report.seed;
    std::cout << j.dump(2) << "\n";
  });

  auto* haj = conj->add_subcommand("hajek", "The injective-coordinate hypergraph on [n]^k");
  int haj_n = 3, haj_k = 2;
  bool haj_search = false;
  long long haj_vguard = 100, haj_eguard = 3'000'000;
  LambdaConfig haj_config;
  haj->add_option("--n", haj_n, "Alphabet/uniformity")->required();
  haj->add_option("--k", haj_k, "Word length")->required();
  haj->add_flag("--search", haj_search, "Also run the counterexample search");
  haj->add_option("--restarts", haj_config.restarts, "Search restarts (default 64)");
  haj->add_option("--max-iters", haj_config.max_iters, "Ascent iterations per start");
  haj->add_option("--seed", haj_config.seed, "RNG seed; 0 draws entropy");
  haj->add_option("--vertex-guard", haj_vguard, "Max n^k vertices (default 100)");
  haj->add_option("--enum-guard", haj_eguard, "Max C(n^k,n) subsets (default 3e6)");
  haj->callback([&]() {
    RMultigraph g = hajek_hypergraph(haj_n, haj_k, haj_vguard, haj_eguard);
    Rational uniform = hajek_uniform_value(haj_n, haj_k);
    ordered_json j;
    j["n"] = haj_n;
    j["k"] = haj_k;
    j["vertices"] = g.n();
    j["edges"] = g.edge_count();
    j["uniform_value"] = format_rational(uniform);
    j["uniform_value_double"] = to_double(uniform);
    if (haj_search) {
      haj_config.seed = resolve_seed(haj_config.seed);
      HajekSearchReport s = hajek_counterexample_search(haj_n, haj_k, haj_config);
      j["search"] = lagrangian_json(s.report);
      j["tetracode_starts"] = s.used_tetracode_starts;
      j["exceeds_uniform"] = s.exceeds_uniform;
    }
    if (format == "csv") {
      std::cout << "n,k,vertices,edges,uniform_value\n"
                << haj_n << ',' << haj_k << ',' << g.n() << ',' << g.edge_count() << ','
                << format_rational(uniform) << "\n";
      return;
    }
    std::cout << j.dump(2) << "\n";
  });

  auto* km = conj->add_subcommand("km-check", "Hashing-rate window for strong powers");
  int km_r = 3, km_k = 2;
  double km_lambda = -1;
  LambdaConfig km_config;
  km->add_option("--r", km_r, "Uniformity")->required();
  km->add_option("--k", km_k, "Power")->required();
  km->add_option("--lambda", km_lambda, "Certified lower bound; computed when omitted");
  km->add_option("--restarts", km_config.restarts, "Restarts when estimating");
  km->add_option("--seed", km_config.seed, "RNG seed; 0 draws entropy");
  km->callback([&]() {
    double lambda_est = km_lambda;
    if (lambda_est < 0) {
      km_config.seed = resolve_seed(km_config.seed);
      lambda_est = lambda_estimate(strong_power(km_r, km_k), km_config).estimate;
    }
    KmCheckResult res = korner_marton_check(km_r, km_k, lambda_est);
    if (format == "csv") {
      std::cout << "r,k,lambda,rate,lower_bound,upper_bound,lower_ok,upper_consistent\n"
                << km_r << ',' << km_k << ',' << format_double(lambda_est, 17) << ','
                << format_double(res.rate, 17) << ',' << format_double(res.lower_bound, 17)
                << ',' << format_double(res.upper_bound, 17) << ','
                << (res.lower_ok ? "true" : "false") << ','
                << (res.upper_consistent ? "true" : "false") << "\n";
      return;
    }
    ordered_json j;
    j["r"] = km_r;
    j["k"] = km_k;
    j["lambda"] = lambda_est;
    j["rate"] = res.rate;
    j["lower_bound"] = res.lower_bound;
    j["upper_bound"] = res.upper_bound;
    j["lower_ok"] = res.lower_ok;
    j["upper_consistent"] = res.upper_consistent;
    std::cout << j.dump(2) << "\n";
  });

  // ---- extremal ---------------------------------------------------------------
  auto* ext = app.add_subcommand("extremal", "Exact Turán numbers at desk scale");
  std::vector<std::string> ext_family;
  int ext_r = 0, ext_n = 0, ext_nmin = 0, ext_nmax = 0;
  long long ext_guard = 35;
  bool ext_witness = false;
  ext->add_option("--family", ext_family, "Forbidden hypergraph files");
  ext->add_option("--r", ext_r, "Uniformity (required when the family is empty)");
  ext->add_option("--n", ext_n, "Single vertex count");
  ext->add_option("--n-min", ext_nmin, "Sequence start");
  ext->add_option("--n-max", ext_nmax, "Sequence end");
  ext->add_option("--guard", ext_guard, "Max C(n,r) candidate edges (default 35)");
  ext->add_flag("--witness", ext_witness, "Include a witness graph (single n only)");
  ext->callback([&]() {
    std::vector<RMultigraph> members;
    for (const auto& path : ext_family) members.push_back(read_graph_arg(path));
    ForbiddenFamily family = members.empty()
                                 ? ForbiddenFamily::make(ext_r > 0 ? ext_r : 2, {})
                                 : ForbiddenFamily::make(std::move(members));
    int lo = ext_n > 0 ? ext_n : ext_nmin;
    int hi = ext_n > 0 ? ext_n : ext_nmax;
    if (lo <= 0 || hi < lo)
      throw validation_error("extremal: give --n or a valid --n-min/--n-max range");
    auto points = pi_sequence(family, lo, hi, ext_guard);
    if (format == "csv") {
      std::cout << "n,ex,density\n";
      for (const auto& p : points)
        std::cout << p.n << ',' << p.ex << ',' << format_double(to_double(p.density), 17)
                  << "\n";
      return;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& p : points) {
      ordered_json row;
      row["n"] = p.n;
      row["ex"] = p.ex;
      row["density"] = format_rational(p.density);
      row["density_double"] = to_double(p.density);
      rows.push_back(row);
    }
    ordered_json j;
    j["rows"] = rows;
    if (ext_witness && ext_n > 0) {
      auto res = ex_brute(ext_n, family, ext_guard);
      j["witness"] = serialize_graph(res.witness);
    }
    std::cout << j.dump(2) << "\n";
  });

  // ---- verify ------------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "Run the closed-form law matrix");
  std::string ver_suite = "all";
  std::uint64_t ver_seed = 1;
  ver->add_option("--suite", ver_suite, "'all' or comma-separated check names");
  ver->add_option("--seed", ver_seed, "RNG seed; 0 draws entropy (default 1)");
  ver->callback([&]() {
    VerifyReport report = run_verify(ver_suite, resolve_seed(ver_seed));
    std::cout << (format == "csv" ? render_verify_csv(report) : render_verify_json(report));
    if (!report.all_passed()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  } catch (const guard_error& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
