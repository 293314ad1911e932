// Command-line front end: representation zeta functions of permutational
// wreath products and their self-similar limits.

#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "wrzeta/analysis.hpp"
#include "wrzeta/builtins.hpp"
#include "wrzeta/io.hpp"
#include "wrzeta/limit.hpp"

using namespace wrzeta;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string group;
  std::string group_file;
  std::string truncate = "1e12";
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 12345;
  int threads = 0;

  std::string group_spec() const {
    if (!group_file.empty())
      return read_file(group_file);
    return std::string("{\"builtin\": \"") + group + "\"}";
  }
  PermGroup load_group() const { return parse_group_json(group_spec()); }
  u128 bound() const {
    u128 n = parse_u128(truncate);
    if (n < 1)
      throw BadInput("--truncate must be >= 1");
    return n;
  }
  int thread_count() const {
    if (threads > 0)
      return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
  }
};

void add_common(CLI::App *cmd, CommonOpts &opt, bool with_truncate = true) {
  cmd->add_option("--group", opt.group, "builtin group name");
  cmd->add_option("--group-file", opt.group_file, "path to a group JSON file");
  if (with_truncate)
    cmd->add_option("--truncate", opt.truncate,
                    "degree bound N (accepts 1e12 style)");
  cmd->add_option("--format", opt.format, "output format: text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", opt.out_path, "write the main listing to a file");
  cmd->add_option("--seed", opt.seed, "seed for the degree extractor");
  cmd->add_option("--threads", opt.threads,
                  "worker threads (default: available parallelism)");
}

void emit(const CommonOpts &opt, const std::string &body, json footer,
          std::size_t line_count = 0) {
  std::string target = opt.out_path;
  // large coefficient dumps go to a file, never to the terminal
  if (target.empty() && line_count > 10000)
    target = "wrzeta_dump.csv";
  if (!target.empty()) {
    write_file(target, body);
    footer["written"] = target;
    std::cout << footer.dump() << "\n";
    return;
  }
  std::cout << body;
  if (opt.format == "json")
    return; // body already carries everything
  std::cout << "# " << footer.dump() << "\n";
}

std::string poly_body(const CommonOpts &opt, const DirichletPoly &p,
                      const json &extra) {
  if (opt.format == "json") {
    json doc = json::parse(poly_to_json(p));
    for (auto &[k, v] : extra.items())
      doc[k] = v;
    return doc.dump() + "\n";
  }
  return poly_to_csv(p);
}

// limit-zeta coefficient cache, keyed by (group, N), in WREATH_ZETA_CACHE
std::optional<std::string> cache_path(const CommonOpts &opt) {
  const char *dir = std::getenv("WREATH_ZETA_CACHE");
  if (!dir || !*dir)
    return std::nullopt;
  std::string key = group_cache_key(opt.group_spec());
  return std::string(dir) + "/" + key + "_N" +
         u128_to_string(opt.bound()) + ".csv";
}

DirichletPoly limit_coefficients(const CommonOpts &opt, json &footer) {
  auto path = cache_path(opt);
  if (path && std::filesystem::exists(*path)) {
    footer["cache"] = *path;
    return poly_from_csv(read_file(*path));
  }
  auto lim = limit_zeta(opt.load_group(), opt.bound(), opt.seed);
  footer["iterations"] = lim.iterations_used;
  if (path) {
    std::filesystem::create_directories(
        std::filesystem::path(*path).parent_path());
    write_file(*path, poly_to_csv(lim.coefficients));
    footer["cache"] = *path;
  }
  return lim.coefficients;
}

std::complex<double> parse_complex_pair(const std::string &text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw BadInput("expected re,im");
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"representation zeta functions of wreath products"};
  app.require_subcommand(1);

  CommonOpts opt;

  // degrees
  auto *cmd_degrees =
      app.add_subcommand("degrees", "character degree pattern of a group");
  add_common(cmd_degrees, opt, false);

  // wreath
  auto *cmd_wreath = app.add_subcommand(
      "wreath", "zeta of H wr_X Q from a base pattern and an acting group");
  std::string hgroup, hpattern;
  cmd_wreath->add_option("--hgroup", hgroup, "builtin base group H");
  cmd_wreath->add_option("--hpattern", hpattern,
                         "CSV file with the base pattern of H");
  add_common(cmd_wreath, opt);

  // fe
  auto *cmd_fe = app.add_subcommand(
      "fe", "symbolic functional equation of the self-similar limit");
  add_common(cmd_fe, opt, false);

  // limit
  auto *cmd_limit =
      app.add_subcommand("limit", "truncated limit zeta coefficients");
  add_common(cmd_limit, opt);

  // level
  auto *cmd_level =
      app.add_subcommand("level", "zeta of the k-fold iterated wreath power");
  int level_k = 1;
  bool level_exact = false;
  cmd_level->add_option("--k", level_k, "tower height")->required();
  cmd_level->add_flag("--exact", level_exact, "no truncation");
  add_common(cmd_level, opt);

  // sigma0
  auto *cmd_sigma = app.add_subcommand(
      "sigma0", "abscissa of convergence by real-root-count bisection");
  std::string bracket = "1.0,2.0";
  double tol = 1e-8;
  cmd_sigma->add_option("--bracket", bracket, "l,u enclosure to start from");
  cmd_sigma->add_option("--tol", tol, "enclosure width target");
  add_common(cmd_sigma, opt);

  // puiseux
  auto *cmd_puiseux =
      app.add_subcommand("puiseux", "branch-point expansion at sigma0");
  int depth = 3;
  std::string pbracket = "1.0,2.0";
  cmd_puiseux->add_option("--depth", depth, "coefficients beyond a0");
  cmd_puiseux->add_option("--bracket", pbracket, "bisection bracket");
  add_common(cmd_puiseux, opt);

  // trace
  auto *cmd_trace = app.add_subcommand(
      "trace", "trajectory of zeta along a ray by root tracking");
  std::string eps_text = "0.001,0.0001";
  int steps = 2500;
  cmd_trace->add_option("--eps", eps_text, "complex step re,im");
  cmd_trace->add_option("--steps", steps, "number of points");
  add_common(cmd_trace, opt);

  // scan
  auto *cmd_scan = app.add_subcommand(
      "scan", "grid scan for discriminant zeros (root collisions)");
  std::string region_text = "0.85,0.95,-0.05,0.05";
  int grid = 21;
  cmd_scan->add_option("--region", region_text, "re_lo,re_hi,im_lo,im_hi");
  cmd_scan->add_option("--grid", grid, "grid points per side");
  add_common(cmd_scan, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_degrees->parsed()) {
      auto pat = degree_pattern(opt.load_group(), opt.seed);
      auto sv = pat.special_values();
      json footer{{"class_count", sv.class_count},
                  {"order", sv.order},
                  {"abelianization", sv.abelianization},
                  {"seed", opt.seed}};
      emit(opt, poly_body(opt, pat.zeta, {{"special_values", footer}}),
           footer, pat.zeta.size());
    } else if (cmd_wreath->parsed()) {
      DirichletPoly base;
      if (!hpattern.empty())
        base = poly_from_csv(read_file(hpattern));
      else if (!hgroup.empty())
        base = degree_pattern(builtin_group(hgroup), opt.seed).zeta;
      else
        throw BadInput("wreath needs --hgroup or --hpattern");
      auto ctx = WreathContext::build(opt.load_group(), opt.seed);
      auto z = wreath_zeta(base, ctx, opt.bound());
      json footer{{"N", u128_to_string(opt.bound())},
                  {"terms", z.size()}};
      emit(opt, poly_body(opt, z, footer), footer, z.size());
    } else if (cmd_fe->parsed()) {
      auto ctx = WreathContext::build(opt.load_group(), opt.seed);
      auto fe = functional_equation(ctx);
      std::string jtext = functional_equation_to_json(fe);
      if (opt.format == "json") {
        emit(opt, jtext + "\n", json::parse(jtext));
      } else {
        std::string body = jtext + "\n\nZ(s) =\n" + fe.render() + "\n";
        emit(opt, body, json{{"d", fe.d}, {"primes", fe.primes}});
      }
    } else if (cmd_limit->parsed()) {
      json footer{{"N", u128_to_string(opt.bound())}};
      auto z = limit_coefficients(opt, footer);
      footer["terms"] = z.size();
      emit(opt, poly_body(opt, z, footer), footer, z.size());
    } else if (cmd_level->parsed()) {
      auto ctx = WreathContext::build(opt.load_group(), opt.seed);
      u128 bound = level_exact ? U128_MAX : opt.bound();
      auto z = finite_level_zeta(ctx, level_k, bound);
      json footer{{"k", level_k}, {"terms", z.size()}};
      if (!level_exact)
        footer["N"] = u128_to_string(opt.bound());
      emit(opt, poly_body(opt, z, footer), footer, z.size());
    } else if (cmd_sigma->parsed()) {
      auto c = parse_complex_pair(bracket);
      json footer{{"N", u128_to_string(opt.bound())},
                  {"tol", tol},
                  {"bracket", {c.real(), c.imag()}},
                  {"seed", opt.seed}};
      auto z = limit_coefficients(opt, footer);
      auto fe = functional_equation(
          WreathContext::build(opt.load_group(), opt.seed));
      auto res = sigma0_detailed(fe, z, c.real(), c.imag(), tol);
      footer["iterations_bisection"] = res.iterations;
      footer["real_roots"] = {res.real_roots_left, res.real_roots_right};
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12f", res.sigma0);
      if (opt.format == "json") {
        footer["sigma0"] = res.sigma0;
        emit(opt, footer.dump() + "\n", footer);
      } else {
        emit(opt, std::string("sigma0 = ") + buf + "\n", footer);
      }
    } else if (cmd_puiseux->parsed()) {
      auto c = parse_complex_pair(pbracket);
      json footer{{"N", u128_to_string(opt.bound())},
                  {"depth", depth},
                  {"seed", opt.seed}};
      auto z = limit_coefficients(opt, footer);
      auto fe = functional_equation(
          WreathContext::build(opt.load_group(), opt.seed));
      auto seed0 = sigma0_detailed(fe, z, c.real(), c.imag(), 1e-8);
      auto pe = puiseux(fe, z, seed0.sigma0, depth);
      if (pe.ramification != 2)
        std::cerr << "warning: root cluster of size " << pe.ramification
                  << " at the singularity; expansions in fractional powers "
                     "1/" << pe.ramification << "\n";
      footer["sigma0"] = pe.sigma0;
      footer["ramification"] = pe.ramification;
      footer["coefficients"] = pe.coefficients;
      footer["fit_residual"] = pe.fit_residual;
      if (opt.format == "json") {
        emit(opt, footer.dump() + "\n", footer);
      } else {
        std::string body;
        char buf[128];
        std::snprintf(buf, sizeof buf, "sigma0 = %.15f   e = %d\n", pe.sigma0,
                      pe.ramification);
        body += buf;
        for (std::size_t i = 0; i < pe.coefficients.size(); ++i) {
          std::snprintf(buf, sizeof buf, "a_%zu = %.12f\n", i,
                        pe.coefficients[i]);
          body += buf;
        }
        emit(opt, body, footer);
      }
    } else if (cmd_trace->parsed()) {
      auto eps = parse_complex_pair(eps_text);
      json footer{{"N", u128_to_string(opt.bound())},
                  {"eps", {eps.real(), eps.imag()}},
                  {"steps", steps}};
      auto z = limit_coefficients(opt, footer);
      auto fe = functional_equation(
          WreathContext::build(opt.load_group(), opt.seed));
      auto tr = continuation(fe, z, eps, steps);
      std::string body;
      char buf[128];
      for (const auto &[n, zv] : tr.points) {
        std::snprintf(buf, sizeof buf, "%d,%.15g,%.15g\n", n, zv.real(),
                      zv.imag());
        body += buf;
      }
      if (opt.format == "json") {
        json pts = json::array();
        for (const auto &[n, zv] : tr.points)
          pts.push_back({n, zv.real(), zv.imag()});
        footer["points"] = pts;
        emit(opt, footer.dump() + "\n", footer);
      } else {
        emit(opt, body, footer, tr.points.size());
      }
    } else if (cmd_scan->parsed()) {
      double r[4];
      std::string rest = region_text;
      for (int i = 0; i < 4; ++i) {
        auto comma = rest.find(',');
        r[i] = std::stod(rest.substr(0, comma));
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
      }
      json footer{{"N", u128_to_string(opt.bound())},
                  {"region", {r[0], r[1], r[2], r[3]}},
                  {"grid", grid},
                  {"threads", opt.thread_count()}};
      auto z = limit_coefficients(opt, footer);
      auto fe = functional_equation(
          WreathContext::build(opt.load_group(), opt.seed));
      auto cands = scan_singularities(fe, z, {r[0], r[1], r[2], r[3]}, grid,
                                      1e-3, opt.thread_count());
      std::string body;
      char buf[128];
      json carr = json::array();
      for (const auto &cand : cands) {
        std::snprintf(buf, sizeof buf, "%.10f,%.10f,%.3e\n",
                      cand.location.real(), cand.location.imag(),
                      cand.min_root_distance);
        body += buf;
        carr.push_back({cand.location.real(), cand.location.imag(),
                        cand.min_root_distance});
      }
      footer["candidates"] = carr;
      if (opt.format == "json")
        emit(opt, footer.dump() + "\n", footer);
      else
        emit(opt, body, footer);
    }
  } catch (const Error &e) {
    json report{{"error", e.code()}, {"message", e.what()}};
    std::cerr << report.dump() << "\n";
    return 1;
  } catch (const std::exception &e) {
    json report{{"error", "InternalError"}, {"message", e.what()}};
    std::cerr << report.dump() << "\n";
    return 2;
  }
  return 0;
}
