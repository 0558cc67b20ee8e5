// lorentz-eig: Lorentz (ice-cream cone) eigenvalues of 2x2 matrices.
//
// Exit codes: 0 success / agreement, 1 mathematical disagreement or
// falsification, 2 usage or parse error.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lorentz/json_io.hpp"
#include "lorentz/oracle.hpp"
#include "lorentz/pareto.hpp"
#include "lorentz/preserver.hpp"
#include "lorentz/spectrum.hpp"

namespace {

using nlohmann::json;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string read_stdin() {
  std::string all, line;
  while (std::getline(std::cin, line)) {
    all += line;
    all += '\n';
  }
  return all;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  if (pos != s.size()) {
    throw std::invalid_argument("trailing characters in number: " + s);
  }
  return v;
}

// Accepts the JSON object form or the compact form "a,b;c,d".
lorentz::Mat2 parse_matrix(std::string text) {
  if (text == "-") text = read_stdin();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw std::invalid_argument("empty matrix argument");
  }
  if (text[first] == '{') {
    return json::parse(text).get<lorentz::Mat2>();
  }
  const auto semi = text.find(';');
  if (semi == std::string::npos) {
    throw std::invalid_argument("compact matrix form is \"a,b;c,d\"");
  }
  auto split_row = [](const std::string& row) {
    const auto comma = row.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("compact matrix form is \"a,b;c,d\"");
    }
    return std::pair<double, double>{parse_double(row.substr(0, comma)),
                                     parse_double(row.substr(comma + 1))};
  };
  const auto [a, b] = split_row(text.substr(0, semi));
  const auto [c, d] = split_row(text.substr(semi + 1));
  return {a, b, c, d};
}

lorentz::Tolerance resolve_tolerance(const std::optional<double>& eq_flag) {
  double eq = 1e-9;
  if (const char* env = std::getenv("LORENTZ_EIG_TOL")) {
    eq = parse_double(env);
  }
  if (eq_flag) eq = *eq_flag;
  const double set = std::max(1e-6, eq);
  return {eq, set, 1e-9};
}

std::string nature_string(const lorentz::LEigenvalue& e) {
  std::string s;
  auto add = [&s](const char* part) {
    if (!s.empty()) s += ", ";
    s += part;
  };
  if (e.interior) add("interior");
  if (e.boundary_plus) add("boundary+");
  if (e.boundary_minus) add("boundary-");
  if (lorentz::is_boundary(e)) add(e.strict_boundary ? "strict" : "non-strict");
  return s;
}

struct VerifyOutcome {
  json report;
  bool ok = false;
};

// Recomputes the spectrum three independent ways and compares; agreement
// booleans are always derived from the freshly computed spectra.
VerifyOutcome verify_one(const lorentz::Mat2& A, const lorentz::OracleConfig& cfg,
                         const lorentz::Tolerance& tol) {
  const lorentz::LSpectrum closed = lorentz::l_spectrum(A, tol);
  const lorentz::LSpectrum orc = lorentz::oracle_spectrum(A, cfg, tol);
  const std::vector<double> par =
      lorentz::pareto_spectrum_2x2(lorentz::lorentz_to_pareto(A), tol);

  const bool oracle_ok = lorentz::spectra_match(closed, orc, tol.set_tol);
  const bool pareto_ok = lorentz::values_match(closed.values(), par, tol.set_tol);

  VerifyOutcome out;
  out.ok = oracle_ok && pareto_ok;
  out.report = json{{"input", A},
                    {"closed_form", closed},
                    {"oracle", orc},
                    {"pareto", par},
                    {"agreement",
                     {{"oracle", oracle_ok},
                      {"pareto", pareto_ok},
                      {"all", oracle_ok && pareto_ok}}},
                    {"tolerance", tol}};
  return out;
}

void print_disagreement(const json& report) {
  std::cout << "disagreement detected\n";
  std::cout << "  input:       " << report["input"].dump() << "\n";
  std::cout << "  closed form: " << report["closed_form"].dump() << "\n";
  std::cout << "  oracle:      " << report["oracle"].dump() << "\n";
  std::cout << "  pareto:      " << report["pareto"].dump() << "\n";
}

int cmd_spectrum(const std::string& matrix_arg, const lorentz::Tolerance& tol,
                 bool as_json) {
  const lorentz::Mat2 A = parse_matrix(matrix_arg);
  const lorentz::LSpectrum spec = lorentz::l_spectrum(A, tol);
  if (as_json) {
    const json out{{"matrix", A}, {"eigenvalues", spec}, {"tolerance", tol}};
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& e : spec.eigenvalues) {
      std::cout << fmt12(e.value) << "  " << nature_string(e) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::optional<std::string>& matrix_arg, int random_count,
               std::uint64_t seed, int grid, const lorentz::Tolerance& tol,
               bool as_json) {
  const lorentz::OracleConfig cfg(grid, 1.0, 1e-9);

  if (matrix_arg) {
    VerifyOutcome out = verify_one(parse_matrix(*matrix_arg), cfg, tol);
    out.report["grid_points"] = cfg.grid_points;
    if (as_json) {
      std::cout << out.report.dump() << "\n";
    } else if (out.ok) {
      std::cout << "agreement: closed form, oracle, and pareto spectra match\n";
      std::cout << "  spectrum: " << out.report["closed_form"].dump() << "\n";
    } else {
      print_disagreement(out.report);
    }
    return out.ok ? 0 : 1;
  }

  lorentz::UniformRng rng(seed);
  int failures = 0;
  json failure_reports = json::array();
  for (int i = 0; i < random_count; ++i) {
    const lorentz::Mat2 A = rng.mat2(-5.0, 5.0);
    VerifyOutcome out = verify_one(A, cfg, tol);
    if (!out.ok) {
      ++failures;
      out.report["index"] = i;
      failure_reports.push_back(out.report);
      if (!as_json) print_disagreement(out.report);
    }
  }
  if (as_json) {
    const json out{{"random", random_count}, {"seed", seed},
                   {"failures", failure_reports}, {"all_agree", failures == 0},
                   {"grid_points", cfg.grid_points}, {"tolerance", tol}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (random_count - failures) << "/" << random_count
              << " random matrices agree (seed " << seed << ")\n";
  }
  return failures == 0 ? 0 : 1;
}

int cmd_preserver_make(const std::string& kind, double beta,
                       const std::string& space) {
  const lorentz::PreserverKind k =
      kind == "P" ? lorentz::PreserverKind::P : lorentz::PreserverKind::Q;
  const lorentz::PreserverForm f = lorentz::make_preserver(k, beta);
  if (space == "S2") {
    std::cout << json(lorentz::preserver_to_linmap_s2(f)).dump() << "\n";
  } else {
    std::cout << json(lorentz::preserver_to_linmap(f)).dump() << "\n";
  }
  return 0;
}

// Either coordinate space, selected by the "basis" field of the input.
struct ParsedMap {
  std::optional<lorentz::LinMapM2> m2;
  std::optional<lorentz::LinMapS2> s2;
};

ParsedMap parse_linmap(std::string text) {
  if (text == "-") text = read_stdin();
  const json j = json::parse(text);
  const std::string basis = j.at("basis").get<std::string>();
  ParsedMap out;
  if (basis == lorentz::kBasisM2) {
    out.m2 = j.get<lorentz::LinMapM2>();
  } else if (basis == lorentz::kBasisS2) {
    out.s2 = j.get<lorentz::LinMapS2>();
  } else {
    throw std::invalid_argument("unknown basis: " + basis);
  }
  return out;
}

int cmd_preserver_check(const std::string& map_arg, int trials,
                        std::uint64_t seed, const lorentz::Tolerance& tol,
                        bool as_json) {
  const ParsedMap pm = parse_linmap(map_arg);
  const lorentz::SampleVerdict v =
      pm.m2 ? lorentz::sample_test_preserver(*pm.m2, trials, tol, seed)
            : lorentz::sample_test_preserver(*pm.s2, trials, tol, seed);
  if (as_json) {
    json out{{"verdict", v.consistent ? "consistent" : "falsified"},
             {"trials", v.trials},
             {"seed", v.seed}};
    out["witness"] = v.witness ? json(*v.witness) : json(nullptr);
    std::cout << out.dump() << "\n";
  } else if (v.consistent) {
    std::cout << "consistent after " << v.trials << " trials (seed " << v.seed
              << ")\n";
  } else {
    std::cout << "falsified at trial " << v.trials << " (seed " << v.seed
              << ") by witness " << json(*v.witness).dump() << "\n";
  }
  return v.consistent ? 0 : 1;
}

int cmd_preserver_classify(const std::string& map_arg,
                           const lorentz::Tolerance& tol, bool as_json) {
  const ParsedMap pm = parse_linmap(map_arg);
  const std::optional<lorentz::PreserverForm> f =
      pm.m2 ? lorentz::classify_preserver(*pm.m2, tol)
            : lorentz::classify_preserver(*pm.s2, tol);
  if (!f) {
    if (as_json) {
      std::cout << json{{"classified", false}}.dump() << "\n";
    } else {
      std::cout << "not a preserver\n";
    }
    return 1;
  }
  if (as_json) {
    const json out{{"classified", true},
                   {"kind", f->kind == lorentz::PreserverKind::P ? "P" : "Q"},
                   {"beta", f->beta},
                   {"alpha", f->alpha}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (f->kind == lorentz::PreserverKind::P ? "P" : "Q")
              << ", beta=" << fmt12(f->beta) << ", alpha=" << fmt12(f->alpha)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz (ice-cream cone) eigenvalues of 2x2 real matrices"};
  app.require_subcommand(1);

  std::optional<double> eq_tol_flag;
  bool json_flag = false;
  bool table_flag = false;

  // spectrum
  auto* sp = app.add_subcommand(
      "spectrum", "closed-form Lorentz spectrum with nature flags");
  std::string sp_matrix;
  sp->add_option("matrix", sp_matrix,
                 "matrix as {\"a\":..,\"b\":..,\"c\":..,\"d\":..}, \"a,b;c,d\","
                 " or - for stdin")
      ->required();
  sp->add_option("--tol", eq_tol_flag, "scalar equality tolerance eq_tol");
  auto* sp_json = sp->add_flag("--json", json_flag, "emit JSON");
  sp->add_flag("--table", table_flag, "emit a plain table (default)")
      ->excludes(sp_json);

  // verify
  auto* vf = app.add_subcommand(
      "verify", "cross-check closed form against the definitional oracle and "
                "the Pareto rotation");
  std::optional<std::string> vf_matrix;
  int vf_random = 0;
  std::uint64_t vf_seed = 42;
  int vf_grid = 2001;
  vf->add_option("matrix", vf_matrix, "matrix (omit when using --random)");
  vf->add_option("--random", vf_random, "verify N seeded random matrices");
  vf->add_option("--seed", vf_seed, "random seed");
  vf->add_option("--grid", vf_grid, "oracle grid resolution (odd, >= 101)");
  vf->add_option("--tol", eq_tol_flag, "scalar equality tolerance eq_tol");
  vf->add_flag("--json", json_flag, "emit JSON");

  // preserver make|check|classify
  auto* pr = app.add_subcommand("preserver",
                                "construct, test, and recognize spectrum "
                                "preserving maps");
  pr->require_subcommand(1);

  auto* mk = pr->add_subcommand("make", "coordinate matrix of a preserver");
  std::string mk_kind;
  double mk_beta = 0.0;
  std::string mk_space = "M2";
  mk->add_option("--kind", mk_kind, "P or Q")
      ->required()
      ->check(CLI::IsMember({"P", "Q"}));
  mk->add_option("--beta", mk_beta, "hyperbolic parameter beta");
  mk->add_option("--space", mk_space, "M2 or S2")
      ->check(CLI::IsMember({"M2", "S2"}));

  auto* ck = pr->add_subcommand("check", "randomized falsification test");
  std::string ck_map;
  int ck_trials = 1000;
  std::uint64_t ck_seed = 42;
  ck->add_option("map", ck_map, "linear map JSON, or - for stdin")->required();
  ck->add_option("--trials", ck_trials, "number of random trials");
  ck->add_option("--seed", ck_seed, "random seed");
  ck->add_option("--tol", eq_tol_flag, "scalar equality tolerance eq_tol");
  ck->add_flag("--json", json_flag, "emit JSON");

  auto* cl = pr->add_subcommand("classify", "structural recognition");
  std::string cl_map;
  cl->add_option("map", cl_map, "linear map JSON, or - for stdin")->required();
  cl->add_option("--tol", eq_tol_flag, "scalar equality tolerance eq_tol");
  cl->add_flag("--json", json_flag, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const lorentz::Tolerance tol = resolve_tolerance(eq_tol_flag);
    if (sp->parsed()) return cmd_spectrum(sp_matrix, tol, json_flag);
    if (vf->parsed()) {
      if (!vf_matrix && vf_random <= 0) {
        std::cerr << "verify: provide a matrix or --random N\n";
        return 2;
      }
      return cmd_verify(vf_matrix, vf_random, vf_seed, vf_grid, tol, json_flag);
    }
    if (mk->parsed()) return cmd_preserver_make(mk_kind, mk_beta, mk_space);
    if (ck->parsed()) return cmd_preserver_check(ck_map, ck_trials, ck_seed, tol, json_flag);
    if (cl->parsed()) return cmd_preserver_classify(cl_map, tol, json_flag);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
