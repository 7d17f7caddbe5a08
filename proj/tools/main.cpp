// Command-line front end: parses a complex file and runs one of the report
// commands. Output is deterministic (%.9g floats, fixed simplex order).

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scer/circuits.hpp"
#include "scer/io.hpp"
#include "scer/metrics.hpp"

using json = nlohmann::json;

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string simplex_label(const scer::Simplex& s) {
  std::string out;
  for (size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.vertices[i]);
  }
  return out;
}

void print_matrix(std::ostream& os, const Eigen::MatrixXd& M) {
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j) os << ' ';
      os << fmt(M(i, j));
    }
    os << '\n';
  }
}

json matrix_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(row);
  }
  return rows;
}

struct Options {
  std::string input;
  int dim = 1;
  std::string basis = "standard";
  std::string format = "text";
  double tol = 0.0;  // 0 = command default
  bool structured() const { return format == "structured"; }
  scer::MatrixBasis matrix_basis() const {
    return basis == "orthonormal" ? scer::MatrixBasis::Orthonormal
                                  : scer::MatrixBasis::Standard;
  }
};

double tol_or(const Options& opt, double fallback) {
  return opt.tol > 0.0 ? opt.tol : fallback;
}

int cmd_info(const Options& opt, bool dump) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  if (dump) {
    scer::dump_complex(std::cout, K);
    return 0;
  }
  if (opt.structured()) {
    json j;
    j["dim"] = K.dim();
    for (int p = 0; p <= K.dim(); ++p) {
      j["n"].push_back(K.size(p));
      j["betti"].push_back(scer::betti(K, p));
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "dim " << K.dim() << '\n';
  for (int p = 0; p <= K.dim(); ++p)
    std::cout << "n_" << p << " " << K.size(p) << "  betti_" << p << " "
              << scer::betti(K, p) << '\n';
  return 0;
}

int cmd_laplacian(const Options& opt, const std::string& kind,
                  const std::string& side) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  scer::LapKind k = kind == "up"     ? scer::LapKind::Up
                    : kind == "down" ? scer::LapKind::Down
                                     : scer::LapKind::Hodge;
  scer::Side s = side == "chain" ? scer::Side::Chain : scer::Side::Cochain;
  scer::OpMatrix L = scer::laplacian(K, opt.dim, k, s, opt.matrix_basis());
  if (opt.structured()) {
    json j;
    j["dim"] = opt.dim;
    j["kind"] = kind;
    j["side"] = side;
    j["basis"] = opt.basis;
    j["entries"] = matrix_json(L.entries);
    std::cout << j.dump(2) << '\n';
  } else {
    print_matrix(std::cout, L.entries);
  }
  return 0;
}

int cmd_resistance(const Options& opt) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  int p = opt.dim;
  scer::OpMatrix R = scer::er_bilinear_matrix(K, p, opt.matrix_basis());
  if (opt.structured()) {
    json j;
    j["p"] = p;
    j["basis"] = opt.basis;
    j["matrix"] = matrix_json(R.entries);
    json per = json::array();
    for (int i = 0; i < K.size(p); ++i) {
      auto sr = scer::er_of_simplex(K, K.simplices(p)[i]);
      per.push_back({{"simplex", simplex_label(K.simplices(p)[i])},
                     {"r", sr.r},
                     {"relative", sr.relative}});
    }
    j["per_simplex"] = per;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  for (int i = 0; i < K.size(p); ++i) {
    auto sr = scer::er_of_simplex(K, K.simplices(p)[i]);
    std::cout << simplex_label(K.simplices(p)[i]) << "  r=" << fmt(sr.r)
              << "  wr=" << fmt(sr.relative) << '\n';
  }
  return 0;
}

int cmd_vertex_er(const Options& opt, int u, int v) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  double r = scer::vertex_er(K, u, v);
  if (opt.structured()) {
    std::cout << json{{"u", u}, {"v", v}, {"r", r}}.dump(2) << '\n';
  } else {
    std::cout << fmt(r) << '\n';
  }
  return 0;
}

int cmd_circuit(const Options& opt, std::optional<int> source,
                std::optional<int> sink, const std::string& beta_spec) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  int p = opt.dim;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(K.size(p - 1));
  if (source && sink) {
    auto iu = K.index_of(scer::Simplex{{*source}});
    auto iv = K.index_of(scer::Simplex{{*sink}});
    if (!iu || !iv) throw scer::VertexNotFound("source/sink not in complex");
    beta[*iu] += 1.0;
    beta[*iv] -= 1.0;
  } else if (!beta_spec.empty()) {
    std::istringstream ss(beta_spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw scer::Error("bad --beta entry '" + item + "', want index:value");
      int idx = std::stoi(item.substr(0, colon));
      double val = std::stod(item.substr(colon + 1));
      if (idx < 0 || idx >= beta.size())
        throw scer::Error("--beta index out of range");
      beta[idx] = val;
    }
  } else {
    throw scer::Error("circuit needs --source/--sink or --beta");
  }

  scer::CircuitProblem prob{p, {{p - 1, scer::BasisKind::StandardChain}, beta}};
  scer::CircuitSolution sol = scer::solve_circuit(K, prob);
  if (opt.structured()) {
    json j;
    j["p"] = p;
    j["alpha"] = std::vector<double>(
        sol.alpha.coeffs.data(), sol.alpha.coeffs.data() + sol.alpha.coeffs.size());
    j["f"] = std::vector<double>(sol.f.coeffs.data(),
                                 sol.f.coeffs.data() + sol.f.coeffs.size());
    j["phi"] = std::vector<double>(sol.phi.coeffs.data(),
                                   sol.phi.coeffs.data() + sol.phi.coeffs.size());
    j["residuals"] = {{"kcl", sol.kcl}, {"kvl", sol.kvl}, {"ohm", sol.ohm}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  auto print_vec = [](const char* name, const Eigen::VectorXd& v) {
    std::cout << name;
    for (Eigen::Index i = 0; i < v.size(); ++i) std::cout << ' ' << fmt(v[i]);
    std::cout << '\n';
  };
  print_vec("alpha", sol.alpha.coeffs);
  print_vec("f", sol.f.coeffs);
  print_vec("phi", sol.phi.coeffs);
  std::cout << "residuals kcl=" << fmt(sol.kcl) << " kvl=" << fmt(sol.kvl)
            << " ohm=" << fmt(sol.ohm) << '\n';
  return 0;
}

int cmd_metric(const Options& opt, std::optional<int> u, std::optional<int> v) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  auto unit = [&](int w) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(K.size(0));
    auto idx = K.index_of(scer::Simplex{{w}});
    if (!idx) throw scer::VertexNotFound("vertex not in complex");
    e[*idx] = 1.0;
    return scer::Vec{{0, scer::BasisKind::StandardChain}, e};
  };
  if (u && v) {
    double d = scer::cycle_metric(K, unit(*u), unit(*v));
    if (opt.structured())
      std::cout << json{{"u", *u}, {"v", *v}, {"d", d}}.dump(2) << '\n';
    else
      std::cout << fmt(d) << '\n';
    return 0;
  }
  // full vertex metric table + triangle-inequality audit
  int n = K.size(0);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = scer::cycle_metric(
          K, unit(K.simplices(0)[i].vertices[0]),
          unit(K.simplices(0)[j].vertices[0]));
      D(i, j) = D(j, i) = d;
    }
  int violations = 0;
  double slack = tol_or(opt, 1e-9);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (D(a, c) > D(a, b) + D(b, c) + slack) ++violations;
  if (opt.structured()) {
    json j;
    j["pairs"] = n * (n - 1) / 2;
    j["matrix"] = matrix_json(D);
    j["triangle_violations"] = violations;
    std::cout << j.dump(2) << '\n';
  } else {
    print_matrix(std::cout, D);
    std::cout << "triangle_violations " << violations << '\n';
  }
  return violations == 0 ? 0 : 1;
}

int cmd_foster(const Options& opt) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  scer::FosterReport rep = scer::foster_check(K, opt.dim, tol_or(opt, 1e-7));
  if (opt.structured()) {
    json j;
    j["p"] = rep.p;
    j["lhs_sum"] = rep.lhs_sum;
    j["trace_T"] = rep.trace_T;
    j["rank_B_transpose"] = rep.rank_B_transpose;
    j["rhs"] = rep.rhs;
    j["pass"] = rep.pass;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "lhs=" << fmt(rep.lhs_sum) << " trace=" << fmt(rep.trace_T)
              << " rank=" << rep.rank_B_transpose << " rhs=" << rep.rhs << ' '
              << (rep.pass ? "PASS" : "FAIL") << '\n';
  }
  return rep.pass ? 0 : 1;
}

int cmd_equiv_check(const Options& opt) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  int p = opt.dim;
  double tol = tol_or(opt, 1e-8);

  Eigen::MatrixXd Rb =
      scer::er_bilinear_matrix(K, p, scer::MatrixBasis::Standard).entries;
  Eigen::MatrixXd Ro = scer::osting_matrix(K, p).entries;
  double dev_osting = (Rb - Ro).cwiseAbs().maxCoeff();

  std::optional<double> dev_kook;
  std::string kook_note;
  try {
    Eigen::MatrixXd Rk = scer::kook_lee_matrix(K, p).entries;
    dev_kook = (Ro - Rk).cwiseAbs().maxCoeff();
  } catch (const scer::SingularHodgeLaplacian&) {
    kook_note = "skipped (singular Hodge Laplacian)";
  }

  double dev_black = 0.0;
  Eigen::MatrixXd B = scer::boundary_matrix(K, p, scer::MatrixBasis::Standard).entries;
  for (int j = 0; j < K.size(p); ++j) {
    scer::Vec gamma{{p - 1, scer::BasisKind::StandardChain}, B.col(j)};
    auto bm = scer::black_maxwell_er(K, p, gamma);
    if (bm) dev_black = std::max(dev_black, std::abs(*bm - Ro(j, j)));
  }

  double worst = std::max({dev_osting, dev_kook.value_or(0.0), dev_black});
  bool pass = worst <= tol;
  if (opt.structured()) {
    json j;
    j["p"] = p;
    j["dev_osting"] = dev_osting;
    if (dev_kook) j["dev_kook_lee"] = *dev_kook;
    else j["kook_lee"] = kook_note;
    j["dev_black_maxwell"] = dev_black;
    j["max_deviation"] = worst;
    j["pass"] = pass;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "osting " << fmt(dev_osting) << '\n';
    std::cout << "kook-lee "
              << (dev_kook ? fmt(*dev_kook) : kook_note) << '\n';
    std::cout << "black-maxwell " << fmt(dev_black) << '\n';
    std::cout << "max " << fmt(worst) << ' ' << (pass ? "PASS" : "FAIL")
              << '\n';
  }
  return pass ? 0 : 1;
}

int cmd_spectrum(const Options& opt) {
  scer::WeightedComplex K = scer::parse_complex_file(opt.input);
  auto vals = scer::er_operator_spectrum(K, opt.dim);
  if (opt.structured()) {
    std::cout << json{{"p", opt.dim}, {"eigenvalues", vals}}.dump(2) << '\n';
  } else {
    for (double v : vals) std::cout << fmt(v) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effective resistance on weighted simplicial complexes"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("SCER_TOL")) opt.tol = std::atof(env);

  auto add_common = [&](CLI::App* sub, bool needs_dim) {
    sub->add_option("--input", opt.input, "complex file")->required();
    if (needs_dim) sub->add_option("--dim,-p", opt.dim, "degree p");
    sub->add_option("--basis", opt.basis, "standard|orthonormal")
        ->check(CLI::IsMember({"standard", "orthonormal"}));
    sub->add_option("--tol", opt.tol, "tolerance override");
    sub->add_option("--format", opt.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  auto* info = app.add_subcommand("info", "sizes and Betti numbers");
  bool dump = false;
  info->add_flag("--dump", dump, "emit the complex in file format");
  add_common(info, false);

  auto* lap = app.add_subcommand("laplacian", "Laplacian matrix dump");
  std::string lap_kind = "hodge", lap_side = "cochain";
  lap->add_option("--kind", lap_kind, "up|down|hodge")
      ->check(CLI::IsMember({"up", "down", "hodge"}));
  lap->add_option("--side", lap_side, "chain|cochain")
      ->check(CLI::IsMember({"chain", "cochain"}));
  add_common(lap, true);

  auto* res = app.add_subcommand("resistance", "per-simplex resistance table");
  add_common(res, true);

  auto* ver = app.add_subcommand("vertex-er", "vertex effective resistance");
  int u = 0, v = 0;
  ver->add_option("--u,-u", u, "first vertex")->required();
  ver->add_option("--v,-v", v, "second vertex")->required();
  add_common(ver, false);

  auto* cir = app.add_subcommand("circuit", "solve the circuit system");
  std::optional<int> source, sink;
  std::string beta_spec;
  cir->add_option("--source", source, "inject unit current here");
  cir->add_option("--sink", sink, "extract unit current here");
  cir->add_option("--beta", beta_spec,
                  "boundary current as index:value,... over K_{p-1}");
  add_common(cir, true);

  auto* met = app.add_subcommand("metric", "vertex resistance metric");
  std::optional<int> mu, mv;
  met->add_option("--u", mu, "first vertex");
  met->add_option("--v", mv, "second vertex");
  add_common(met, false);

  auto* fos = app.add_subcommand("foster", "Foster identity report");
  add_common(fos, true);

  auto* eqc = app.add_subcommand("equiv-check",
                                 "compare the literature formulations");
  add_common(eqc, true);

  auto* spc = app.add_subcommand("spectrum", "ER operator eigenvalues");
  add_common(spc, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(opt, dump);
    if (lap->parsed()) return cmd_laplacian(opt, lap_kind, lap_side);
    if (res->parsed()) return cmd_resistance(opt);
    if (ver->parsed()) return cmd_vertex_er(opt, u, v);
    if (cir->parsed()) return cmd_circuit(opt, source, sink, beta_spec);
    if (met->parsed()) return cmd_metric(opt, mu, mv);
    if (fos->parsed()) return cmd_foster(opt);
    if (eqc->parsed()) return cmd_equiv_check(opt);
    if (spc->parsed()) return cmd_spectrum(opt);
  } catch (const scer::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
