#include "cliff/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cliff/algebra.hpp"
#include "cliff/decomposition.hpp"
#include "cliff/error.hpp"
#include "cliff/expression.hpp"
#include "cliff/pointors.hpp"
#include "cliff/points.hpp"
#include "cliff/spinors.hpp"
#include "cliff/text.hpp"

namespace cliff::cli {
namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string num(Complex z) {
  if (z.imag() == 0.0) return num(z.real());
  if (z.real() == 0.0) return num(z.imag()) + "i";
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

// Text display: coefficients below tol (relative) dropped, 12 significant digits.
std::string show(const Multivector& mv, double tol) {
  Multivector out = mv;
  const double floor = tol * std::max(1.0, mv.max_abs());
  auto tidy = [&](std::span<double> table) {
    for (double& c : table) c = std::abs(c) <= floor ? 0.0 : std::stod(num(c));
  };
  tidy(out.real_table());
  if (out.is_complex()) tidy(out.imag_table());
  return format(out);
}

Signature parse_signature(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad --sig value \"" + text + "\" (expected p,q,r)");
    }
  }
  if (parts.size() == 2) parts.push_back(0);
  if (parts.size() != 3) throw Error(ErrorKind::Parse, "bad --sig value \"" + text + "\" (expected p,q,r)");
  try {
    return Signature(parts[0], parts[1], parts[2]);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

struct Context {
  Signature sig;
  double tol;
  bool json_mode;
  std::uint64_t seed;
  std::ostream& out;
  bool ok = true;
  json residuals = json::object();

  void line(const std::string& text) {
    if (!json_mode) out << text << '\n';
  }
  void residual(const std::string& name, double value) {
    residuals[name] = value;
    if (!(value <= tol)) ok = false;
    line(name + " residual: " + num(value));
  }
  void emit(json j) {
    if (!json_mode) return;
    j["residuals"] = residuals;
    j["ok"] = ok;
    out << j.dump() << '\n';
  }
  Multivector value(const std::string& expr) const { return evaluate(sig, expr); }
  Multivector point_or_default(const std::string& expr) const {
    if (!expr.empty()) return value(expr);
    if (sig.r() != 0) throw Error(ErrorKind::Domain, "degenerate signature: pass --point explicitly");
    return pseudoscalar(sig);
  }
};

double max_commutator(const std::vector<Multivector>& parts) {
  double worst = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      worst = std::max(worst, (parts[i] * parts[j] - parts[j] * parts[i]).norm() /
                                  std::max(1.0, parts[i].norm() * parts[j].norm()));
  return worst;
}

void cmd_eval(Context& c, const std::string& expr) {
  const Multivector v = c.value(expr);
  c.line(show(v, c.tol));
  c.emit({{"command", "eval"}, {"text", format(v)}, {"result", to_json(v)}});
}

void cmd_decompose(Context& c, const std::string& expr) {
  const Multivector u = c.value(expr);
  const InvariantDecomposition d = invariant_decompose(u, c.tol);
  json factors = json::array(), kinds = json::array();
  double simple = 0.0;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const Multivector b = grade_select(d.factors[i], 2);
    std::string kind = "scalar";
    if (b.norm() > c.tol) {
      kind = to_string(make_simple_factor(b, 1e-6).kind);
      simple = std::max(simple, (b ^ b).norm() / std::max(1.0, b.norm() * b.norm()));
    }
    c.line("factor " + std::to_string(i + 1) + ": " + show(d.factors[i], c.tol) + " (" + kind + ")");
    factors.push_back(to_json(d.factors[i]));
    kinds.push_back(kind);
  }
  std::vector<Multivector> parts = d.factors;
  json residual = nullptr;
  if (d.residual_reflection) {
    c.line("residual reflection: " + show(*d.residual_reflection, c.tol));
    parts.push_back(*d.residual_reflection);
    residual = to_json(*d.residual_reflection);
  }
  c.line("scale: " + num(d.scale));
  c.line("parts: " + std::to_string(d.count()) + (d.degenerate ? " (degenerate spectrum)" : ""));
  c.residual("reconstruction", relative_difference(d.reconstruct(), u));
  c.residual("commutation", max_commutator(parts));
  c.residual("simplicity", simple);
  c.emit({{"command", "decompose"},
          {"factors", factors},
          {"kinds", kinds},
          {"residual_reflection", residual},
          {"scale", d.scale},
          {"degenerate", d.degenerate}});
}

void cmd_point(Context& c, const std::string& expr) {
  const PointFrame f = factor_point(c.value(expr), c.tol);
  json vs = json::array(), bs = json::array();
  for (std::size_t i = 0; i < f.vectors.size(); ++i) {
    c.line("v" + std::to_string(i + 1) + ": " + show(f.vectors[i], c.tol));
    vs.push_back(to_json(f.vectors[i]));
  }
  for (std::size_t j = 0; j < f.cartan.size(); ++j) {
    c.line("b" + std::to_string(j + 1) + ": " + show(f.cartan[j], c.tol));
    bs.push_back(to_json(f.cartan[j]));
  }
  if (f.extra) c.line("extra: " + show(*f.extra, c.tol));
  c.residual("frame", f.invariant_residual());
  c.emit({{"command", "point"},
          {"vectors", vs},
          {"cartan", bs},
          {"extra", f.extra ? to_json(*f.extra) : json(nullptr)}});
}

void cmd_spinor(Context& c, const std::string& point) {
  const PointFrame f = factor_point(c.point_or_default(point), c.tol);
  if (f.k() == 0) throw Error(ErrorKind::Domain, "the point has no Cartan plane");
  const NullBasis nb = null_basis(f, c.tol);
  const Multivector box = master_idempotent(nb);
  const Multivector gamma = chiral_operator(nb);
  for (int j = 0; j < nb.k(); ++j) {
    const auto i = static_cast<std::size_t>(j);
    const std::string tag = std::to_string(j + 1);
    c.line("w+" + tag + ": " + show(nb.plus[i], c.tol));
    c.line("w-" + tag + ": " + show(nb.minus[i], c.tol));
    c.line("mu" + tag + ": " + num(nb.mu[i]));
  }
  c.line("idempotent: " + show(box, c.tol));
  c.line("chiral: " + show(gamma, c.tol));

  double idem = relative_difference(box * box, box), annihilate = 0.0, beta = 0.0, nullnorm = 0.0;
  for (const auto& w : nb.plus) annihilate = std::max(annihilate, (w * box).norm());
  std::vector<Multivector> states;
  json js = json::array();
  for (const auto& s : all_labels(nb.k())) {
    const SpinorState st = basis_spinor(nb, s);
    for (std::size_t j = 0; j < s.size(); ++j)
      beta = std::max(beta, (nb.beta[j] * st.value - st.value * static_cast<double>(s[j])).norm());
    nullnorm = std::max(nullnorm, (reverse(st.value) * st.value).norm());
    const bool left = (weyl_project(st.value, nb, WeylSide::Left) - st.value).norm() <= c.tol;
    c.line("state " + to_string(s) + (left ? " [L]: " : " [R]: ") + show(st.value, c.tol));
    js.push_back({{"label", s}, {"weyl", left ? "L" : "R"}, {"value", to_json(st.value)}});
    states.push_back(st.value);
  }
  const int rank = complex_rank(states);
  c.line("ideal dimension: " + std::to_string(rank));
  c.residual("idempotent", idem);
  c.residual("annihilation", annihilate);
  c.residual("eigenvalue", beta);
  c.residual("null norm", nullnorm);
  c.residual("chiral square", relative_difference(gamma * gamma, Multivector::scalar(c.sig, 1.0)));
  if (rank != (1 << nb.k())) c.ok = false;
  c.emit({{"command", "spinor"}, {"idempotent", to_json(box)}, {"chiral", to_json(gamma)},
          {"states", js}, {"rank", rank}});
}

void cmd_pointor_check(Context& c, const std::string& expr, const std::string& point) {
  const Multivector psi = c.value(expr);
  const Multivector o = c.point_or_default(point);
  const PointorCheck r = is_pointor(psi, o, c.tol);
  if (r.ok)
    c.line("\xCF\x81 = " + num(r.rho));
  else
    c.line("not a pointor");
  c.residual("pointor", r.residual);
  c.emit({{"command", "pointor-check"}, {"pointor", r.ok}, {"rho", r.rho}});
}

void cmd_label(Context& c, const std::string& expr, const std::string& point) {
  const Multivector zeta = c.value(expr);
  const PointFrame f = factor_point(c.point_or_default(point), c.tol);
  Multivector total(c.sig, zeta.field());
  json parts = json::array();
  for (const auto& [s, part] : label_decompose(zeta, f, c.tol)) {
    c.line(to_string(s) + ": " + show(part, c.tol));
    parts.push_back({{"label", s}, {"value", to_json(part)}});
    total += part;
  }
  c.residual("completeness", relative_difference(total, zeta));
  c.emit({{"command", "label"}, {"components", parts}});
}

void cmd_gauge(Context& c, const std::string& u_expr, const std::string& v_expr, double alpha) {
  const Multivector u = c.value(u_expr), v = c.value(v_expr);
  const GaugedPair g = gauge_pair(u, v, alpha, c.tol);
  c.line("u: " + show(g.u, c.tol));
  c.line("v: " + show(g.v, c.tol));
  if (g.parallel) c.line("(parallel mirrors: no rotation applied)");
  c.residual("product", relative_difference(g.v * g.u, v * u));
  c.emit({{"command", "gauge"}, {"u", to_json(g.u)}, {"v", to_json(g.v)}, {"parallel", g.parallel}});
}

void cmd_double_cover(Context& c, const std::string& expr, int steps, const std::string& probe_expr) {
  const Multivector b = c.value(expr);
  if (!is_pure_grade(b, 2, c.tol) ||
      relative_difference(b * b, Multivector::scalar(c.sig, -1.0)) > c.tol)
    throw Error(ErrorKind::Domain, "double-cover needs a bivector with b^2 = -1");
  Multivector probe;
  if (!probe_expr.empty()) {
    probe = c.value(probe_expr);
  } else {
    std::mt19937_64 rng(c.seed);
    std::normal_distribution<double> normal;
    std::vector<double> xs(static_cast<std::size_t>(c.sig.dim()));
    for (double& x : xs) x = normal(rng);
    probe = Multivector::vector(c.sig, xs);
  }
  auto rotor = [&](double theta) { return exp_bivector(b * theta, c.tol); };
  auto act = [&](double theta) {
    const Multivector r = rotor(theta);
    return r * probe * reverse(r);
  };
  c.line("theta  scalar(R)  R  probe");
  json rows = json::array();
  for (int i = 0; i <= steps; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / steps;
    const Multivector r = rotor(theta), image = act(theta);
    c.line(num(theta) + "  " + num(r.scalar_part().real()) + "  " + show(r, 1e-12) + "  " +
           show(image, 1e-12));
    rows.push_back({{"theta", theta}, {"rotor", to_json(r)}, {"probe", to_json(image)}});
  }
  const Multivector one = Multivector::scalar(c.sig, 1.0);
  c.residual("half turn", relative_difference(rotor(std::numbers::pi), -one));
  c.residual("full turn", relative_difference(rotor(2.0 * std::numbers::pi), one));
  c.residual("probe period", relative_difference(act(std::numbers::pi), probe));
  c.emit({{"command", "double-cover"}, {"rows", rows}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford algebra, versor decomposition, spinors and pointors", "cliff"};
  app.require_subcommand(1);
  std::string sig_text;
  double tol = kDefaultTolerance;
  bool json_mode = false;
  std::uint64_t seed = 1;
  app.add_option("--sig", sig_text, "signature p,q,r")->required();
  app.add_option("--tol", tol, "verification tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--json", json_mode, "line-delimited JSON output");
  app.add_option("--seed", seed, "seed for randomized inputs");

  std::string a, b, point, probe;
  double alpha = 0.0;
  int steps = 8;
  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", a)->required();
  auto* decompose = app.add_subcommand("decompose", "invariant decomposition of a versor");
  decompose->add_option("versor", a)->required();
  auto* pt = app.add_subcommand("point", "factor a point into orthogonal vectors");
  pt->add_option("blade", a)->required();
  auto* spinor = app.add_subcommand("spinor", "null basis, idempotent and basis spinors");
  spinor->add_option("--point", point, "point (default: pseudoscalar)");
  auto* pcheck = app.add_subcommand("pointor-check", "check psi O psi~ = rho O");
  pcheck->add_option("psi", a)->required();
  pcheck->add_option("--point", point, "point (default: pseudoscalar)");
  auto* label = app.add_subcommand("label", "label decomposition against a point frame");
  label->add_option("zeta", a)->required();
  label->add_option("--point", point, "point (default: pseudoscalar)");
  auto* gauge = app.add_subcommand("gauge", "rotate a mirror pair about its intersection");
  gauge->add_option("u", a)->required();
  gauge->add_option("v", b)->required();
  gauge->add_option("--alpha", alpha, "gauge angle")->required();
  auto* cover = app.add_subcommand("double-cover", "trace exp(theta b) over a full turn");
  cover->add_option("bivector", a)->required();
  cover->add_option("--steps", steps, "rows per turn")->check(CLI::Range(4, 100000));
  cover->add_option("--probe", probe, "probe vector (default: random from --seed)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    Context c{parse_signature(sig_text), tol, json_mode, seed, out};
    if (*eval) cmd_eval(c, a);
    else if (*decompose) cmd_decompose(c, a);
    else if (*pt) cmd_point(c, a);
    else if (*spinor) cmd_spinor(c, point);
    else if (*pcheck) cmd_pointor_check(c, a, point);
    else if (*label) cmd_label(c, a, point);
    else if (*gauge) cmd_gauge(c, a, b, alpha);
    else if (*cover) cmd_double_cover(c, a, steps, probe);
    return c.ok ? kOk : kAlgebraError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? kParseError : kAlgebraError;
  }
}

}  // namespace cliff::cli
