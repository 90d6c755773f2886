// Command-line interface: radial/momentum/harmonic sampling, the bound
// state table, and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cartfact/momentum.hpp"
#include "cartfact/opalgebra.hpp"
#include "cartfact/radial.hpp"
#include "cartfact/spectrum.hpp"
#include "cartfact/verify.hpp"
#include "json.hpp"

using namespace cartfact;
using nlohmann::json;

namespace {

// CODATA values for the si-scaled output mode
constexpr double kBohrMeter = 5.29177210903e-11;
constexpr double kHartreeJoule = 4.3597447222071e-18;
constexpr double kHbarSI = 1.054571817e-34;

struct RunConfig {
  std::string units = "hartree";
  std::string format = "csv";
  std::string out;
  unsigned precision = 15;
  bool si() const { return units == "si-scaled"; }
};

struct Samples {
  double lo = 0, hi = 1;
  unsigned count = 0;
};

Samples parse_samples(const std::string& spec) {
  Samples s;
  char c1, c2;
  std::istringstream in(spec);
  if (!(in >> s.lo >> c1 >> s.hi >> c2 >> s.count) || c1 != ':' ||
      c2 != ':' || s.count < 1 || s.hi < s.lo)
    throw CLI::ValidationError("--samples", "expected lo:hi:count");
  return s;
}

std::vector<double> sample_points(const Samples& s) {
  std::vector<double> pts;
  for (unsigned j = 0; j < s.count; ++j)
    pts.push_back(s.count == 1
                      ? s.lo
                      : s.lo + (s.hi - s.lo) * j / double(s.count - 1));
  return pts;
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) {
    if (!cfg.out.empty()) {
      file_.open(cfg.out);
      if (!file_) throw CLI::ValidationError("--out", "cannot open file");
    }
    stream().precision(cfg.precision);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string rational_str(const Rational& q) { return q.get_str(); }

int cmd_radial(const RunConfig& cfg, unsigned n, unsigned l,
               const std::string& samples_spec) {
  RadialState st = radial::closed_form_radial(n, l);
  Samples s{0.0, n * (2.0 * n + 10.0), 50};
  if (!samples_spec.empty()) s = parse_samples(samples_spec);
  double rscale = cfg.si() ? kBohrMeter : 1.0;
  double fscale = cfg.si() ? std::pow(kBohrMeter, -1.5) : 1.0;

  Output out(cfg);
  if (cfg.format == "csv") {
    out.stream() << "r,R_nl\n";
    for (double r : sample_points(s))
      out.stream() << r * rscale << "," << st.eval(r) * fscale << "\n";
  } else {
    json doc{{"n", n},
             {"l", l},
             {"variable", "rho = 2 r / n"},
             {"units", cfg.units}};
    for (const ExactScalar& c : st.poly.coeffs())
      doc["coefficients"].push_back(c.str());
    for (double r : sample_points(s))
      doc["samples"].push_back(
          {{"r", r * rscale}, {"R_nl", st.eval(r) * fscale}});
    out.stream() << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_momentum(const RunConfig& cfg, unsigned n, unsigned l,
                 const std::string& samples_spec) {
  MomentumRadial prof = momentum::momentum_radial_closed(n, l);
  Samples s{0.0, 8.0 / n, 50};
  if (!samples_spec.empty()) s = parse_samples(samples_spec);
  double pscale = cfg.si() ? kHbarSI / kBohrMeter : 1.0;
  double fscale = cfg.si() ? std::pow(kBohrMeter / kHbarSI, 1.5) : 1.0;

  Output out(cfg);
  if (cfg.format == "csv") {
    out.stream() << "p,radial_profile\n";
    for (double p : sample_points(s))
      out.stream() << p * pscale << "," << prof.eval(p) * fscale << "\n";
  } else {
    json doc{{"n", n},
             {"l", l},
             {"variable", "xi^2 = (n p)^2"},
             {"prefactor", prof.prefactor.str()},
             {"denom_power", prof.denom_power},
             {"xi_power", prof.l},
             {"units", cfg.units}};
    for (const ExactScalar& c : prof.numerator.coeffs())
      doc["numerator"].push_back(c.str());
    for (double p : sample_points(s))
      doc["samples"].push_back(
          {{"p", p * pscale}, {"radial_profile", prof.eval(p) * fscale}});
    out.stream() << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_harmonic(const RunConfig& cfg, unsigned l) {
  auto basis = harmonic::basis(l);
  Output out(cfg);
  if (cfg.format == "csv") {
    out.stream() << "a,b,c,coeff_numerator,coeff_denominator,radicand,"
                    "pi_half\n";
    for (const HarmonicPoly& h : basis)
      for (const auto& [e, coeff] : h.poly.terms())
        out.stream() << e[0] << "," << e[1] << "," << e[2] << ","
                     << coeff.re().get_num().get_str() << ","
                     << coeff.re().get_den().get_str() << ","
                     << coeff.radicand().get_num().get_str() << ","
                     << coeff.pi_half() << "\n";
  } else {
    json doc{{"l", l}, {"dimension", basis.size()}};
    for (const HarmonicPoly& h : basis) {
      json terms = json::array();
      for (const auto& [e, coeff] : h.poly.terms())
        terms.push_back(
            {{"a", e[0]}, {"b", e[1]}, {"c", e[2]}, {"coeff", coeff.str()}});
      doc["basis"].push_back({{"degree", h.degree}, {"terms", terms}});
    }
    out.stream() << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_table(const RunConfig& cfg, unsigned max_n) {
  auto rows = spectrum::multiplet_table(max_n);
  Output out(cfg);
  if (cfg.format == "csv") {
    out.stream() << "n,energy_hartree,l_list,degeneracy\n";
    for (const auto& row : rows) {
      out.stream() << row.n << ","
                   << rational_str(row.energy_hartree.to_rational()) << ",";
      for (std::size_t j = 0; j < row.l_list.size(); ++j)
        out.stream() << (j ? ";" : "") << row.l_list[j];
      out.stream() << "," << row.degeneracy << "\n";
    }
  } else {
    json doc = json::array();
    for (const auto& row : rows) {
      json r{{"n", row.n},
             {"energy_hartree", rational_str(row.energy_hartree.to_rational())},
             {"l_list", row.l_list},
             {"degeneracy", row.degeneracy}};
      if (cfg.si())
        r["energy_joule"] = row.energy_hartree.to_double() * kHartreeJoule;
      doc.push_back(r);
    }
    out.stream() << doc.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct Report {
  std::ostream& out;
  bool ok = true;
  void exact(const std::string& name, bool pass) {
    ok = ok && pass;
    out << "  " << name << ": " << (pass ? "ok (exact)" : "FAILED") << "\n";
  }
  void numeric(const std::string& name, double dev, double tol) {
    bool pass = dev <= tol;
    ok = ok && pass;
    out << "  " << name << ": deviation " << dev << " (tol " << tol << ") "
        << (pass ? "ok" : "FAILED") << "\n";
  }
};

void suite_operators(Report& rep) {
  rep.out << "suite operators\n";
  const ExactScalar I = ExactScalar::i();
  const OpExpr shift = OpExpr::scalar(I * ExactScalar::sqrt_of(rat(2))) *
                       OpExpr::r_pow(-1);
  auto tshift = [&](const Rational& c) {
    return tperp() -
           OpExpr::scalar(ExactScalar(Rational(c / 2))) * OpExpr::r_pow(-2);
  };

  bool fact = true;
  for (const Rational& lam : {rat(1), rat(2)}) {
    OpExpr sum;
    for (unsigned a = 0; a < 3; ++a) sum += a_dag(lam, a) * a_op(lam, a);
    fact = fact && check_identity(sum, hamiltonian(lam) - energy_shift(lam));
  }
  rep.exact("cartesian factorization sum", fact);
  rep.exact("[r, p_r] = i", commutator(OpExpr::r_pow(1), pr()) ==
                                OpExpr::scalar(I));
  rep.exact("[T_perp, r] = 0",
            commutator(tperp(), OpExpr::r_pow(1)).is_zero());
  rep.exact("[p_r, T_perp] = 2i T_perp / r",
            check_identity(commutator(pr(), tperp()),
                           OpExpr::scalar(ExactScalar(rat(2)) * I) *
                               (OpExpr::r_pow(-1) * tperp())));

  bool radial_ladder = true;
  for (const Rational& lam : {rat(0), rat(1), rat(2)}) {
    OpExpr bd = b_dag(lam);
    OpExpr b = bd.adjoint();
    OpExpr lower = OpExpr::scalar(ExactScalar(Rational(lam * (lam + 1) / 2))) *
                   OpExpr::r_pow(-2);
    OpExpr upper =
        OpExpr::scalar(ExactScalar(Rational((lam + 1) * (lam + 2) / 2))) *
        OpExpr::r_pow(-2);
    radial_ladder =
        radial_ladder &&
        check_identity(hamiltonian(rat(1)),
                       bd * b + tperp() - lower + energy_shift(lam + 1)) &&
        check_identity(hamiltonian(rat(1)),
                       b * bd + tperp() - upper + energy_shift(lam + 1));
  }
  rep.exact("radial ladder factorizations", radial_ladder);

  bool inter = true;
  for (const Rational& lam : {rat(0), rat(1), rat(2)}) {
    OpExpr lhs = hamiltonian(rat(1)) * b_dag(lam);
    OpExpr rhs =
        b_dag(lam) * (hamiltonian(rat(1)) +
                      OpExpr::scalar(ExactScalar(Rational(lam + 1))) *
                          OpExpr::r_pow(-2)) -
        shift * tshift(lam * (lam + 1));
    inter = inter && check_identity(lhs, rhs);
  }
  rep.exact("modified intertwining relation", inter);

  bool chained = true;
  struct NL {
    unsigned n, l;
  };
  for (const NL& c : {NL{3, 1}, NL{4, 2}, NL{4, 1}}) {
    OpExpr chain = OpExpr::scalar(ExactScalar(rat(1)));
    OpExpr shifted_chain = chain;
    for (unsigned j = c.l; j + 2 <= c.n; ++j) {
      chain *= b_dag(rat(j));
      shifted_chain *= b_dag(rat(j)) - shift;
    }
    Rational s(0);
    for (unsigned j = 1; j <= c.n - c.l - 1; ++j) s += c.n - j;
    OpExpr lhs = hamiltonian(rat(1)) * chain;
    OpExpr rhs =
        chain * (hamiltonian(rat(1)) +
                 OpExpr::scalar(ExactScalar(s)) * OpExpr::r_pow(-2)) +
        (shifted_chain - chain) * tshift(rat(c.l * (c.l + 1)));
    chained = chained && check_identity(lhs, rhs);
  }
  rep.exact("chained intertwining (length <= 3)", chained);
}

void suite_eigen(Report& rep, unsigned max_n) {
  rep.out << "suite eigen\n";
  bool all = true;
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned l = 0; l < n; ++l)
      for (unsigned m = 0; m < 2 * l + 1; ++m)
        all = all && spectrum::verify_eigen(n, l, m).is_zero();
  rep.exact("H(1) chain states are eigenstates", all);
  rep.exact("perturbed chain breaks the eigenvalue relation",
            !spectrum::perturbed_residual(3, 0, 0, {rat(1), rat(1)}, rat(3))
                 .is_zero());
}

void suite_radial(Report& rep, unsigned max_n) {
  rep.out << "suite radial\n";
  bool routes = true, overlaps = true, ode = true;
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned l = 0; l < n; ++l) {
      routes = routes &&
               radial::rodrigues_radial(n, l).poly ==
                   radial::chain_radial(n, l).poly &&
               spectrum::norm_constant(n, l) * radial::chain_radial(n, l).poly ==
                   radial::closed_form_radial(n, l).poly;
      ode = ode && verify::ode_residual(n, l).is_zero();
    }
  unsigned cap = std::min(max_n, 8u);
  for (unsigned n = 1; n <= cap; ++n)
    for (unsigned np = 1; np <= cap; ++np)
      for (unsigned l = 0; l < std::min(n, np); ++l)
        overlaps = overlaps &&
                   radial::radial_overlap(n, np, l) ==
                       (n == np ? ExactScalar(rat(1)) : ExactScalar());
  rep.exact("three radial routes agree", routes);
  rep.exact("exact orthonormality", overlaps);
  rep.exact("hypergeometric ODE residual", ode);
}

void suite_momentum(Report& rep, unsigned max_n) {
  rep.out << "suite momentum\n";
  bool q = true, th = true, me = true, pipe = true;
  for (unsigned m = 0; m <= 30; ++m) q = q && q_recurrence(m) == q_closed(m);
  for (unsigned j = 0; j <= 20; ++j)
    th = th && reverse_bessel_derivative_recurrence(j) == reverse_bessel(j);
  for (unsigned m = 0; m <= 15; ++m)
    me = me && momentum::theta_me(m, 3).denom_power == m;  // cross-checked
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned l = 0; l < n; ++l)
      pipe = pipe && momentum::momentum_radial_pipeline(n, l) ==
                         momentum::momentum_radial_closed(n, l);
  rep.exact("moment polynomial recurrence vs closed form", q);
  rep.exact("reverse Bessel derivative recurrence", th);
  rep.exact("theta matrix elements (moment expansion)", me);
  rep.exact("momentum pipeline equals Gegenbauer closed form", pipe);
}

void suite_numeric(Report& rep, unsigned max_n, double tol) {
  rep.out << "suite numeric\n";
  double norm_tol = tol > 0 ? tol : 1e-10;
  double fourier_tol = tol > 0 ? tol : 1e-8;
  double norm_dev = 0, fdev = 0;
  for (unsigned n = 1; n <= std::min(max_n, 6u); ++n)
    for (unsigned l = 0; l < n; ++l) {
      norm_dev = std::max(norm_dev, verify::coordinate_norm_deviation(n, l));
      norm_dev = std::max(norm_dev, verify::momentum_norm_deviation(n, l));
    }
  for (unsigned n = 1; n <= std::min(max_n, 4u); ++n)
    for (unsigned l = 0; l < n; ++l)
      fdev = std::max(fdev, verify::fourier_check(n, l, {0.3, 0.9, 1.7}));
  rep.numeric("normalization integrals", norm_dev, norm_tol);
  rep.numeric("Fourier cross-representation", fdev, fourier_tol);

  bool frob = true;
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned l = 0; l < n; ++l)
      frob = frob && verify::frobenius(rat(n), l, 100).terminated;
  frob = frob && !verify::frobenius(rat(5, 2), 0, 50).terminated;
  rep.exact("Frobenius termination iff lambda-l-1 integer", frob);
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, unsigned max_n,
               double tol) {
  Output out(cfg);
  Report rep{out.stream()};
  bool all = suite == "all";
  if (all || suite == "operators") suite_operators(rep);
  if (all || suite == "eigen") suite_eigen(rep, std::min(max_n, 6u));
  if (all || suite == "radial") suite_radial(rep, max_n);
  if (all || suite == "momentum") suite_momentum(rep, std::min(max_n, 12u));
  if (all || suite == "numeric") suite_numeric(rep, max_n, tol);
  out.stream() << (rep.ok ? "PASS" : "FAIL") << "\n";
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hydrogen bound states via Cartesian operator "
               "factorization"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--units", cfg.units, "hartree or si-scaled")
      ->check(CLI::IsMember({"hartree", "si-scaled"}));
  app.add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "write to file instead of stdout");
  app.add_option("--precision", cfg.precision, "float digits")
      ->check(CLI::Range(6u, 17u));

  unsigned n = 1, l = 0, max_n = 4;
  std::string samples, suite = "all";
  double tol = -1;

  CLI::App* radial_cmd = app.add_subcommand("radial", "radial wavefunction");
  radial_cmd->fallthrough();
  radial_cmd->add_option("--n", n)->required();
  radial_cmd->add_option("--l", l)->required();
  radial_cmd->add_option("--samples", samples, "lo:hi:count");

  CLI::App* mom_cmd = app.add_subcommand("momentum", "momentum profile");
  mom_cmd->fallthrough();
  mom_cmd->add_option("--n", n)->required();
  mom_cmd->add_option("--l", l)->required();
  mom_cmd->add_option("--samples", samples, "lo:hi:count");

  CLI::App* harm_cmd = app.add_subcommand("harmonic", "harmonic basis");
  harm_cmd->fallthrough();
  harm_cmd->add_option("--l", l)->required();

  CLI::App* table_cmd = app.add_subcommand("table", "bound state table");
  table_cmd->fallthrough();
  table_cmd->add_option("--max-n", max_n)->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"operators", "eigen", "radial", "momentum", "numeric", "all"}));
  verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--tol", tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (radial_cmd->parsed()) return cmd_radial(cfg, n, l, samples);
    if (mom_cmd->parsed()) return cmd_momentum(cfg, n, l, samples);
    if (harm_cmd->parsed()) return cmd_harmonic(cfg, l);
    if (table_cmd->parsed()) return cmd_table(cfg, max_n);
    if (verify_cmd->parsed()) return cmd_verify(cfg, suite, max_n, tol);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
