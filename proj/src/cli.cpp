#include "quadrep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "quadrep/compose.hpp"
#include "quadrep/contfrac.hpp"
#include "quadrep/cornacchia.hpp"
#include "quadrep/factor.hpp"
#include "quadrep/modsqrt.hpp"
#include "quadrep/oracle.hpp"

namespace quadrep {

namespace {

using json = nlohmann::json;

FactorOptions factor_options_from_env() {
  FactorOptions options;
  if (const char* env = std::getenv("QUADREP_FACTOR_EFFORT")) {
    Int effort = parse_int(env);
    if (sgn(effort) <= 0 || !effort.fits_ulong_p()) {
      throw std::invalid_argument("QUADREP_FACTOR_EFFORT must be a positive integer");
    }
    options.effort = effort.get_ui();
  }
  return options;
}

Nat parse_at_least(const std::string& text, long lo, const char* what) {
  Int v = parse_int(text);
  if (v < lo) {
    throw std::invalid_argument(std::string(what) + " must be >= " + std::to_string(lo));
  }
  return v;
}

// Normalized root w = x / y mod m belonging to a proper solution.
Nat root_of(const Representation& rep) {
  return normalize_root(mod(rep.x * mod_inverse(rep.y, rep.m), rep.m), rep.m);
}

bool same_set(std::vector<Representation> a, std::vector<Representation> b) {
  canonicalize(a);
  canonicalize(b);
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Representation& l, const Representation& r) {
                      return l.x == r.x && l.y == r.y && l.proper == r.proper;
                    });
}

struct SolveArgs {
  std::string m;
  std::string d = "1";
  bool proper_only = false;
  bool improper = false;
  bool brute = false;
  bool json = false;
  bool verbose = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  ProblemSpec spec{parse_at_least(args.d, 1, "d"), parse_at_least(args.m, 2, "m")};
  spec.validate();
  const auto options = factor_options_from_env();
  const bool full = args.improper && !args.proper_only;

  Factorization f = factorize(spec.m, options);
  ProperReport report = solve_proper_report(spec, f);
  std::vector<Representation> solutions =
      full ? solve_general(spec, options) : report.solutions;
  if (!full) canonicalize(solutions);

  std::optional<bool> agrees;
  std::vector<Representation> brute;
  if (args.brute) {
    brute = full ? brute_solutions(spec.d, spec.m) : brute_proper(spec.d, spec.m);
    agrees = same_set(brute, solutions);
  }

  if (args.json) {
    json doc;
    doc["m"] = spec.m.get_str();
    doc["d"] = spec.d.get_str();
    doc["roots"] = json::array();
    for (const auto& w : report.roots.roots) doc["roots"].push_back(w.get_str());
    doc["solutions"] = json::array();
    for (const auto& rep : solutions) {
      json s;
      s["x"] = rep.x.get_str();
      s["y"] = rep.y.get_str();
      s["proper"] = rep.proper;
      s["w"] = rep.proper ? json(root_of(rep).get_str()) : json(nullptr);
      doc["solutions"].push_back(std::move(s));
    }
    if (agrees) doc["brute_agrees"] = *agrees;
    out << doc.dump(2) << '\n';
    return solutions.empty() ? kExitNone : kExitFound;
  }

  out << "roots:";
  for (const auto& w : report.roots.roots) out << ' ' << w;
  if (report.roots.roots.empty()) out << " none";
  out << '\n';
  if (args.verbose) {
    const char* index_name = spec.d == 1 ? "mu" : "nu";
    for (const auto& a : report.attempts) {
      out << "w=" << a.w << " t_" << index_name << '=' << a.t_index << " t=" << a.t
          << " D=" << a.D << ' ' << index_name << '=' << a.index << ' '
          << (a.rep ? "accept" : "reject") << '\n';
    }
  }
  for (const auto& rep : solutions) out << rep.to_string() << '\n';
  if (solutions.empty()) out << (full ? "no solution" : "no proper solution") << '\n';
  if (agrees) {
    out << "brute force: " << brute.size() << " solution(s), "
        << (*agrees ? "agrees with solver" : "DISAGREES with solver") << '\n';
    if (args.verbose) {
      for (const auto& rep : brute) out << "brute: " << rep.to_string() << '\n';
    }
  }
  return solutions.empty() ? kExitNone : kExitFound;
}

int cmd_sqrtmod(const std::string& a_text, const std::string& m_text, std::ostream& out) {
  Int a = parse_int(a_text);
  Nat m = parse_at_least(m_text, 2, "m");
  Nat a_red = mod(a, m);
  auto roots = sqrt_mod(a_red, m, factorize(m, factor_options_from_env()));
  if (roots.roots.empty()) {
    out << "no square root of " << a << " mod " << m << '\n';
    return kExitNone;
  }
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    out << (i ? " " : "") << roots.roots[i];
  }
  out << '\n';
  return kExitFound;
}

int cmd_factor(const std::string& m_text, std::ostream& out) {
  Nat m = parse_at_least(m_text, 2, "m");
  auto f = factorize(m, factor_options_from_env());
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    out << (i ? " * " : "") << f.factors[i].p;
    if (f.factors[i].e > 1) out << '^' << f.factors[i].e;
  }
  out << '\n';
  return kExitFound;
}

int cmd_cf(const std::string& a_text, const std::string& b_text, std::ostream& out) {
  Nat a = parse_at_least(a_text, 0, "a");
  Nat b = parse_at_least(b_text, 2, "b");
  auto cf = Antenaresis::expand(a, b);

  out << a << '/' << b << " = [";
  for (long j = 0; j <= cf.k(); ++j) out << cf.q(j) << (j == 0 ? "; " : j < cf.k() ? ", " : "");
  out << "]\n";
  out << "quotients:";
  for (const auto& q : cf.quotients()) out << ' ' << q;
  out << "\nremainders:";
  for (const auto& r : cf.remainders()) out << ' ' << r;
  out << "\nconvergents:";
  for (long j = 0; j <= cf.k(); ++j) out << ' ' << cf.A(j) << '/' << cf.B(j);
  out << '\n';

  // r(k) = (-1)^(k-1) (a B(k-1) - b A(k-1))
  const long k = cf.k();
  Int s = cf.B(k - 1);
  Int t = -cf.A(k - 1);
  if ((k - 1) % 2 != 0) {
    s = -s;
    t = -t;
  }
  out << "bezout: " << s << '*' << a << (sgn(t) < 0 ? " - " : " + ") << abs(t) << '*' << b
      << " = " << cf.r(k) << '\n';
  return kExitFound;
}

int cmd_smith(const std::string& p_text, std::ostream& out) {
  Nat p = parse_at_least(p_text, 2, "p");
  auto r = smith_two_squares(p);
  out << "h=" << r.h << " x=" << r.x << " y=" << r.y << '\n';
  out << p << " = " << r.x << "^2 + " << r.y << "^2\n";
  return kExitFound;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representations of m by x^2 + d*y^2 via Cornacchia's algorithm", "quadrep"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve x^2 + d*y^2 = m");
  solve->add_option("m", solve_args.m, "right-hand side, m >= 2")->required();
  solve->add_option("--d", solve_args.d, "coefficient d >= 1, coprime to m")
      ->capture_default_str();
  auto* proper_flag =
      solve->add_flag("--proper-only", solve_args.proper_only, "proper solutions only (default)");
  solve->add_flag("--improper", solve_args.improper, "also list improper solutions")
      ->excludes(proper_flag);
  solve->add_flag("--brute", solve_args.brute, "cross-check against brute-force enumeration");
  solve->add_flag("--json", solve_args.json, "JSON report");
  solve->add_flag("--verbose", solve_args.verbose, "print the stopping data for every root");

  std::string sq_a, sq_m;
  auto* sqrtmod = app.add_subcommand("sqrtmod", "normalized square roots of a mod m");
  sqrtmod->add_option("a", sq_a)->required();
  sqrtmod->add_option("m", sq_m)->required();

  std::string fac_m;
  auto* factor = app.add_subcommand("factor", "prime factorization");
  factor->add_option("m", fac_m)->required();

  std::string cf_a, cf_b;
  auto* cf = app.add_subcommand("cf", "continued fraction of a/b with its Euclidean trace");
  cf->add_option("a", cf_a)->required();
  cf->add_option("b", cf_b)->required();

  std::string smith_p;
  auto* smith = app.add_subcommand("smith", "two squares of a prime p = 1 mod 4 by palindrome");
  smith->add_option("p", smith_p)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitFound;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*solve) return cmd_solve(solve_args, out);
    if (*sqrtmod) return cmd_sqrtmod(sq_a, sq_m, out);
    if (*factor) return cmd_factor(fac_m, out);
    if (*cf) return cmd_cf(cf_a, cf_b, out);
    if (*smith) return cmd_smith(smith_p, out);
  } catch (const FactorEffortExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace quadrep
