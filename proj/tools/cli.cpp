#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

#include "graphsq/certify.hpp"
#include "graphsq/enumerate.hpp"
#include "graphsq/families.hpp"
#include "graphsq/iso.hpp"
#include "graphsq/parallel.hpp"
#include "graphsq/verify.hpp"

namespace graphsq::cli {

namespace {

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// A positional graph6 argument, or every non-empty line of `in`.
std::vector<Graph> read_graphs(const std::string& arg, std::istream& in) {
  std::vector<Graph> out;
  if (!arg.empty() && arg != "-") {
    out.push_back(from_graph6(arg));
    return out;
  }
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(from_graph6(line));
  }
  if (out.empty()) throw std::invalid_argument("no graph6 input");
  return out;
}

int exit_for(Status s) {
  switch (s) {
    case Status::holds: return kHolds;
    case Status::violated: return kViolated;
    case Status::undecided: return kUndecided;
  }
  return kUsage;
}

int emit_report(const ClaimReport& r, const std::string& format, std::ostream& out) {
  out << (format == "csv" ? r.to_csv() : r.to_json());
  return exit_for(r.status);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radii of graph squares: queries, families, enumeration and claim checks", "graphsq"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string graph_arg;
  unsigned power_k = 1;
  double tol = kDefaultTolerance;
  bool exact = false;
  auto* rho = app.add_subcommand("rho", "Spectral radius of G^K");
  rho->add_option("graph6", graph_arg, "Graph in graph6 (stdin if omitted)");
  rho->add_option("--power", power_k, "Power K")->check(CLI::PositiveNumber);
  rho->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
  rho->add_flag("--exact", exact, "Also print the exact isolating interval");

  auto* square = app.add_subcommand("square", "graph6 of G^2");
  square->add_option("graph6", graph_arg, "Graph in graph6 (stdin if omitted)");

  std::string family_text;
  auto* family = app.add_subcommand("family", "graph6 of a named family member, e.g. broom:n=9,d=4,i=3");
  family->add_option("spec", family_text)->required();

  std::string enum_kind;
  std::size_t enum_n = 0;
  std::optional<std::size_t> enum_girth, enum_diameter;
  auto* enumerate = app.add_subcommand("enum", "Enumerate graphs up to isomorphism as graph6 lines");
  enumerate->add_option("class", enum_kind)->required()->check(CLI::IsMember({"trees", "unicyclic", "connected"}));
  enumerate->add_option("--n", enum_n, "Order")->required();
  enumerate->add_option("--girth", enum_girth, "Girth filter (unicyclic)");
  enumerate->add_option("--diameter", enum_diameter, "Diameter filter (trees)");

  std::string forb_class, forb_threshold;
  std::size_t forb_nmax = 0;
  bool strict = false, proper = false;
  unsigned jobs = default_jobs();
  auto* forbidden = app.add_subcommand("forbidden", "Minimal members with rho(G^2) above a threshold");
  forbidden->add_option("--class", forb_class)->required()->check(CLI::IsMember({"tree", "trees", "unicyclic"}));
  forbidden->add_option("--threshold", forb_threshold, "Integer, decimal or p/q")->required();
  forbidden->add_option("--n-max", forb_nmax)->required();
  auto* strict_flag = forbidden->add_flag("--strict", strict, "rho > threshold (default)");
  forbidden->add_flag("--proper", proper, "rho >= threshold")->excludes(strict_flag);
  forbidden->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  ClaimRequest req;
  std::string format = "json";
  std::optional<std::size_t> g_min, g_max, d_min, d_max;
  auto* verify = app.add_subcommand("verify", "Check one claim over a parameter range");
  verify->add_option("claim", req.claim)->required();
  verify->add_option("--n-min", req.n_min);
  verify->add_option("--n-max", req.n_max);
  verify->add_option("--g-min", g_min, "Girth range (check_girth_max)");
  verify->add_option("--g-max", g_max);
  verify->add_option("--d-min", d_min, "Diameter range (check_diameter_candidates)");
  verify->add_option("--d-max", d_max);
  verify->add_option("--seed", req.options.seed);
  verify->add_option("--trials", req.options.trials)->check(CLI::PositiveNumber);
  verify->add_option("--tol", req.options.tolerance)->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--timing", req.options.timing, "Record runtime_ms");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::string scan_id;
  std::size_t scan_nmax = 0;
  bool scan_timing = false;
  auto* scan = app.add_subcommand("scan", "Numerical scan of an open conjecture");
  scan->add_option("conjecture", scan_id)->required()->check(CLI::IsMember({"conjecture1", "conjecture2"}));
  scan->add_option("--n-max", scan_nmax)->required();
  scan->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  scan->add_flag("--timing", scan_timing, "Record runtime_ms");
  scan->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  try {
    if (*rho) {
      if (power_k == 0) throw std::invalid_argument("--power must be >= 1");
      for (const auto& g : read_graphs(graph_arg, in)) {
        EvaluationOptions eo;
        eo.tolerance = tol;
        eo.use_exact = exact;
        if (exact && g.order() > kExactOrderCap)
          throw std::invalid_argument("--exact supports order <= " + std::to_string(kExactOrderCap));
        auto r = evaluate(power(g, power_k), eo);
        out << fixed12(r.radius()) << " residual=" << sci(r.iterative.residual) << " bounds=["
            << fixed12(r.iterative.lower) << ", " << fixed12(r.iterative.upper) << "]";
        if (r.exact) {
          out << " exact=[" << fixed12(r.exact->lo_double()) << ", " << fixed12(r.exact->hi_double()) << "]";
          if (r.exact->integer_value) out << " integer=" << r.exact->integer_value->str();
          out << " charpoly=" << format_polynomial(r.exact->charpoly);
        }
        out << '\n';
      }
      return kHolds;
    }
    if (*square) {
      for (const auto& g : read_graphs(graph_arg, in)) out << to_graph6(power(g, 2)) << '\n';
      return kHolds;
    }
    if (*family) {
      out << to_graph6(FamilySpec::parse(family_text).build()) << '\n';
      return kHolds;
    }
    if (*enumerate) {
      std::vector<Graph> graphs;
      if (enum_kind == "trees") {
        if (enum_girth) throw std::invalid_argument("--girth applies to unicyclic graphs");
        graphs = enum_diameter ? all_trees_with_diameter(enum_n, *enum_diameter) : all_trees(enum_n);
      } else if (enum_kind == "unicyclic") {
        if (enum_diameter) throw std::invalid_argument("--diameter applies to trees");
        graphs = all_unicyclic(enum_n, enum_girth);
      } else {
        if (enum_girth || enum_diameter) throw std::invalid_argument("connected graphs take no filters");
        graphs = all_connected(enum_n);
      }
      write_graph6_lines(out, graphs);
      return kHolds;
    }
    if (*forbidden) {
      const auto cls = forb_class == "unicyclic" ? GraphClass::unicyclic : GraphClass::tree;
      auto set = minimal_forbidden(cls, parse_rational(forb_threshold), forb_nmax,
                                   proper ? ForbiddenMode::proper : ForbiddenMode::strict, jobs);
      write_graph6_lines(out, set.graphs);
      for (const auto& g : set.undecided) err << "undecided: " << to_graph6(g) << '\n';
      return set.undecided.empty() ? kHolds : kUndecided;
    }
    if (*verify) {
      req.options.jobs = jobs;
      if (g_min || g_max) req.girth = IntRange{g_min.value_or(3), g_max.value_or(kUnicyclicOrderCap)};
      if (d_min || d_max) req.diameter = IntRange{d_min.value_or(2), d_max.value_or(kTreeOrderCap)};
      return emit_report(run_claim(req), format, out);
    }
    if (*scan) {
      VerifyOptions o;
      o.jobs = jobs;
      o.timing = scan_timing;
      auto r = scan_id == "conjecture1" ? scan_conjecture1(scan_nmax, o) : scan_conjecture2(scan_nmax, o);
      return emit_report(r, format, out);
    }
  } catch (const ConvergenceError& e) {
    err << "graphsq: " << e.what() << '\n';
    return kUndecided;
  } catch (const std::exception& e) {
    err << "graphsq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace graphsq::cli
