#include "toric/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/bott.hpp"
#include "toric/bundle.hpp"
#include "toric/error.hpp"
#include "toric/hilbert_ehrhart.hpp"
#include "toric/hodge.hpp"
#include "toric/identities.hpp"
#include "toric/io.hpp"
#include "toric/lattice_count.hpp"
#include "toric/shapes.hpp"
#include "toric/weighted_log.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string input;
  std::vector<std::string> builtin;
  bool json_out = false;
  long dilation = 1;
};

std::string join(const std::vector<BigInt>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

json integers(const std::vector<BigInt>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(io::integer(x));
  return arr;
}

json ids(const std::vector<std::size_t>& xs) {
  json arr = json::array();
  for (auto x : xs) arr.push_back(x);
  return arr;
}

// Coefficients highest power first, padded to degree n.
json descending(const UniPoly& poly, std::size_t n) {
  json arr = json::array();
  for (std::size_t i = n + 1; i-- > 0;) arr.push_back(io::fraction(poly.coefficient(i)));
  return arr;
}

json report_json(const IdentityReport& r) {
  return {{"identity", r.name},
          {"params", r.params},
          {"left", io::integer(r.left)},
          {"right", io::integer(r.right)},
          {"holds", r.holds}};
}

Polytope load(const Globals& g) {
  std::optional<Polytope> poly;
  if (!g.input.empty() && !g.builtin.empty()) {
    throw ToricError(ErrorKind::InputFormat, "use either --input or --builtin, not both");
  }
  if (!g.input.empty()) {
    poly = io::load_polytope(g.input);
  } else if (!g.builtin.empty()) {
    long arg = 0;
    if (g.builtin.size() > 1) {
      try {
        arg = std::stol(g.builtin[1]);
      } catch (const std::exception&) {
        throw ToricError(ErrorKind::InputFormat, "--builtin argument must be an integer");
      }
    }
    poly = shapes::by_name(g.builtin[0], arg);
  } else {
    throw ToricError(ErrorKind::InputFormat, "no polytope given (use --input FILE or --builtin NAME N)");
  }
  if (g.dilation != 1) return dilate(*poly, g.dilation);
  return *poly;
}

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

int emit_checks(const std::vector<Check>& checks, const Globals& g, std::ostream& out) {
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (g.json_out) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"passed", all}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << "  " << c.detail;
      out << '\n';
    }
    out << (all ? "all checks passed" : "verification FAILED") << '\n';
  }
  return all ? kExitOk : kExitCheckFailed;
}

std::vector<Check> verify_polytope(const Polytope& poly) {
  std::vector<Check> checks;
  const long n = static_cast<long>(poly.dim());
  const auto table = count_table(poly);
  const auto f = poly.faces().f_vector();
  for (long p = 0; p <= n; ++p) {
    const auto a = twisted_by_faces(table, p);
    const auto b = twisted_by_interiors(table, p);
    checks.push_back({"twisted formula I == II, p=" + std::to_string(p), a == b,
                      to_string(a) + " vs " + to_string(b)});
  }
  for (long p = 0; p <= n; ++p) {
    const auto a = untwisted_by_faces(f, p);
    const auto b = untwisted_by_interiors(f, p);
    checks.push_back({"untwisted formula I == II, p=" + std::to_string(p), a == b,
                      to_string(a) + " vs " + to_string(b)});
  }
  for (long p = 0; p <= n; ++p) {
    const auto r = dehn_sommerville(poly, p);
    checks.push_back({"Dehn-Sommerville, p=" + std::to_string(p), r.holds,
                      to_string(r.left) + " vs " + to_string(r.right)});
  }
  for (long p = 0; p <= n; ++p) {
    const auto r = face_duality(poly, p);
    checks.push_back({"face duality, p=" + std::to_string(p), r.holds,
                      to_string(r.left) + " vs " + to_string(r.right)});
  }
  const auto family = hilbert_ehrhart_all(poly);
  for (long p = 0; p <= n; ++p) {
    bool ok = true;
    std::string detail;
    for (long k = 1; k <= 2 * n + 2; ++k) {
      const auto w = reciprocity_check(family, p, k);
      if (!w.holds && ok) {
        ok = false;
        detail = "k=" + std::to_string(k) + ": " + to_string(w.lhs) + " vs " + to_string(w.rhs);
      }
    }
    checks.push_back({"reciprocity k=1.." + std::to_string(2 * n + 2) + ", p=" + std::to_string(p),
                      ok, detail});
  }
  const Rational vol = volume(poly);
  for (long p = 0; p <= n; ++p) {
    const auto w = leading_coefficient_check(family, vol, p);
    checks.push_back({"leading coefficient, p=" + std::to_string(p), w.holds,
                      to_string(w.coefficient) + " vs " + to_string(w.expected)});
  }
  if (n >= 2) {
    try {
      const auto h = primitive_hodge(poly);
      checks.push_back({"Hodge symmetry", true, join(h.values)});
    } catch (const ToricError& e) {
      checks.push_back({"Hodge symmetry", false, e.what()});
    }
  }
  return checks;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of lattice polytopes: Bott formulas, Hilbert-Ehrhart "
               "polynomials, Hodge numbers"};
  app.name("toric-bott");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--input", g.input, "JSON polytope file (bundle JSON for `bundle`)");
  app.add_option("--builtin", g.builtin, "Built-in polytope: simplex N | cube N | ex5 M | octahedron")
      ->expected(1, 2);
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_option("--dilate", g.dilation, "Dilate the input polytope by K")->check(CLI::PositiveNumber);

  auto* faces_cmd = app.add_subcommand("faces", "Face lattice and f-vector");

  auto* count_cmd = app.add_subcommand("count", "Lattice points of the polytope or one face");
  std::optional<std::size_t> face_id;
  count_cmd->add_option("--face", face_id, "Face id (default: the polytope)");

  auto* table_cmd = app.add_subcommand("table", "Per-face l and l* with the aggregate sums");

  auto* bott_cmd = app.add_subcommand("bott", "h^0(Omega^p(D)) by the generalized Bott formulas");
  long bott_p = 0;
  std::string formula = "both";
  bott_cmd->add_option("--p", bott_p, "Form degree")->required();
  bott_cmd->add_option("--formula", formula, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));

  auto* diag_cmd = app.add_subcommand("diag", "h^p(Omega^p) for p = 0..n");
  diag_cmd->add_option("--formula", formula, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));

  auto* genpoly_cmd = app.add_subcommand("genpoly", "Generating polynomials of both corollaries");

  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "p-th Hilbert-Ehrhart polynomials");
  std::optional<long> ehrhart_p;
  std::optional<long> reciprocity_k;
  ehrhart_cmd->add_option("--p", ehrhart_p, "Form degree (default: all)");
  ehrhart_cmd->add_option("--check-reciprocity", reciprocity_k, "Check reciprocity for k = 1..K")
      ->check(CLI::PositiveNumber);

  auto* hodge_cmd = app.add_subcommand("hodge", "Primitive Hodge numbers of the ample hypersurface");
  std::optional<long> ep;
  std::optional<long> chilog;
  bool printed_form = false;
  hodge_cmd->add_option("--ep", ep, "Print e^p(D)");
  hodge_cmd->add_option("--chilog", chilog, "Print chi(Omega^q(log D))");
  hodge_cmd->add_flag("--printed-form", printed_form, "Use the uncorrected printed formula (diagnostic)");
  bool phi_sum = false;
  hodge_cmd->add_flag("--phi-sum", phi_sum, "Face-signed phi sum without the ambient correction (diagnostic)")
      ->excludes("--printed-form");

  auto* weighted_cmd = app.add_subcommand("weighted", "h^0(W_k Omega^p(log(-K)) (x) L)");
  long weighted_p = 0;
  long weighted_k = 0;
  weighted_cmd->add_option("--p", weighted_p, "Form degree")->required();
  weighted_cmd->add_option("--k", weighted_k, "Weight")->required();

  auto* bundle_cmd = app.add_subcommand("bundle", "h^0(Y, Omega^p_{Y/P}(k)) on a projectivized bundle");
  long bundle_p = 0;
  long bundle_k = 0;
  bundle_cmd->add_option("--p", bundle_p, "Relative form degree")->required();
  bundle_cmd->add_option("--k", bundle_k, "Twist")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity and invariant checks");
  bool identities = false;
  long nmax = 10;
  long kmax = 10;
  verify_cmd->add_flag("--identities", identities, "Check the parametric binomial identities");
  verify_cmd->add_option("--nmax", nmax, "Largest n in the identity window");
  verify_cmd->add_option("--kmax", kmax, "Largest k in the identity window");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (verify_cmd->parsed() && identities) {
      const auto reports = identity_window(nmax, kmax);
      const bool all = std::all_of(reports.begin(), reports.end(),
                                   [](const IdentityReport& r) { return r.holds; });
      if (g.json_out) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& r : reports) {
          if (r.holds) continue;
          out << "FAIL " << r.name << ' ' << json(r.params).dump() << ": " << r.left << " vs "
              << r.right << '\n';
        }
        out << reports.size() << " identity instances checked, "
            << (all ? "all hold" : "some FAILED") << '\n';
      }
      if (!all) return kExitCheckFailed;
      if (g.input.empty() && g.builtin.empty()) return kExitOk;
    }

    if (bundle_cmd->parsed()) {
      if (g.input.empty()) throw ToricError(ErrorKind::InputFormat, "bundle needs --input bundle.json");
      const BundleData bundle = io::load_bundle(g.input);
      if (bundle_k <= bundle_p) {
        err << "warning: k = " << bundle_k << " <= p = " << bundle_p
            << "; the formula is only claimed for sufficiently large k\n";
      }
      const BigInt value = h0_relative(bundle, bundle_p, bundle_k);
      if (g.json_out) {
        out << json{{"p", bundle_p}, {"k", bundle_k}, {"h0", io::integer(value)}}.dump() << '\n';
      } else {
        out << value << '\n';
      }
      return kExitOk;
    }

    const Polytope poly = load(g);
    const std::size_t n = poly.dim();

    if (faces_cmd->parsed()) {
      const auto& lattice = poly.faces();
      if (g.json_out) {
        json arr = json::array();
        for (std::size_t id = 0; id < lattice.size(); ++id) {
          const Face& f = lattice.face(id);
          arr.push_back({{"id", id}, {"dim", f.dim}, {"vertices", ids(f.vertex_ids)},
                         {"tight_facets", ids(f.tight_facets)}});
        }
        out << json{{"dim", n}, {"f_vector", integers(lattice.f_vector())},
                    {"simple", is_simple(poly)}, {"faces", arr}}
                   .dump(2)
            << '\n';
      } else {
        out << "f-vector: " << join(lattice.f_vector()) << '\n';
        out << "simple: " << (is_simple(poly) ? "yes" : "no") << '\n';
        for (std::size_t id = 0; id < lattice.size(); ++id) {
          const Face& f = lattice.face(id);
          out << "face " << id << " dim " << f.dim << " vertices " << json(f.vertex_ids).dump()
              << " tight " << json(f.tight_facets).dump() << '\n';
        }
      }
      return kExitOk;
    }

    if (count_cmd->parsed()) {
      const std::size_t id = face_id.value_or(poly.faces().full_face());
      poly.faces().face(id);
      const auto table = count_table(poly);
      const auto& c = table.per_face[id];
      if (g.json_out) {
        out << json{{"face", id}, {"l", io::integer(c.l)}, {"l_star", io::integer(c.l_star)}}.dump()
            << '\n';
      } else {
        out << "l = " << c.l << "\nl* = " << c.l_star << '\n';
      }
      return kExitOk;
    }

    if (table_cmd->parsed()) {
      const auto table = count_table(poly);
      const auto& lattice = poly.faces();
      if (g.json_out) {
        json arr = json::array();
        for (std::size_t id = 0; id < lattice.size(); ++id) {
          arr.push_back({{"id", id}, {"dim", lattice.face(id).dim},
                         {"l", io::integer(table.per_face[id].l)},
                         {"l_star", io::integer(table.per_face[id].l_star)}});
        }
        out << json{{"faces", arr}, {"closed_by_codim", integers(table.closed_by_codim)},
                    {"interior_by_dim", integers(table.interior_by_dim)}}
                   .dump(2)
            << '\n';
      } else {
        for (std::size_t id = 0; id < lattice.size(); ++id) {
          out << "face " << id << " dim " << lattice.face(id).dim << " l " << table.per_face[id].l
              << " l* " << table.per_face[id].l_star << '\n';
        }
        out << "Delta^(j), j=0..n: " << join(table.closed_by_codim) << '\n';
        out << "Delta_(s), s=0..n: " << join(table.interior_by_dim) << '\n';
      }
      return kExitOk;
    }

    if (bott_cmd->parsed()) {
      const BigInt one = bott1_twisted(poly, bott_p);
      const BigInt two = bott2_twisted(poly, bott_p);
      const bool agree = one == two;
      if (g.json_out) {
        json j{{"p", bott_p}};
        if (formula != "2") j["formula_1"] = io::integer(one);
        if (formula != "1") j["formula_2"] = io::integer(two);
        if (formula == "both") j["agree"] = agree;
        out << j.dump() << '\n';
      } else if (formula == "1") {
        out << one << '\n';
      } else if (formula == "2") {
        out << two << '\n';
      } else if (agree) {
        out << one << '\n';
      } else {
        out << "formula I: " << one << ", formula II: " << two << " (MISMATCH)\n";
      }
      return formula == "both" && !agree ? kExitCheckFailed : kExitOk;
    }

    if (diag_cmd->parsed()) {
      const auto one = bott1_untwisted(poly);
      const auto two = bott2_untwisted(poly);
      std::vector<BigInt> d1;
      std::vector<BigInt> d2;
      for (std::size_t p = 0; p <= n; ++p) {
        d1.push_back(one.at(p, p));
        d2.push_back(two.at(p, p));
      }
      const bool agree = d1 == d2;
      const auto& shown = formula == "2" ? d2 : d1;
      if (g.json_out) {
        json j{{"diagonal", integers(shown)}};
        if (formula == "both") j["agree"] = agree;
        out << j.dump() << '\n';
      } else {
        out << join(shown) << '\n';
        if (formula == "both" && !agree) out << "formula II: " << join(d2) << " (MISMATCH)\n";
      }
      return formula == "both" && !agree ? kExitCheckFailed : kExitOk;
    }

    if (genpoly_cmd->parsed()) {
      const auto gp = generating_polys(poly);
      if (g.json_out) {
        out << json{{"untwisted", gp.untwisted.to_strings()}, {"twisted", gp.twisted.to_strings()}}.dump()
            << '\n';
      } else {
        out << "sum_p h^p(Omega^p) y^p = " << gp.untwisted.to_string("y") << '\n';
        out << "sum_p h^0(Omega^p(D)) y^p = " << gp.twisted.to_string("y") << '\n';
      }
      return kExitOk;
    }

    if (ehrhart_cmd->parsed()) {
      const auto family = hilbert_ehrhart_all(poly);
      std::vector<long> degrees;
      if (ehrhart_p) {
        if (*ehrhart_p < 0 || *ehrhart_p > static_cast<long>(n)) {
          throw ToricError(ErrorKind::OutOfRange, "--p must lie in 0.." + std::to_string(n));
        }
        degrees.push_back(*ehrhart_p);
      } else {
        for (long p = 0; p <= static_cast<long>(n); ++p) degrees.push_back(p);
      }
      bool ok = true;
      json polys = json::array();
      for (long p : degrees) {
        const auto& poly_p = family[static_cast<std::size_t>(p)];
        json entry{{"p", p}, {"coefficients", descending(poly_p, n)}};
        if (reciprocity_k) {
          json checks = json::array();
          for (long k = 1; k <= *reciprocity_k; ++k) {
            const auto w = reciprocity_check(family, p, k);
            ok = ok && w.holds;
            checks.push_back({{"k", k}, {"lhs", io::fraction(w.lhs)}, {"rhs", io::fraction(w.rhs)},
                              {"holds", w.holds}});
          }
          entry["reciprocity"] = checks;
        }
        polys.push_back(entry);
        if (!g.json_out) {
          out << "L_" << p << "(k) = " << poly_p.to_string() << '\n';
          if (reciprocity_k) {
            for (const auto& c : entry["reciprocity"]) {
              out << "  L_" << p << "(-" << c["k"] << ") = " << c["lhs"].get<std::string>()
                  << ", (-1)^n L_" << (static_cast<long>(n) - p) << "(" << c["k"]
                  << ") = " << c["rhs"].get<std::string>() << (c["holds"].get<bool>() ? "" : "  FAIL")
                  << '\n';
            }
          }
        }
      }
      if (g.json_out) out << (degrees.size() == 1 ? polys[0] : json{{"polynomials", polys}}).dump() << '\n';
      return ok ? kExitOk : kExitCheckFailed;
    }

    if (hodge_cmd->parsed()) {
      const Hypersurface hyp(poly);
      if (ep) {
        const BigInt value = hyp.euler_ep(*ep);
        if (g.json_out) {
          out << json{{"p", *ep}, {"e_p", io::integer(value)}}.dump() << '\n';
        } else {
          out << value << '\n';
        }
        return kExitOk;
      }
      if (chilog) {
        if (printed_form) {
          const BigInt value = hyp.chi_log_printed(*chilog);
          if (g.json_out) {
            out << json{{"q", *chilog}, {"printed_form", io::integer(value)}}.dump() << '\n';
          } else {
            out << value << '\n';
          }
          return kExitOk;
        }
        const auto routes = hyp.chi_log_routes(*chilog);
        const bool agree = routes.telescoped == routes.by_phi;
        if (g.json_out) {
          out << json{{"q", *chilog}, {"telescoped", io::integer(routes.telescoped)},
                      {"by_phi", io::integer(routes.by_phi)}, {"agree", agree}}
                     .dump()
              << '\n';
        } else if (agree) {
          out << routes.telescoped << '\n';
        } else {
          out << "telescoped " << routes.telescoped << " vs phi form " << routes.by_phi
              << " (MISMATCH)\n";
        }
        return agree ? kExitOk : kExitCheckFailed;
      }
      const HodgeVector h = printed_form ? hyp.primitive_hodge_printed()
                            : phi_sum    ? hyp.primitive_hodge_phi_sum()
                                         : hyp.primitive_hodge();
      const char* form = printed_form ? "printed" : phi_sum ? "phi_sum" : "corrected";
      if (g.json_out) {
        out << json{{"n", h.n}, {"primitive_hodge", integers(h.values)}, {"form", form}}
                   .dump()
            << '\n';
      } else {
        out << join(h.values) << '\n';
      }
      return kExitOk;
    }

    if (weighted_cmd->parsed()) {
      const BigInt value = h0_weighted(poly, weighted_p, weighted_k);
      if (g.json_out) {
        out << json{{"p", weighted_p}, {"k", weighted_k}, {"h0", io::integer(value)}}.dump() << '\n';
      } else {
        out << value << '\n';
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      require_simple(poly);
      return emit_checks(verify_polytope(poly), g, out);
    }
  } catch (const ToricError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::InterpolationInconsistent:
      case ErrorKind::RouteMismatch:
      case ErrorKind::NegativeEntry:
      case ErrorKind::HodgeAsymmetric:
        return kExitCheckFailed;
      default:
        return kExitInputError;
    }
  }
  return kExitOk;
}

}  // namespace toric::cli
