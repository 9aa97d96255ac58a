#include "clustexp/cli.hpp"

#include "clustexp/cluster.hpp"
#include "clustexp/document.hpp"
#include "clustexp/error.hpp"
#include "clustexp/expansion.hpp"
#include "clustexp/paths.hpp"
#include "clustexp/quiver.hpp"
#include "clustexp/strings.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace clustexp::cli {

namespace {

struct Options {
  std::string surface;
  std::string curve;
  std::string format = "text";
  std::string method = "both";
  std::vector<int> sequence;
  int max_depth = -1;
  bool oracle = false;
  bool verbose = false;
};

const NamedCurve& require_curve(const SurfaceDocument& doc, const Options& o) {
  if (o.curve.empty()) throw Error("cli.missing_curve", "--curve is required");
  const NamedCurve* c = doc.find_curve(o.curve);
  if (!c) throw Error("cli.unknown_curve", "unknown curve '" + o.curve + "'");
  return *c;
}

struct NotFound {
  std::string text;
};

// The default search depth only makes sense for discs, where the exchange
// graph is finite.
int oracle_depth(const Triangulation& t, const Options& o) {
  if (o.max_depth >= 0) return o.max_depth;
  const SurfaceStats s = surface_stats(t);
  if (s.genus != 0 || s.boundary_components != 1)
    throw Error("cli.max_depth_required", "--max-depth is required for surfaces other than discs");
  return default_max_depth(t);
}

std::string stats(const SurfaceDocument& doc) {
  const SurfaceStats s = surface_stats(doc.triangulation);
  std::ostringstream os;
  os << "genus " << s.genus << "\nboundary_components " << s.boundary_components << "\nmarked_points "
     << s.marked_points << "\ninternal_arcs " << s.internal_arcs << '\n';
  return os.str();
}

std::string expand(const SurfaceDocument& doc, const Options& o) {
  const Triangulation& t = doc.triangulation;
  const CurveCrossing& c = require_curve(doc, o).curve;
  std::ostringstream os;
  auto emit = [&](const ExpansionResult& r) {
    if (o.verbose)
      os << (r.method == Method::paths ? "paths" : "modules") << ": " << r.path_count << " terms before collection, index "
         << format_vector(r.index) << '\n';
    os << r.polynomial.to_string() << '\n';
  };
  if (o.method == "paths") {
    emit(expansion_paths(t, c, Exec::parallel));
  } else if (o.method == "modules") {
    emit(expansion_modules(t, c));
  } else {
    const ExpansionResult p = expansion_paths(t, c, Exec::parallel);
    const ExpansionResult m = expansion_modules(t, c);
    emit(p);
    emit(m);
    if (!(p.polynomial == m.polynomial)) throw Error("expansion.mismatch", os.str() + "MISMATCH");
    os << "MATCH\n";
  }
  return os.str();
}

std::string dispatch(const std::string& cmd, const Options& o) {
  if (o.format != "text") throw Error("cli.bad_format", "unsupported format '" + o.format + "'");
  const SurfaceDocument doc = load_surface(o.surface);
  const Triangulation& t = doc.triangulation;
  std::ostringstream os;
  if (cmd == "stats") return stats(doc);
  if (cmd == "bmatrix") return render_matrix(signed_adjacency(build_qp(t)));
  if (cmd == "qp") return render_qp(t, build_qp(t));
  if (cmd == "mutate") {
    SyncedSeed s{t, initial_seed(t)};
    for (int k : o.sequence) s = flip_sync(s.triangulation, s.seed, k);
    return render_seed(s.seed);
  }
  if (cmd == "expand") return expand(doc, o);

  const CurveCrossing& c = require_curve(doc, o).curve;
  if (cmd == "string") {
    const StringWord w = string_of_curve(t, build_qp(t), c);
    os << render_string(t, w) << '\n';
  } else if (cmd == "subsets") {
    for (const auto& s : closed_subsets(string_of_curve(t, build_qp(t), c))) os << render_subset(s) << '\n';
  } else if (cmd == "mu") {
    os << render_mu(mu_counts(string_of_curve(t, build_qp(t), c), t.internal_count()));
  } else if (cmd == "paths") {
    for (const CompletePath& p : enumerate_paths(t, c)) {
      PositionSubset flags;
      for (std::size_t k = 0; k < p.oriented.size(); ++k)
        if (p.oriented[k]) flags.positions.push_back(static_cast<int>(k) + 1);
      os << render_path(t, p) << " | " << render_subset(flags) << " | " << path_weight(t, c, p).to_string() << '\n';
    }
  } else if (cmd == "index") {
    os << format_vector(index_of_curve(t, c)) << '\n';
  } else if (cmd == "gvector") {
    os << format_vector(g_vector(expansion_modules(t, c).polynomial, signed_adjacency(build_qp(t)))) << '\n';
  } else if (cmd == "fpoly") {
    os << f_polynomial(expansion_modules(t, c).polynomial).to_string() << '\n';
  } else if (cmd == "oracle") {
    const int depth = oracle_depth(t, o);
    const OracleResult r = cluster_variable_by_flips(t, c, depth, Exec::parallel);
    if (!r.found) throw NotFound{"NOT-FOUND searched depth " + std::to_string(r.depth) + "\n"};
    os << "depth " << r.depth << "\nflips";
    for (int k : r.flips) os << ' ' << k;
    os << '\n' << r.variable->to_string() << '\n';
  } else if (cmd == "verify") {
    const int depth = o.oracle ? oracle_depth(t, o) : 0;
    const VerifyReport rep = verify_curve(t, c, o.oracle, depth);
    if (!rep.ok()) throw Error("expansion.verify_failed", rep.render());
    os << rep.render();
  }
  return os.str();
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Cluster expansions of curves on triangulated surfaces", "clustexp"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool curve) {
    sub->add_option("--surface", o.surface, "surface file")->required();
    if (curve) sub->add_option("--curve", o.curve, "curve name");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text"}));
    sub->add_flag("-v,--verbose", o.verbose, "more detail");
  };
  common(app.add_subcommand("stats", "genus, boundary components, marked points, internal arcs"), false);
  common(app.add_subcommand("bmatrix", "signed adjacency matrix"), false);
  common(app.add_subcommand("qp", "quiver with potential"), false);
  common(app.add_subcommand("string", "string of a curve"), true);
  common(app.add_subcommand("subsets", "closed position subsets"), true);
  common(app.add_subcommand("mu", "subset counts by dimension vector"), true);
  auto* pth = app.add_subcommand("paths", "complete paths with flags and weights");
  common(pth, true);
  pth->add_flag("--list", "one path per line (the default)");
  auto* exp = app.add_subcommand("expand", "Laurent expansion");
  common(exp, true);
  exp->add_option("--method", o.method, "paths, modules or both")->check(CLI::IsMember({"paths", "modules", "both"}));
  common(app.add_subcommand("index", "index of a curve"), true);
  common(app.add_subcommand("gvector", "g-vector"), true);
  common(app.add_subcommand("fpoly", "F-polynomial"), true);
  auto* mut = app.add_subcommand("mutate", "flip and mutate along a sequence");
  common(mut, false);
  mut->add_option("--seq", o.sequence, "mutation directions")->delimiter(',');
  auto* orc = app.add_subcommand("oracle", "cluster variable by breadth-first flips");
  common(orc, true);
  orc->add_option("--max-depth", o.max_depth, "search depth")->check(CLI::NonNegativeNumber);
  auto* ver = app.add_subcommand("verify", "cross-check both expansions");
  common(ver, true);
  ver->add_flag("--oracle", o.oracle, "also compare with the flip oracle");
  ver->add_option("--max-depth", o.max_depth, "oracle search depth")->check(CLI::NonNegativeNumber);

  Outcome out;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out.out = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = 2;
    out.err = std::string("usage error: ") + e.what() + "\n";
    return out;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    out.out = dispatch(cmd, o);
  } catch (const NotFound& nf) {
    out.exit_code = 1;
    out.out = nf.text;
  } catch (const Error& e) {
    out.exit_code = 1;
    out.err = "error: " + e.code() + ": " + e.what() + "\n";
  }
  return out;
}

}  // namespace clustexp::cli
