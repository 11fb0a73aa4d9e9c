#include "semitoric/io.hpp"
#include "semitoric/parallel.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace semitoric {
namespace {

struct Source {
  int boolean = -1;
  int chain = -1;
  int flag = -1;
  std::vector<int> grassmann;
  std::string poset_file;
  std::string lattice_file;
};

struct Common {
  Source source;
  std::string out = "-";
  std::uint64_t seed = 1;
};

void add_source(CLI::App* cmd, Common& c) {
  auto* group = cmd->add_option_group("source", "lattice to work on (exactly one)");
  group->add_option("--boolean", c.source.boolean, "Boolean lattice of subsets of {1..n}");
  group->add_option("--chain", c.source.chain, "chain with n elements");
  group->add_option("--flag", c.source.flag, "complete flag lattice for n");
  group->add_option("--grassmann", c.source.grassmann, "Grassmann lattice for k n")->expected(2);
  group->add_option("--poset", c.source.poset_file, "poset file, read through birkhoff")->check(CLI::ExistingFile);
  group->add_option("--lattice", c.source.lattice_file, "lattice file (poset or join/meet tables)")
      ->check(CLI::ExistingFile);
  group->require_option(1);
  cmd->add_option("--out", c.out, "output path, '-' for stdout");
  cmd->add_option("--seed", c.seed, "seed for sampled test weights");
}

Lattice load(const Source& s) {
  if (s.boolean >= 0) {
    if (s.boolean > 12) throw Error(ErrorKind::TooLarge, "--boolean is capped at 12");
    return boolean_lattice(static_cast<std::size_t>(s.boolean));
  }
  if (s.chain >= 0) return chain_lattice(static_cast<std::size_t>(s.chain));
  if (s.flag >= 0) return flag_lattice(s.flag);
  if (!s.grassmann.empty()) return grassmann_lattice(s.grassmann[0], s.grassmann[1]);
  if (!s.poset_file.empty()) return birkhoff(parse_poset(read_file(s.poset_file)));
  return parse_lattice(read_file(s.lattice_file));
}

/// Comma- or space-separated rationals "a" or "a/b".
QVector parse_weight(const std::string& text, std::size_t expected) {
  std::string norm = text;
  for (char& ch : norm)
    if (ch == ',') ch = ' ';
  std::istringstream in(norm);
  std::vector<Rational> xs;
  for (std::string tok; in >> tok;) {
    try {
      xs.emplace_back(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not a rational: " + tok);
    }
  }
  if (xs.size() != expected) {
    throw Error(ErrorKind::BadParams, "weight needs " + std::to_string(expected) + " entries, got " +
                                          std::to_string(xs.size()));
  }
  QVector w(static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) w(static_cast<Index>(i)) = xs[i];
  return w;
}

std::vector<Face> faces_for(const MaxCone& cone, const std::string& key) {
  if (!key.empty()) return {parse_face_key(cone, key)};
  return enumerate_faces(cone);
}

int run_lattice(const Common& c) {
  write_file(c.out, canonical_dump(lattice_report(load(c.source))));
  return 0;
}

int run_cone(const Common& c) {
  const MaxCone cone(load(c.source));
  bool ok = false;
  Json report = cone_report(cone, &ok);
  write_file(c.out, canonical_dump(report));
  return ok ? 0 : 1;
}

int run_subdivide(const Common& c, const std::string& w_text, const std::string& key, int trials) {
  const MaxCone cone(load(c.source));
  if (!key.empty()) {
    const Face face = parse_face_key(cone, key);
    Json j = to_json(cone, face_subdivision(cone, face));
    const bool invariant = subdivision_invariance_check(cone, face, trials, c.seed);
    j["invariance"] = {{"trials", trials}, {"seed", c.seed}, {"pass", invariant}};
    write_file(c.out, canonical_dump(j));
    return invariant ? 0 : 1;
  }
  const QVector w = parse_weight(w_text, cone.lattice().size());
  write_file(c.out, canonical_dump(to_json(cone, regular_subdivision(cone, w))));
  return 0;
}

int run_certify(const Common& c, int lmax, const std::string& key, bool json) {
  if (lmax < 1 || lmax > kMaxHibiDegree) {
    throw Error(ErrorKind::BadParams, "--lmax must be in 1.." + std::to_string(kMaxHibiDegree));
  }
  const MaxCone cone(load(c.source));
  const auto faces = faces_for(cone, key);
  const std::size_t per = static_cast<std::size_t>(lmax);
  const auto rows = parallel_map(faces.size() * per, [&](std::size_t i) {
    return degeneration_row(cone, faces[i / per], static_cast<int>(i % per) + 1);
  });
  bool ok = true;
  for (const auto& r : rows) ok &= r.pass;
  if (json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"face", r.face}, {"l", r.degree}, {"dim_r", r.dim_r.str()}, {"dim_in", r.dim_initial},
                     {"dim_cap", r.dim_intersection.str()}, {"standard_count", r.standard_count.str()},
                     {"contained", r.contained}, {"pass", r.pass}});
    }
    write_file(c.out, canonical_dump({{"rows", std::move(arr)}, {"pass", ok}}));
  } else {
    std::string csv = degeneration_csv_header() + "\n";
    for (const auto& r : rows) csv += to_csv(r) + "\n";
    write_file(c.out, csv);
  }
  return ok ? 0 : 1;
}

int run_weightpoly(const Common& c, const std::string& key, int normality) {
  const MaxCone cone(load(c.source));
  const auto faces = faces_for(cone, key);
  bool ok = true;
  const auto items = parallel_map(faces.size(), [&](std::size_t i) {
    const WeightPolytope wp = weight_polytope(cone, faces[i]);
    Json j = to_json(cone, wp, distinguished_faces(cone, faces[i]));
    if (normality > 0) {
      const auto r = normality_probe(wp.polytope, normality);
      j["normality"] = {{"pass", r.pass}, {"first_failure", r.first_failure}, {"checked_up_to", r.checked_up_to}};
    }
    return j;
  });
  for (const auto& j : items)
    if (j.contains("normality")) ok &= j["normality"]["pass"].get<bool>();
  write_file(c.out, canonical_dump(key.empty() ? Json(items) : items.front()));
  return ok ? 0 : 1;
}

int run_gt(int n, const std::string& mode, const std::string& key, const std::string& out) {
  const GtPosets gt = gt_poset_iso(n);
  if (mode == "census") {
    write_file(out, canonical_dump(to_json(gt_census(gt), gt)));
    return 0;
  }
  if (!mode.empty()) throw Error(ErrorKind::BadParams, "unknown gt mode: " + mode);
  const MaxCone cone(gt.lattice);
  const GtSubdivision s = gt_subdivision(gt, cone, key.empty() ? cone.full_face() : parse_face_key(cone, key));
  Json j = to_json(gt, s);
  j["face"] = key.empty() ? "full" : key;
  j["census"] = to_json(gt_census(gt), gt);
  j["minkowski_identity"] = minkowski_identity_check(gt);
  write_file(out, canonical_dump(j));
  return j["minkowski_identity"].get<bool>() ? 0 : 1;
}

int run_permutahedron(const Common& c, const std::string& w_text) {
  const MaxCone cone(load(c.source));
  const QVector w = parse_weight(w_text, cone.lattice().size());
  const LatticePolytope p = generalized_permutahedron(cone, w);
  write_file(c.out, canonical_dump({{"weight", to_json(w)}, {"vertex_count", p.vertices.size()},
                                    {"polytope", to_json(p)}}));
  return 0;
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Semitoric degenerations of Hibi varieties: lattices, cones, subdivisions, certificates"};
  app.require_subcommand(1);

  Common lat, cone, sub, cert, wp, perm;
  auto* lattice_cmd = app.add_subcommand("lattice", "ground poset, diamond pairs and maximal chains");
  add_source(lattice_cmd, lat);
  auto* cone_cmd = app.add_subcommand("cone", "facets of the maximal cone and its faces");
  add_source(cone_cmd, cone);

  std::string sub_w, sub_face;
  int trials = 3;
  auto* sub_cmd = app.add_subcommand("subdivide", "regular subdivision of the order polytope");
  add_source(sub_cmd, sub);
  auto* w_opt = sub_cmd->add_option("--w", sub_w, "weight vector, one entry per lattice element");
  auto* f_opt = sub_cmd->add_option("--face", sub_face, "face key; uses a relative interior weight");
  w_opt->excludes(f_opt);
  sub_cmd->add_option("--trials", trials, "random interior weights checked for invariance");

  int lmax = 3;
  std::string cert_face;
  bool cert_json = false;
  auto* cert_cmd = app.add_subcommand("certify", "dimension triple equality for every face and degree");
  add_source(cert_cmd, cert);
  cert_cmd->add_option("--lmax", lmax, "largest degree")->required();
  cert_cmd->add_option("--face", cert_face, "restrict to one face key");
  cert_cmd->add_flag("--json", cert_json, "JSON instead of CSV");

  std::string wp_face;
  int normality = 0;
  auto* wp_cmd = app.add_subcommand("weightpoly", "weight polytope and its distinguished faces");
  add_source(wp_cmd, wp);
  wp_cmd->add_option("--face", wp_face, "face key (all faces if omitted)");
  wp_cmd->add_option("--normality", normality, "run the dilation normality probe up to this factor (<= 4)");

  int gt_n = 3;
  std::string gt_mode, gt_face, gt_out = "-";
  auto* gt_cmd = app.add_subcommand("gt", "Gelfand-Tsetlin subdivision and component census");
  gt_cmd->alias("flag");
  gt_cmd->add_option("--n", gt_n, "flag size")->required();
  gt_cmd->add_option("mode", gt_mode, "'census' for the census only");
  gt_cmd->add_option("--face", gt_face, "face key (default full)");
  gt_cmd->add_option("--out", gt_out, "output path, '-' for stdout");

  std::string perm_w;
  auto* perm_cmd = app.add_subcommand("permutahedron", "generalized permutahedron for a weight");
  add_source(perm_cmd, perm);
  perm_cmd->add_option("--w", perm_w, "weight vector, one entry per lattice element")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error("BadParams", e.what());
    return 2;
  }

  try {
    if (*lattice_cmd) return run_lattice(lat);
    if (*cone_cmd) return run_cone(cone);
    if (*sub_cmd) {
      if (sub_w.empty() && sub_face.empty()) throw Error(ErrorKind::BadParams, "subdivide needs --w or --face");
      return run_subdivide(sub, sub_w, sub_face, trials);
    }
    if (*cert_cmd) return run_certify(cert, lmax, cert_face, cert_json);
    if (*wp_cmd) return run_weightpoly(wp, wp_face, normality);
    if (*gt_cmd) return run_gt(gt_n, gt_mode, gt_face, gt_out);
    if (*perm_cmd) return run_permutahedron(perm, perm_w);
  } catch (const Error& e) {
    report_error(std::string(to_string(e.kind())), e.what());
    return e.kind() == ErrorKind::CertificationFailed ? 1 : 2;
  } catch (const std::exception& e) {
    report_error("Internal", e.what());
    return 2;
  }
  return 2;
}

}  // namespace
}  // namespace semitoric

int main(int argc, char** argv) { return semitoric::run(argc, argv); }
