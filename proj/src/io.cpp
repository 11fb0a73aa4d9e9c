#include "semitoric/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace semitoric {

namespace {

std::vector<std::vector<std::string>> directive_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    out.push_back(std::move(tokens));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line + 1) + ": " + what);
}

Json integer_json(const Integer& z) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  if (z < lo || z > hi) return z.str();
  return z.convert_to<std::int64_t>();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected an integer");
}

Json labels_json(const Lattice& lattice, const std::vector<std::size_t>& elements) {
  Json out = Json::array();
  for (std::size_t a : elements) out.push_back(lattice.label(a));
  return out;
}

Json halfspaces_json(const std::vector<Halfspace>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back({{"normal", to_json(h.normal)}, {"rhs", to_json(h.rhs)}});
  return out;
}

}  // namespace

Poset parse_poset(const std::string& text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  const auto lines = directive_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t.empty()) continue;
    if (t[0] == "elem" && t.size() == 2) {
      labels.push_back(t[1]);
    } else if (t[0] == "cover" && t.size() == 3) {
      covers.emplace_back(t[1], t[2]);
    } else {
      parse_fail(i, "expected 'elem <label>' or 'cover <label> <label>'");
    }
  }
  return Poset::from_cover_relations(std::move(labels), covers);
}

std::string poset_text(const Poset& poset) {
  std::string out;
  for (const auto& l : poset.labels()) out += "elem " + l + "\n";
  for (const auto& [lo, hi] : poset.cover_pairs()) out += "cover " + poset.label(lo) + " " + poset.label(hi) + "\n";
  return out;
}

Lattice parse_lattice(const std::string& text) {
  const auto lines = directive_lines(text);
  bool tables = false;
  for (const auto& t : lines) tables |= !t.empty() && (t[0] == "join" || t[0] == "meet");
  if (!tables) return birkhoff(parse_poset(text));

  std::vector<std::string> elements;
  std::map<std::string, std::size_t> index;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = index.emplace(label, elements.size());
    if (fresh) elements.push_back(label);
    return it->second;
  };
  struct Entry {
    bool join;
    std::size_t a, b, c, line;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t.empty()) continue;
    if (t[0] == "elem" && t.size() == 2) {
      if (index.count(t[1])) throw Error(ErrorKind::DuplicateLabel, "duplicate element " + t[1]);
      intern(t[1]);
    } else if ((t[0] == "join" || t[0] == "meet") && t.size() == 4) {
      const std::size_t a = intern(t[1]), b = intern(t[2]), c = intern(t[3]);
      entries.push_back({t[0] == "join", a, b, c, i});
    } else {
      parse_fail(i, "expected 'elem <label>', 'join a b c' or 'meet a b c'");
    }
  }
  const std::size_t n = elements.size();
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n, unset)), meet = join;
  for (const auto& e : entries) {
    auto& table = e.join ? join : meet;
    for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      if (table[x][y] != unset && table[x][y] != e.c) {
        throw Error(ErrorKind::NotALattice, "line " + std::to_string(e.line + 1) + ": conflicting " +
                                                (e.join ? "join" : "meet") + " of " + elements[e.a] + " and " +
                                                elements[e.b]);
      }
      table[x][y] = e.c;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (join[a][a] == unset) join[a][a] = a;
    if (meet[a][a] == unset) meet[a][a] = a;
    for (std::size_t b = 0; b < n; ++b) {
      if (join[a][b] == unset || meet[a][b] == unset) {
        throw Error(ErrorKind::NotALattice, "tables are not total: missing entry for " + elements[a] + ", " +
                                                elements[b]);
      }
    }
  }
  return from_tables(std::move(elements), join, meet);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IOError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IOError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IOError, "write failed for " + path);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& q) { return Json::array({integer_json(numerator(q)), integer_json(denominator(q))}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::ParseError, "expected [num, den]");
  const Integer den = integer_from_json(j[1]);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  return Rational(integer_from_json(j[0]), den);
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

QVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of rationals");
  QVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json to_json(const ZMatrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Poset& poset) {
  Json covers = Json::array();
  for (const auto& [lo, hi] : poset.cover_pairs()) covers.push_back({poset.label(lo), poset.label(hi)});
  return {{"labels", poset.labels()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const Json& j) {
  try {
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    return Poset::from_cover_relations(j.at("labels").get<std::vector<std::string>>(), covers);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed poset JSON: ") + e.what());
  }
}

Json to_json(const LatticePolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices) vertices.push_back(to_json(v));
  return {{"dim", p.dim()},
          {"vertices", std::move(vertices)},
          {"hyperplanes", halfspaces_json(p.hyperplanes)},
          {"equations", halfspaces_json(p.equations)},
          {"lattice_basis", to_json(p.lattice_basis)}};
}

Json lattice_report(const Lattice& lattice, std::size_t max_chains) {
  Json diamonds = Json::array();
  for (const auto& d : diamond_pairs(lattice)) {
    diamonds.push_back({{"a", lattice.label(d.a)},
                        {"b", lattice.label(d.b)},
                        {"meet", lattice.label(d.meet)},
                        {"join", lattice.label(d.join)}});
  }
  Json chains = Json::array();
  std::size_t count = 0;
  LinearExtensionStream stream(lattice.poset());
  while (auto ext = stream.next()) {
    if (count++ >= max_chains) continue;
    std::vector<std::size_t> chain;
    for (ElementSet s : ext->prefixes()) chain.push_back(lattice.element_of(s));
    chains.push_back(labels_json(lattice, chain));
  }
  Json elements = Json::array();
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    elements.push_back({{"label", lattice.label(a)},
                        {"ideal", ideal_label(lattice.poset(), lattice.ideal(a))},
                        {"height", lattice.height(a)}});
  }
  return {{"poset", to_json(lattice.poset())},
          {"elements", std::move(elements)},
          {"diamond_pairs", std::move(diamonds)},
          {"diamond_count", diamond_pairs(lattice).size()},
          {"maximal_chains", std::move(chains)},
          {"chain_count", count},
          {"chains_truncated", count > max_chains}};
}

Json cone_report(const MaxCone& cone, bool* all_irredundant) {
  const Lattice& l = cone.lattice();
  Json facets = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < cone.facet_count(); ++i) {
    const auto& d = cone.pairs()[i];
    const bool irredundant = facet_is_irredundant(cone, i);
    ok &= irredundant;
    facets.push_back({{"pair", {l.label(d.a), l.label(d.b)}}, {"normal", to_json(cone.normal(i))},
                      {"irredundant", irredundant}});
  }
  if (all_irredundant) *all_irredundant = ok;
  Json out = {{"ambient_dim", cone.ambient_dim()}, {"facet_count", cone.facet_count()}, {"facets", std::move(facets)}};
  try {
    Json faces = Json::array();
    for (const Face& f : enumerate_faces(cone)) {
      faces.push_back({{"key", face_key(cone, f)}, {"dim", f.dim}, {"witness", to_json(f.witness)},
                       {"parts", face_subdivision(cone, f).size()}});
    }
    out["face_count"] = faces.size();
    out["faces"] = std::move(faces);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    out["faces"] = nullptr;
    out["face_guard"] = e.what();
  }
  return out;
}

Json to_json(const MaxCone& cone, const Subdivision& s) {
  const Lattice& l = cone.lattice();
  Json parts = Json::array();
  for (const Part& p : s.parts) {
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.order.cover_pairs()) covers.push_back({p.order.label(lo), p.order.label(hi)});
    parts.push_back({{"order_covers", std::move(covers)},
                     {"elements", labels_json(l, p.elements)},
                     {"alpha", to_json(p.alpha)},
                     {"constant", to_json(p.constant)},
                     {"simplices", p.simplices.size()}});
  }
  return {{"weight", to_json(s.weight)},
          {"face", face_key(cone, face_of(cone, s.weight))},
          {"part_count", s.size()},
          {"parts", std::move(parts)}};
}

Json to_json(const MaxCone& cone, const WeightPolytope& wp, const std::vector<WeightFace>& faces) {
  const Lattice& l = cone.lattice();
  Json points = Json::object();
  for (std::size_t a = 0; a < l.size(); ++a) points[l.label(a)] = to_json(wp.points[a]);
  Json distinguished = Json::array();
  for (const auto& f : faces) {
    distinguished.push_back({{"elements", labels_json(l, f.elements)}, {"functional", to_json(f.functional)},
                             {"dim", f.polytope.dim()}});
  }
  return {{"face", face_key(cone, wp.face)},
          {"basis", to_json(wp.basis)},
          {"points", std::move(points)},
          {"polytope", to_json(wp.polytope)},
          {"distinguished_faces", std::move(distinguished)}};
}

Json to_json(const Census& census, const GtPosets& gt) {
  Json components = Json::array();
  for (std::size_t i = 0; i < census.extensions.size(); ++i) {
    Json order = Json::array();
    for (std::size_t e : census.extensions[i].order) order.push_back(gt.tilde.label(e));
    components.push_back({{"extension", std::move(order)}, {"shape", shape_name(census.shapes[i])}});
  }
  return {{"n", gt.n}, {"component_count", census.extensions.size()}, {"counts", census.counts},
          {"components", std::move(components)}};
}

Json to_json(const GtPosets& gt, const GtSubdivision& s) {
  Json parts = Json::array();
  for (const GtPart& p : s.parts) {
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.order.cover_pairs()) covers.push_back({p.order.label(lo), p.order.label(hi)});
    parts.push_back({{"order_covers", std::move(covers)}, {"polytope", to_json(p.polytope)},
                     {"gt_vertices", p.vertices}, {"grid_points", p.grid}});
  }
  Json vertices = Json::array();
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    vertices.push_back({{"point", to_json(s.vertices[i].point)}, {"height", to_json(s.heights[i])}});
  }
  return {{"n", gt.n},
          {"weight", to_json(s.ambient.weight)},
          {"parts", std::move(parts)},
          {"gt_vertices", std::move(vertices)},
          {"grid_point_count", s.grid.size()},
          {"vertex_cells", s.vertex_cells},
          {"vertex_envelope_agrees", s.vertex_envelope_agrees}};
}

}  // namespace semitoric
