#ifndef SEMITORIC_IO_HPP
#define SEMITORIC_IO_HPP

// Text formats for posets and lattices, and canonical JSON export. Rationals
// are written as reduced [num, den] pairs (decimal strings when a part does
// not fit in 64 bits); objects have sorted keys, so equal inputs give
// byte-identical output.

#include "semitoric/flaggt.hpp"
#include "semitoric/hibi.hpp"
#include "semitoric/weightpoly.hpp"

#include <json.hpp>

#include <string>

namespace semitoric {

using Json = nlohmann::json;

/// `elem <label>` and `cover <lower> <upper>` lines; `#` starts a comment.
Poset parse_poset(const std::string& text);
std::string poset_text(const Poset& poset);

/// A poset file (read through birkhoff) or `join a b c` / `meet a b c`
/// lines meaning a v b = c and a ^ b = c, optionally with `elem` lines
/// fixing the element order. Diagonal entries may be omitted.
Lattice parse_lattice(const std::string& text);

std::string read_file(const std::string& path);
/// Writes `text`; "-" or an empty path means stdout.
void write_file(const std::string& path, const std::string& text);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const QVector& v);
QVector vector_from_json(const Json& j);
Json to_json(const ZMatrix& m);

/// {"labels": [...], "covers": [[lower, upper], ...]}
Json to_json(const Poset& poset);
Poset poset_from_json(const Json& j);

/// {"vertices", "hyperplanes", "equations", "lattice_basis", "dim"}.
Json to_json(const LatticePolytope& p);

/// Ground poset, elements, diamond pairs and maximal chains (the chain list
/// is truncated at `max_chains`; the count is exact).
Json lattice_report(const Lattice& lattice, std::size_t max_chains = 1000);

/// Facet normals with irredundancy certificates and the face list.
/// `all_irredundant` is false if any diamond inequality is redundant.
Json cone_report(const MaxCone& cone, bool* all_irredundant = nullptr);

Json to_json(const MaxCone& cone, const Subdivision& s);
Json to_json(const MaxCone& cone, const WeightPolytope& wp, const std::vector<WeightFace>& faces);
Json to_json(const Census& census, const GtPosets& gt);
Json to_json(const GtPosets& gt, const GtSubdivision& s);

}  // namespace semitoric

#endif  // SEMITORIC_IO_HPP
