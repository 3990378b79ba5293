#pragma once

// JSON encodings for inputs and reports. Parsing failures raise ParseError;
// reflector data in an orbifold spec raises ReflectorError.

#include <json.hpp>

#include "orbconf/arrangement.hpp"
#include "orbconf/covering.hpp"
#include "orbconf/groupoid.hpp"
#include "orbconf/obstruction.hpp"
#include "orbconf/orbmodel.hpp"

namespace orbconf {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Rejects inputs whose "schema" is present and not 1.
void check_schema(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);  ///< "p/q", "p", decimal string, or integer

Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);  ///< {"m", "coeffs"} or any rational form

Json to_json(const ComplexPoint& z);
ComplexPoint complex_from_json(const Json& j);  ///< {"re", "im", "mode"} or a rational

Json to_json(const Integer& z);  ///< number when it fits in 53 bits, else string
Json to_json(const Polynomial& p);

Json to_json(const Orbifold2D& o);
/// {"surface": sphere|plane|torus|projective_plane, "genus", "orientable",
/// "punctures", "boundary", "cones": [...]}; explicit counts override the surface.
Orbifold2D orbifold_from_json(const Json& j);
Json to_json(const Classification& c);

Json to_json(const PlanarAction& a);
/// {"kind": "rotation", "m": m, "center": z} | {"kind": "integer_dihedral"} | {"kind": "sign_flip"}.
PlanarAction action_from_json(const Json& j);

Json to_json(const ArrangementSpec& a);
ArrangementSpec arrangement_from_json(const Json& j);

Json to_json(const CoveringReport& r);
Json to_json(const FiberDescriptor& d);
Json to_json(const WitnessReport& r);
Json to_json(const FiniteFiberDescriptor& d);
Json to_json(const FiniteWitnessReport& r);

/// Group forms: {"cyclic": n}, {"dihedral": n}, {"product": [G, H]},
/// {"permutations": {"degree": k, "generators": [[...], ...]}}.
FiniteGroup group_from_json(const Json& j);
/// {"regular": G}, {"trivial": G, "points": k}, {"cosets": G, "subgroup": S},
/// {"points": k, "generators": [[...], ...]}, or {"union": [A, B]}.
GroupAction action_model_from_json(const Json& j);
/// {"elements": [...]} or {"generators": [...]} (element indices), or
/// {"permutations": [[...], ...]} for permutation groups.
std::vector<int> subgroup_from_json(const FiniteGroup& g, const Json& j);

Json to_json(const FiniteGroupoid& g);
/// {"objects": k, "morphisms": [{"s": a, "t": b}, ...], "identities": [...],
/// "inverses": [...], "composition": [[g, f, g o f], ...]}.
FiniteGroupoid groupoid_from_json(const Json& j);
Json to_json(const CheckReport& r);
Json to_json(const Verdict& v);
Json to_json(const EquivalenceReport& r);

}  // namespace orbconf
