#pragma once

#include <string>

#include "json.hpp"
#include "simpeff/cyclic.hpp"
#include "simpeff/nerve.hpp"
#include "simpeff/palg.hpp"
#include "simpeff/quantum.hpp"
#include "simpeff/sset.hpp"

namespace simpeff::io {

using Json = nlohmann::ordered_json;

/// Parse failures carry the byte offset; schema problems name the field.
/// Both throw InputError.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source = "<string>");
void write_json_file(const std::string& path, const Json& j);

// {"size": k, "unit": u, "products": [[a,b,c], ...]}
Json to_json(const PartialUnitalMagma& m);
PartialUnitalMagma magma_from_json(const Json& j);

// {"levels": {"3": [[a,b,c], ...], ...}}
Json to_json(const AssociativityDatum& a);
AssociativityDatum datum_from_json(const Json& j);

// {"truncation": K, "counts": [...], "faces": {"n,i": [...]}, "degeneracies": {"n,i": [...]}}
Json to_json(const TruncatedSSet& x);
TruncatedSSet sset_from_json(const Json& j);

// sset body plus "tuples": {"n": [[...], ...]}
Json to_json(const LabelledNerve& n);

// sset body plus "tau": {"n": [...]}
Json to_json(const CyclicSSet& c);
CyclicSSet cyclic_from_json(const Json& j);

// {"order": n, "mul": [[...], ...]}
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// magma fields plus "orthocomplement": [...]
Json to_json(const FiniteEffectAlgebra& e);
FiniteEffectAlgebra effect_algebra_from_json(const Json& j);

// Row-major list of [re, im] pairs.
Json matrix_to_json(const quantum::ComplexMatrix& m);
quantum::ComplexMatrix matrix_from_json(const Json& j);
// {"d": 3, "arity": n, "projectors": {"ab": matrix, ...}}
Json to_json(const quantum::ProjectiveMeasurement& m);
Json to_json(const quantum::KeyWitness& w);

}  // namespace simpeff::io
