#pragma once

#include <string>

#include "json.hpp"

#include "affq/canon.hpp"
#include "affq/hallalg.hpp"

namespace affq {

using Json = nlohmann::json;

/* Parses a file; ParseError carries the path and byte position on failure. */
Json load_json_file(const std::string& path);

/* {"vertices": [id...], "arrows": [{"id","tail","head"}...]}; tail and head
   are vertex ids.  Unknown ids, duplicates and loops raise ParseError naming
   the offending key. */
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

/* {"type":"prime","p":5} or {"type":"rational"}. */
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/* Row-major nested arrays; F_p entries as integers, rationals as "a/b"
   strings.  Shape is dictated by the caller since zero-sized matrices have
   no entries of their own. */
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f, int rows, int cols,
                        const std::string& where);

/* {"quiver","field","dims": {vertex: n...}, "maps": {arrowId: [[...]...]}};
   arrows with an empty matrix may be omitted. */
Json rep_to_json(const Representation& m);
Representation rep_from_json(const Json& j);

/* {"period", "simples": [rep...], "ext_maps": {z: {arrowId: [[...]]}}}. */
Json tube_to_json(const Tube& t);
Tube tube_from_json(const Json& j);

/* Versioned cache image of a full inventory; from_json rejects version or
   key mismatches with ParseError so callers can rebuild. */
Json inventory_to_json(const IndecomposableInventory& inv, std::uint64_t seed);
IndecomposableInventory inventory_from_json(const Json& j);

/* {"sigma": {label: mult...}, "lambda": [ints]}. */
Json param_to_json(const CanonicalParam& p);

/* {"q": 2, "terms": [{"rep": <rep JSON>, "coeff": {"a": "1", "b": "0"}}]}
   where the coefficient is a + b sqrt(q). */
Json hall_element_to_json(const HallElement& x);

}  // namespace affq
