#pragma once

#include "json.hpp"
#include "pckit/cohomology.hpp"
#include "pckit/invariants.hpp"
#include "pckit/pseudochar.hpp"
#include "pckit/rawtable.hpp"

namespace pckit {

using Json = nlohmann::json;

Json ring_to_json(const RingSpec& s);
RingSpec ring_from_json(const Json& j);

Json elem_to_json(const RingElem& x);
RingElem elem_from_json(const RingSpec& s, const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);
// matrix from nested rows of ints / payload arrays, with an externally
// supplied ring
Mat mat_from_rows_json(const RingSpec& ring, const Json& rows);

Json kind_to_json(const GroupKind& k);
GroupKind kind_from_json(const Json& j);

Json freehom_to_json(const FreeHom& h);
FreeHom freehom_from_json(const Json& j);

Json invariant_to_json(const InvariantSymbol& s);
InvariantSymbol invariant_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);

Json pc_to_json(const PseudoChar& pc);

// flat array of (invariant, tuple, value) triples
Json rawtable_to_json(const RawTable& t);

Json gmodule_to_json(const GModule& m);

Json cohomology_to_json(const CohomologyDims& d);

}  // namespace pckit
