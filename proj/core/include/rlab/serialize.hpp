#pragma once

#include <json.hpp>

#include "rlab/census.hpp"
#include "rlab/correlation.hpp"
#include "rlab/decomposition.hpp"
#include "rlab/residue.hpp"

namespace rlab {

using Json = nlohmann::ordered_json;

/// Element sets serialize as the ascending list of member residues.
Json json_of(const ElementSet& s);
Json json_of(const RigidityCertificate& cert);
Json json_of(const Decomposition& dec);

/// {p, k, mode, orbits, trivial_count, nodes[, ms]}. Timing is opt-in so the
/// default output stays byte-identical across runs.
Json json_of(const SearchReport& report, bool with_timing = false);

Json json_of(const ThreePartReport& report);
Json json_of(const RuzsaReport& report);
Json json_of(const ShkredovReport& report);
Json json_of(const WeilReport& report);
Json json_of(const B2ExpansionReport& report);
Json json_of(const MembershipProductReport& report);
Json json_of(const C4ClassStat& stat);
Json json_of(const C4ScanReport& report);
Json json_of(const BoundsReport& report);
Json json_of(const CensusRow& row);
Json json_of(const BadPrimeCensus& census);
Json json_of(const FordConstants& c);

}  // namespace rlab
