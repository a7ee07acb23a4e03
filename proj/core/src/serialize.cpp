#include "rlab/serialize.hpp"

#include <cmath>

namespace rlab {

Json json_of(const ElementSet& s) { return Json(s.members()); }

Json json_of(const RigidityCertificate& cert) {
  return Json{{"sizes_product", cert.sizes_product},
              {"sizes_ok", cert.sizes_ok},
              {"unique_rep", cert.unique_rep}};
}

Json json_of(const Decomposition& dec) {
  return Json{{"A", json_of(dec.A)}, {"B", json_of(dec.B)}, {"rigidity", json_of(dec.rigidity)}};
}

Json json_of(const SearchReport& report, bool with_timing) {
  Json orbits = Json::array();
  for (const Decomposition& dec : report.orbits) orbits.push_back(json_of(dec));
  Json out{{"p", report.p},
           {"k", report.k},
           {"mode", report.mode == SearchMode::general ? "general" : "perfect"},
           {"orbits", std::move(orbits)},
           {"trivial_count", report.trivial_count},
           {"nodes", report.nodes}};
  if (with_timing) out["ms"] = report.elapsed.count();
  return out;
}

Json json_of(const ThreePartReport& report) {
  Json triples = Json::array();
  for (const TripleDecomposition& t : report.triples)
    triples.push_back(Json{{"A", json_of(t.A)}, {"B", json_of(t.B)}, {"C", json_of(t.C)}});
  return Json{{"p", report.p}, {"k", report.k}, {"triples", std::move(triples)},
              {"nodes", report.nodes}};
}

Json json_of(const RuzsaReport& report) {
  return Json{{"lhs", report.lhs}, {"rhs", report.rhs}, {"holds", report.holds}};
}

Json json_of(const ShkredovReport& report) {
  return Json{{"lhs", report.lhs}, {"rhs", report.rhs}, {"equal", report.equal}};
}

Json json_of(const WeilReport& report) {
  return Json{{"magnitude", report.magnitude},
              {"bound", report.bound},
              {"holds", report.holds},
              {"distinct_roots", report.distinct_roots}};
}

Json json_of(const B2ExpansionReport& report) {
  return Json{{"direct", report.direct},   {"expanded", report.expanded},
              {"equal", report.equal},     {"g0", report.g0},
              {"corr_t", report.corr_t},   {"corr_2t", report.corr_2t},
              {"corr_triple", report.corr_triple}};
}

Json json_of(const MembershipProductReport& report) {
  return Json{{"sum_numerator", report.sum_numerator},
              {"sum_denominator", report.sum_denominator},
              {"pointwise_ok", report.pointwise_ok},
              {"identities_ok", report.identities_ok}};
}

Json json_of(const C4ClassStat& stat) {
  return Json{{"max_abs", stat.max_abs},
              {"bound", stat.bound},
              {"holds", stat.holds},
              {"tuples", stat.tuples}};
}

Json json_of(const C4ScanReport& report) {
  return Json{{"p", report.p},
              {"k", report.k},
              {"off_e", json_of(report.off_e)},
              {"pattern_xx0", json_of(report.pattern_xx0)},
              {"pattern_x0x", json_of(report.pattern_x0x)},
              {"pattern_0xx", json_of(report.pattern_0xx)},
              {"origin", json_of(report.origin)},
              {"all_hold", report.all_hold()}};
}

Json json_of(const BoundsReport& report) {
  Json out{{"p", report.p},
           {"k", report.k},
           {"window_threshold", report.window_threshold},
           {"window_applicable", report.window_applicable},
           {"window_lo", report.window_lo},
           {"window_hi", report.window_hi},
           {"triple_threshold", report.triple_threshold},
           {"triple_applicable", report.triple_applicable},
           {"b2_threshold", report.b2_threshold},
           {"b2_applicable", report.b2_applicable},
           {"discriminant", report.discriminant},
           {"discriminant_positive", report.discriminant_positive},
           {"min_size_bound", report.min_size_bound},
           {"k2_windows_valid", report.k2_windows_valid}};
  if (report.k2_windows_valid) {
    out["sarkozy_lo"] = report.sarkozy_lo;
    out["sarkozy_hi"] = report.sarkozy_hi;
    out["chen_yan_lo"] = report.chen_yan_lo;
    out["chen_yan_hi"] = report.chen_yan_hi;
    out["chen_xi_lo"] = report.chen_xi_lo;
    out["chen_xi_hi"] = report.chen_xi_hi;
  }
  return out;
}

Json json_of(const CensusRow& row) {
  Json out{{"x", row.x}, {"count", row.count}, {"denominator", row.denominator}};
  if (std::isnan(row.ratio))
    out["ratio"] = "undefined";
  else
    out["ratio"] = row.ratio;
  return out;
}

Json json_of(const BadPrimeCensus& census) {
  Json bad = Json::array();
  for (const BadPrime& b : census.bad)
    bad.push_back(Json{{"p", b.p}, {"witness", json_of(b.witness)}});
  return Json{{"k", census.k},
              {"p_max", census.p_max},
              {"scanned", census.scanned},
              {"bad_primes", std::move(bad)}};
}

Json json_of(const FordConstants& c) { return Json{{"delta", c.delta}, {"u", c.u}}; }

}  // namespace rlab
