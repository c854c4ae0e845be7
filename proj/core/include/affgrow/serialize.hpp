#ifndef AFFGROW_SERIALIZE_HPP_
#define AFFGROW_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "affgrow/freeness.hpp"
#include "affgrow/growth.hpp"
#include "affgrow/mahler.hpp"
#include "affgrow/places.hpp"

namespace affgrow {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

// Rationals are exact strings "p" or "p/q". Values that are measurements
// (enclosure endpoints, margins) also carry a decimal rendering; the exact
// string is authoritative.
json rational_json(const mpq_class& q);
json dual_json(const mpq_class& q);
mpq_class rational_from_json(const json& j);

json enclosure_json(const AbsEnclosure& e);
AbsEnclosure enclosure_from_json(const json& j);

json ring_json(const RingPtr& ring);
RingPtr ring_from_json(const json& j);

json element_json(const RingElement& e);
RingElement element_from_json(const RingPtr& ring, const json& j);

json map_json(const AffineMap& f);
AffineMap map_from_json(const RingPtr& ring, const json& j);

json place_json(const Place& place);
// Archimedean places are looked up by index among archimedean_places(ring),
// so the result is re-derived rather than trusted.
Place place_from_json(const RingPtr& ring, const json& j);

json certificate_json(const PingPongCertificate& c, int precision_bits);
json witness_json(const RelationWitness& w);
RelationWitness witness_from_json(const json& j);
json verdict_json(const FreenessVerdict& v, int precision_bits);

json growth_rows_json(const GrowthTable& t);
json entropy_json(const EntropyBounds& e);
json dplus_upper_json(const DplusUpper& d, const std::vector<std::string>& names, int precision_bits);
json dplus_lower_json(const DplusLower& d, const std::vector<std::string>& names);
json mahler_json(const MahlerResult& m);
json ct_json(const CtReport& r);
json lehmer_json(const LehmerReport& r, int precision_bits);

// Columns: n, ball_size, upper_bound_bits, dplus_status. The n = 0 row has
// an empty upper_bound_bits field.
std::string growth_csv(const GrowthTable& t);

// Re-checks a certificate object against its own pair: recomputes it at the
// stored place and precision and compares the JSON exactly.
bool certificate_rechecks(const RingPtr& ring, const json& cert, std::string* why = nullptr);

}  // namespace affgrow

#endif  // AFFGROW_SERIALIZE_HPP_
