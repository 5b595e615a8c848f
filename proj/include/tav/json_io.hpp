#ifndef TAV_JSON_IO_HPP
#define TAV_JSON_IO_HPP

#include <json.hpp>

#include "tav/knots.hpp"
#include "tav/twisted.hpp"

namespace tav {

using nlohmann::json;

// LaurentPoly: degree string -> coefficient string ("a/b" rationals,
// {"level":N,"coeffs":[...]} cyclotomic).
json to_json(const LaurentQ& p);
json to_json(const LaurentC& p);
LaurentQ laurent_q_from_json(const json& j);

json to_json(const GroupSpec& s);
GroupSpec group_spec_from_json(const json& j);

json to_json(const FiniteGroup& g); // {"order":n,"table":[[...]]}
json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json to_json(const PDCode& pd);
PDCode pd_from_json(const json& j);

json to_json(const Hom& h);
json to_json(const TwistedResult& r);
json to_json(const OrderSearchReport& r);

} // namespace tav

#endif
