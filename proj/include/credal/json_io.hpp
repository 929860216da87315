#ifndef CREDAL_JSON_IO_HPP
#define CREDAL_JSON_IO_HPP

#include <json.hpp>

#include "credal/credal_set.hpp"
#include "credal/ifs.hpp"
#include "credal/independence.hpp"
#include "credal/logic.hpp"
#include "credal/markov.hpp"

namespace credal::io {

// Insertion-ordered JSON keeps output bytes deterministic for fixed input.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "credal-kernel/v1";

// Rationals travel as "num/den" strings so no endpoint is rounded through
// binary64. Parsing also accepts plain integers, exact decimal strings, and
// JSON numbers (converted exactly from their binary64 value).
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Exact values collapse to a bare rational string; approximate ones keep
// their error bound.
Json to_json(const UnitValue& v);
UnitValue unit_value_from_json(const Json& j);

Json to_json(const ProbInterval& p);
ProbInterval prob_interval_from_json(const Json& j);

Json to_json(const SpaceDescriptor& s);
SpaceDescriptor space_from_json(const Json& j);

Json to_json(const OpenSet& o);
OpenSet open_set_from_json(const Json& j);

Json to_json(const ClosedSet& c);
ClosedSet closed_set_from_json(const Json& j);

Json to_json(const EventPair& e);
EventPair event_pair_from_json(const Json& j);

Json to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j);

Json to_json(const CredalSet& k);
CredalSet credal_set_from_json(const Json& j);

Json to_json(const BayesAssessment& a);
BayesAssessment assessment_from_json(const Json& j);

Json to_json(const IFSSystem& s);
IFSSystem ifs_from_json(const Json& j);

Json to_json(const IntervalTransitionMatrix& m);
IntervalTransitionMatrix matrix_from_json(const Json& j);

Json to_json(const StationaryBounds& b);
StationaryBounds stationary_bounds_from_json(const Json& j);

Json to_json(const Judgment& j);
Judgment judgment_from_json(const Json& j);

std::string rule_id_to_string(RuleId id);
RuleId rule_id_from_string(const std::string& s);

Json to_json(const RuleInstance& r);
RuleInstance rule_instance_from_json(const Json& j);

Json to_json(const GraphoidReport& r);
Json to_json(const BackwardReport& r);
Json to_json(const SweepReport& r);
Json to_json(const EnvelopeReport& r);

// Wraps a result in the self-describing envelope.
Json envelope(const std::string& kind, Json payload);

}  // namespace credal::io

#endif  // CREDAL_JSON_IO_HPP
