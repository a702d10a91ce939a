#pragma once

// JSON shapes for objects, charges, phases and traces.

#include <json.hpp>
#include <string>

#include "cy2/reduce.hpp"

namespace cy2 {

using json = nlohmann::json;

// {"generators": [{"vertex": v, "shift": s}, ...],
//  "differential": [{"from": g, "to": h, "basis": "a1>2", "coeff": "p/q"}, ...]}
// Vertices and generator indices are 1-based; entries are row-major.
json to_json(const TwistedComplex& X);
TwistedComplex complex_from_json(const AlgebraPtr& algebra, const json& j);

// {"1": [num_re, den_re, num_im, den_im], ...}
json to_json(const CentralCharge& Z);
CentralCharge charge_from_json(const json& j, int rank);
CentralCharge load_charge(const std::string& path, int rank);

// {"exact": {"shift": k, "direction": [re, im]}, "approx": x}
json to_json(const PhaseValue& p);
json to_json(const StandardStability& tau, const PhaseBounds& b);
json to_json(const StandardStability& tau, const ReductionTrace& trace);
json to_json(const StandardStability& tau, const AlignResult& result);

}  // namespace cy2
