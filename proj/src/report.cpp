#include "cy2/report.hpp"

#include <fstream>

#include "cy2/error.hpp"

namespace cy2 {

json to_json(const TwistedComplex& X) {
  json gens = json::array();
  for (const auto& g : X.generators()) gens.push_back({{"vertex", g.vertex + 1}, {"shift", g.shift}});
  json diff = json::array();
  for (const auto& e : X.differential())
    diff.push_back({{"from", e.col + 1}, {"to", e.row + 1}, {"basis", to_string(X.entry_basis(e))},
                    {"coeff", to_string(e.coeff)}});
  return {{"generators", gens}, {"differential", diff}};
}

TwistedComplex complex_from_json(const AlgebraPtr& algebra, const json& j) {
  try {
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
      gens.push_back(Generator{g.at("vertex").get<int>() - 1, g.at("shift").get<int>()});
    std::vector<MatrixEntry> diff;
    for (const auto& e : j.at("differential"))
      diff.push_back(MatrixEntry{e.at("to").get<int>() - 1, e.at("from").get<int>() - 1,
                                 parse_rational(e.at("coeff").get<std::string>())});
    return TwistedComplex(algebra, std::move(gens), std::move(diff));
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed object JSON: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ConfigError(std::string("invalid object: ") + ex.what());
  }
}

json to_json(const CentralCharge& Z) {
  json j = json::object();
  for (int i = 0; i < Z.rank(); ++i) {
    const auto& z = Z.values()[i];
    j[std::to_string(i + 1)] = {z.re.get_num().get_si(), z.re.get_den().get_si(), z.im.get_num().get_si(),
                                z.im.get_den().get_si()};
  }
  return j;
}

CentralCharge charge_from_json(const json& j, int rank) {
  if (!j.is_object()) throw ConfigError("central charge JSON must be an object keyed by vertex");
  std::vector<Complex> values(rank);
  std::vector<bool> seen(rank, false);
  for (const auto& [key, val] : j.items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) v = 0;
    } catch (const std::exception&) {
      v = 0;
    }
    if (v < 1 || v > rank) throw ConfigError("central charge: unknown vertex '" + key + "'");
    if (!val.is_array() || val.size() != 4)
      throw ConfigError("central charge: vertex " + key + " needs [num_re, den_re, num_im, den_im]");
    long parts[4];
    for (int k = 0; k < 4; ++k) {
      if (!val[k].is_number_integer()) throw ConfigError("central charge: vertex " + key + " has a non-integer entry");
      parts[k] = val[k].get<long>();
    }
    if (parts[1] == 0 || parts[3] == 0) throw ConfigError("central charge: zero denominator at vertex " + key);
    Rational re(parts[0], parts[1]), im(parts[2], parts[3]);
    re.canonicalize();
    im.canonicalize();
    values[v - 1] = Complex(re, im);
    seen[v - 1] = true;
  }
  for (int i = 0; i < rank; ++i)
    if (!seen[i]) throw ConfigError("central charge: missing vertex " + std::to_string(i + 1));
  return CentralCharge(std::move(values));
}

CentralCharge load_charge(const std::string& path, int rank) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open charge file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw ConfigError("charge file '" + path + "': " + ex.what());
  }
  return charge_from_json(j, rank);
}

json to_json(const PhaseValue& p) {
  return {{"exact", {{"shift", p.shift()}, {"direction", {to_string(p.direction().re), to_string(p.direction().im)}}}},
          {"approx", p.approx()}};
}

json to_json(const StandardStability& tau, const PhaseBounds& b) {
  return {{"lower", to_json(b.lower)},
          {"upper", to_json(b.upper)},
          {"spread", to_json(b.spread())},
          {"lower_factor", {{"root", to_string(tau.roots()[b.lower_root])}, {"shift", b.lower_shift}}},
          {"upper_factor", {{"root", to_string(tau.roots()[b.upper_root])}, {"shift", b.upper_shift}}}};
}

namespace {

const char* clause_name(OtherEnd c) {
  switch (c) {
    case OtherEnd::large_spread:
      return "large_spread";
    case OtherEnd::small_spread:
      return "small_spread";
    case OtherEnd::unchecked:
      return "unchecked";
  }
  return "?";
}

}  // namespace

json to_json(const StandardStability& tau, const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    const auto& c = s.certificate;
    steps.push_back({{"twist", {{"root", to_string(tau.roots()[s.root])}, {"shift", s.shift}, {"exponent", s.exponent}}},
                     {"phi_minus", {to_json(c.before.lower), to_json(c.after.lower)}},
                     {"phi_plus", {to_json(c.before.upper), to_json(c.after.upper)}},
                     {"spread", {to_json(s.spread_before), to_json(s.spread_after)}},
                     {"certificate",
                      {{"improvement", c.improvement_holds},
                       {"other_end_clause", clause_name(c.clause)},
                       {"other_end", c.other_end_holds},
                       {"endomorphism_dim", c.endomorphism_dim},
                       {"negative_self_homs_vanish", c.negative_self_homs_vanish}}},
                     {"generators_after", c.result.size()}});
  }
  return {{"strategy", trace.strategy == Strategy::bottom ? "bottom" : "top"},
          {"steps", steps},
          {"final",
           {{"object", to_json(trace.final_object)},
            {"stable_root", to_string(tau.roots()[trace.final_root])},
            {"shift", trace.final_shift},
            {"phase", to_json(trace.final_bounds.lower)}}},
          {"to_stable_word", to_string(trace.to_stable)},
          {"from_simple", {{"word", to_string(trace.from_simple)}, {"simple", trace.base_vertex + 1},
                           {"shift", trace.final_shift}}}};
}

json to_json(const StandardStability& tau, const AlignResult& result) {
  json steps = json::array();
  for (const auto& s : result.steps)
    steps.push_back({{"root", to_string(tau.roots()[s.root])},
                     {"shift", s.shift},
                     {"spread_before", to_json(s.spread_before)},
                     {"spread_after", to_json(s.spread_after)}});
  json simples = json::array();
  for (std::size_t i = 0; i < result.simple_bounds.size(); ++i)
    simples.push_back({{"simple", i + 1}, {"phases", to_json(tau, result.simple_bounds[i])}});
  return {{"transport", to_string(result.transport)},
          {"alpha", to_json(result.alpha)},
          {"steps", steps},
          {"simples_after_rotation", simples},
          {"realigned", result.realigned}};
}

}  // namespace cy2
