#include "cy2/reduce.hpp"

#include <algorithm>
#include <string>

#include "cy2/error.hpp"

namespace cy2 {

namespace {

std::string describe(const StandardStability& tau, int root, int shift) {
  return "stable(" + to_string(tau.roots()[root]) + ")[" + std::to_string(shift) + "]";
}

}  // namespace

StepCertificate certify_step(const StandardStability& tau, int root, int shift, const TwistedComplex& Y,
                             Strategy direction) {
  StepCertificate cert;
  cert.direction = direction;
  cert.root = root;
  cert.shift = shift;
  cert.before = tau.bounds(Y);
  const PhaseValue phase = tau.phase(root, shift);
  const bool bottom = direction == Strategy::bottom;
  if (phase != (bottom ? cert.before.lower : cert.before.upper))
    throw PreconditionError("certify_step: " + describe(tau, root, shift) + " is not at the " +
                            (bottom ? "bottom" : "top") + " phase of Y");

  const auto& S = tau.stable_spherical(root);
  if (is_direct_summand(S.object(), Y, shift))
    throw PreconditionError("certify_step: " + describe(tau, root, shift) + " is a direct summand of Y");

  const auto self = hom_dims(Y, Y);
  cert.negative_self_homs_vanish = self.empty() || self.begin()->first >= 0;
  cert.endomorphism_dim = self.contains(0) ? self.at(0) : 0;

  cert.result = bottom ? untwist(S, Y) : twist(S, Y);
  cert.after = tau.bounds(cert.result);

  cert.improvement_holds = bottom ? phase < cert.after.lower : cert.after.upper < phase;

  const PhaseValue spread = cert.before.spread();
  if (spread >= PhaseValue::integer(1) && cert.negative_self_homs_vanish)
    cert.clause = OtherEnd::large_spread;
  else if (spread < PhaseValue::integer(1) && cert.endomorphism_dim == 1)
    cert.clause = OtherEnd::small_spread;
  if (cert.clause != OtherEnd::unchecked)
    cert.other_end_holds = bottom ? cert.after.upper <= cert.before.upper : cert.before.lower <= cert.after.lower;
  return cert;
}

BraidWord twist_word(const StandardStability& tau, int root, int exponent) {
  const auto& c = tau.stable(root);
  BraidWord middle({BraidLetter{c.word.base, exponent}});
  return c.braid.inverse().then(middle).then(c.braid).reduced();
}

ReductionTrace reduce_to_stable(const StandardStability& tau, const TwistedComplex& Y, Strategy strategy,
                                const ReduceOptions& options) {
  if (options.check_spherical && !is_spherical(Y)) throw PreconditionError("reduce_to_stable: input is not spherical");
  ReductionTrace trace;
  trace.strategy = strategy;
  TwistedComplex cur = minimize(Y);
  PhaseBounds b = tau.bounds(cur);

  std::size_t budget = options.step_budget;
  if (budget == 0) {
    const PhaseValue s = b.spread();
    const std::size_t n = tau.roots().size();
    budget = n * n * static_cast<std::size_t>(s.shift() + 2) + 1;
  }

  BraidWord word;
  while (b.spread() != PhaseValue::integer(0)) {
    if (trace.steps.size() >= budget)
      throw InvariantViolation("reduce_to_stable: step budget of " + std::to_string(budget) + " exhausted");
    const bool bottom = strategy == Strategy::bottom;
    const int root = bottom ? b.lower_root : b.upper_root;
    const int shift = bottom ? b.lower_shift : b.upper_shift;
    StepCertificate cert = certify_step(tau, root, shift, cur, strategy);
    if (!cert.improvement_holds)
      throw InvariantViolation("reduce_to_stable: twisting by " + describe(tau, root, shift) +
                               " did not move the " + (bottom ? "bottom" : "top") + " phase strictly");
    if (!cert.other_end_holds)
      throw InvariantViolation("reduce_to_stable: twisting by " + describe(tau, root, shift) +
                               " made the other end of the phase range worse");
    const PhaseValue before = b.spread();
    const PhaseValue after = cert.after.spread();
    if (!(after < before))
      throw InvariantViolation("reduce_to_stable: spread did not decrease (" + std::to_string(before.approx()) +
                               " -> " + std::to_string(after.approx()) + ")");
    const int exponent = bottom ? -1 : 1;
    word = word.then(twist_word(tau, root, exponent)).reduced();
    cur = cert.result;
    b = cert.after;
    trace.steps.push_back(ReductionStep{root, shift, exponent, std::move(cert), before, after});
  }

  trace.final_object = cur;
  trace.final_bounds = b;
  trace.final_root = b.lower_root;
  trace.final_shift = b.lower_shift;
  const auto& target = tau.stable(trace.final_root);
  if (!is_isomorphic(shift(target.object, trace.final_shift), cur))
    throw InvariantViolation("reduce_to_stable: final object is semistable but not isomorphic to " +
                             describe(tau, trace.final_root, trace.final_shift));
  trace.to_stable = word;
  trace.base_vertex = target.word.base;
  trace.from_simple = target.braid.then(word.inverse()).reduced();
  return trace;
}

SandwichResult sandwich_check(const StandardStability& tau, const TwistedComplex& first, const TwistedComplex& middle,
                              const TwistedComplex& last) {
  SandwichResult r{};
  r.middle = tau.bounds(middle);
  std::optional<PhaseValue> lo, hi;
  for (const TwistedComplex* end : {&first, &last}) {
    if (end->is_zero()) continue;
    const auto b = tau.bounds(*end);
    if (!lo || b.lower < *lo) lo = b.lower;
    if (!hi || b.upper > *hi) hi = b.upper;
    (end == &first ? r.first : r.last) = b;
  }
  if (!lo) throw PreconditionError("sandwich_check: both ends are zero but the middle is not");
  r.lower_holds = r.middle.lower >= *lo;
  r.upper_holds = r.middle.upper <= *hi;
  return r;
}

PhaseBounds OrbitStability::bounds(const TwistedComplex& Y) const {
  PhaseBounds b = base->bounds(apply_braid(transport.inverse(), Y));
  b.lower = b.lower + rotation;
  b.upper = b.upper + rotation;
  return b;
}

AlignResult heart_align(const OrbitStability& omega, const AlignOptions& options) {
  const StandardStability& tau = *omega.base;
  const int n = tau.quiver().vertex_count();
  const BraidWord pull = omega.transport.inverse();

  // Work with the pulled-back summands beta^{-1}(P_i) under the base condition.
  std::vector<TwistedComplex> summands;
  for (int i = 0; i < n; ++i) summands.push_back(apply_braid(pull, TwistedComplex::projective(tau.algebra(), i)));
  auto total = [&] {
    TwistedComplex sum(tau.algebra());
    for (const auto& s : summands) sum = direct_sum(sum, s);
    return sum;
  };

  AlignResult result;
  BraidWord transport = omega.transport;
  PhaseBounds b = tau.bounds(total());

  std::size_t budget = options.step_budget;
  if (budget == 0) {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& s : summands) {
      lo = first ? s.min_shift() : std::min(lo, s.min_shift());
      hi = first ? s.max_shift() : std::max(hi, s.max_shift());
      first = false;
    }
    budget = tau.roots().size() * static_cast<std::size_t>(hi - lo + 1) * 4;
  }

  while (b.spread() >= PhaseValue::integer(1)) {
    if (result.steps.size() >= budget)
      throw InvariantViolation("heart_align: step budget of " + std::to_string(budget) + " exhausted");
    const auto& S = tau.stable_spherical(b.lower_root);
    for (auto& s : summands) s = untwist(S, s);
    const PhaseBounds next = tau.bounds(total());
    if (!(next.spread() < b.spread()))
      throw InvariantViolation("heart_align: spread did not decrease after twisting by " +
                               describe(tau, b.lower_root, b.lower_shift));
    if (!(b.lower < next.lower))
      throw InvariantViolation("heart_align: bottom phase did not increase after twisting by " +
                               describe(tau, b.lower_root, b.lower_shift));
    // omega' = sigma_{beta S} omega = beta sigma_S tau: sigma_S acts first.
    transport = twist_word(tau, b.lower_root, 1).then(transport).reduced();
    result.steps.push_back(AlignStep{b.lower_root, b.lower_shift, b.spread(), next.spread()});
    b = next;
  }

  const PhaseValue lower = b.lower + omega.rotation;
  const PhaseValue upper = b.upper + omega.rotation;
  const bool already = lower >= PhaseValue::integer(0) && upper < PhaseValue::integer(1);
  result.alpha = already ? PhaseValue::integer(0) : lower;
  result.transport = transport;
  result.aligned = OrbitStability{omega.base, transport, omega.rotation - result.alpha};

  result.realigned = true;
  for (int i = 0; i < n; ++i) {
    PhaseBounds sb = tau.bounds(summands[i]);
    sb.lower = sb.lower + result.aligned.rotation;
    sb.upper = sb.upper + result.aligned.rotation;
    const bool stable = sb.spread() == PhaseValue::integer(0);
    result.realigned = result.realigned && stable && heart_test(sb);
    result.simple_bounds.push_back(sb);
  }
  return result;
}

}  // namespace cy2
