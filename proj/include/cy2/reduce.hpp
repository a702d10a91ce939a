#pragma once

// Phase reduction: drive a spherical object to a stable one by twisting in
// stable sphericals at its extreme phases, certifying at every step that the
// bottom (or top) phase strictly improves and the other end does not get
// worse. Also realigns a braid-transported standard stability condition so
// the simples land back in a width-one phase window.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cy2/stability.hpp"

namespace cy2 {

enum class Strategy { bottom, top };

// Which of the non-deterioration statements applied to a step.
enum class OtherEnd {
  large_spread,  // spread >= 1 and no negative self-extensions
  small_spread,  // spread < 1 and one-dimensional Hom^0(Y, Y)
  unchecked,     // neither hypothesis set holds
};

struct StepCertificate {
  Strategy direction = Strategy::bottom;
  int root = -1;   // twisting object is stable(root)[shift]
  int shift = 0;
  PhaseBounds before;
  PhaseBounds after;
  TwistedComplex result;  // untwist (bottom) or twist (top) of Y

  // Hypothesis measurements on Y.
  bool negative_self_homs_vanish = false;
  int endomorphism_dim = 0;

  // The driven end moves strictly past the twisting object's phase.
  bool improvement_holds = false;
  OtherEnd clause = OtherEnd::unchecked;
  bool other_end_holds = true;  // vacuous when clause == unchecked

  bool conclusions_hold() const { return improvement_holds && other_end_holds; }
};

// Twists Y by stable(root) (untwist for bottom, twist for top) and checks
// the improvement statements. Throws PreconditionError when the twisting
// object is not at the relevant extreme phase of Y, or is a direct summand
// of Y. Conclusion failures are reported in the certificate, not thrown.
StepCertificate certify_step(const StandardStability& tau, int root, int shift, const TwistedComplex& Y,
                             Strategy direction);

struct ReductionStep {
  int root;      // positive root index of the stable object twisted by
  int shift;     // the extreme HN factor was stable(root)[shift]
  int exponent;  // -1: untwist (bottom), +1: twist (top)
  StepCertificate certificate;
  PhaseValue spread_before;
  PhaseValue spread_after;
};

struct ReductionTrace {
  Strategy strategy = Strategy::bottom;
  std::vector<ReductionStep> steps;
  TwistedComplex final_object;
  PhaseBounds final_bounds;
  // final_object ~= stable(final_root)[final_shift].
  int final_root = -1;
  int final_shift = 0;
  // Braid word in the generators sigma_i with final_object ~= to_stable(Y).
  BraidWord to_stable;
  // Y ~= from_simple(P_base)[final_shift].
  BraidWord from_simple;
  int base_vertex = 0;
};

struct ReduceOptions {
  // 0 picks a default from the number of roots and the initial spread.
  std::size_t step_budget = 0;
  bool check_spherical = true;
};

// Throws PreconditionError for non-spherical input and InvariantViolation
// if any step fails to improve as predicted or the budget runs out.
ReductionTrace reduce_to_stable(const StandardStability& tau, const TwistedComplex& Y, Strategy strategy,
                                const ReduceOptions& options = {});

// sigma_S^{exponent} for S = stable(root), written in the generators.
BraidWord twist_word(const StandardStability& tau, int root, int exponent);

struct SandwichResult {
  PhaseBounds first, middle, last;
  bool lower_holds;  // phi-(middle) >= min(phi-(first), phi-(last))
  bool upper_holds;  // phi+(middle) <= max(phi+(first), phi+(last))
  bool holds() const { return lower_holds && upper_holds; }
};

// For an exact triangle first -> middle -> last -> first[1]. Zero terms are
// skipped.
SandwichResult sandwich_check(const StandardStability& tau, const TwistedComplex& first,
                              const TwistedComplex& middle, const TwistedComplex& last);

// A standard stability condition moved by a braid word and rotated: the
// phases of Y under it are the base phases of transport^{-1}(Y) plus rotation.
struct OrbitStability {
  std::shared_ptr<const StandardStability> base;
  BraidWord transport;
  PhaseValue rotation = PhaseValue::integer(0);

  PhaseBounds bounds(const TwistedComplex& Y) const;
};

struct AlignStep {
  int root;
  int shift;
  PhaseValue spread_before;
  PhaseValue spread_after;
};

struct AlignResult {
  BraidWord transport;     // final transport word
  PhaseValue alpha = PhaseValue::integer(0);
  std::vector<AlignStep> steps;
  OrbitStability aligned;  // final transport, rotated by -alpha
  std::vector<PhaseBounds> simple_bounds;  // each P_i under `aligned`
  bool realigned = false;  // every P_i is stable under `aligned` with phase in [0, 1)
};

struct AlignOptions {
  // 0 picks roots * shift span * 4.
  std::size_t step_budget = 0;
};

AlignResult heart_align(const OrbitStability& omega, const AlignOptions& options = {});

}  // namespace cy2
