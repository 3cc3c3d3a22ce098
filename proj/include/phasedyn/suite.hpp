#pragma once

#include "phasedyn/dynamics.hpp"
#include "phasedyn/report.hpp"
#include "phasedyn/scenario.hpp"
#include "phasedyn/serialize.hpp"

namespace phasedyn {

/// The constructed operators of one scenario.
struct Model {
  Operator ladder;    // J+~, W+, a or a_q
  Operator partner;   // J-~, W-, a^dag or a_q^dag
  Operator conserved; // J0~, W0 or N
  Hamiltonian H;
  cplx lambda;        // d(ladder)/dt = lambda ladder
  Json document;      // everything `build` writes
};

/// Builds the family's operators. Library errors propagate.
Model build_model(const Scenario& sc);

/// Runs every identity for the family. Check names are "category/name" with
/// category one of algebra, casimir, phase, dynamics, derivation, control.
/// A construction failure shows up as a failed "algebra/construction" check.
CheckReport run_verify(const Scenario& sc);

/// Wraps a report with the version and resolved scenario.
Json verify_document(const Scenario& sc, const CheckReport& report);

} // namespace phasedyn
