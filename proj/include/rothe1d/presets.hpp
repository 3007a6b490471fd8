// Built-in model presets. The model only demands bounded Lipschitz
// coefficients, so these are illustrative families at desk scale:
//
//   stationary  - zero forcing, all couplings off; the uniform initial state
//                 is an exact equilibrium of the scheme.
//   smooth      - d=3, every coefficient family active but mild; the default
//                 subject of the energy audit and the convergence studies.
//   decoupled   - E == 0, A_m == 0, B == 0, F == 0, no influx; keeps the
//                 transport couplings I, H small but nonzero so the
//                 feasibility cascade (Q0..Q3, ytilde, ztilde, H*, H**)
//                 stays nondegenerate.
//   budget_trip - strong G_v so the velocity budget trips within a few slices.
//   phifloor    - depleting reaction on phi_1 that walks a fraction through
//                 the phi_min floor.

#pragma once

#include <string>
#include <vector>

#include "rothe1d/model.hpp"
#include "rothe1d/stepper.hpp"

namespace rothe {

struct PresetBundle {
  ModelSpec spec;
  StepperConfig cfg;
};

PresetBundle make_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace rothe
