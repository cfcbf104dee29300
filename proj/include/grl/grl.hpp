#pragma once

// Umbrella header.
#include "grl/core/enumerate.hpp"
#include "grl/core/errors.hpp"
#include "grl/core/gmdp.hpp"
#include "grl/core/ground.hpp"
#include "grl/core/modular.hpp"
#include "grl/core/objective.hpp"
#include "grl/core/policy.hpp"
#include "grl/core/rng.hpp"
#include "grl/core/trajectory.hpp"
#include "grl/rewards/additive.hpp"
#include "grl/rewards/composite.hpp"
#include "grl/rewards/count_based.hpp"
#include "grl/rewards/coverage.hpp"
#include "grl/rewards/curvature.hpp"
#include "grl/rewards/modularize.hpp"
#include "grl/rewards/reward.hpp"
#include "grl/rewards/synergy.hpp"
#include "grl/gp/kernel.hpp"
#include "grl/gp/mutual_information.hpp"
#include "grl/semigrad/expected.hpp"
#include "grl/semigrad/lower_bounds.hpp"
#include "grl/semigrad/permutation.hpp"
#include "grl/solver/brute_force.hpp"
#include "grl/solver/finite_horizon.hpp"
#include "grl/algorithms/gpo.hpp"
#include "grl/algorithms/gto.hpp"
#include "grl/algorithms/guarantee.hpp"
#include "grl/algorithms/mod.hpp"
#include "grl/harness/config.hpp"
#include "grl/harness/experiment.hpp"
#include "grl/harness/guarantees.hpp"
#include "grl/harness/instance.hpp"
#include "grl/harness/plot.hpp"
#include "grl/harness/presets.hpp"
#include "grl/harness/records.hpp"
