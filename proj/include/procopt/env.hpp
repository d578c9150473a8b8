#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "procopt/forest.hpp"
#include "procopt/rng.hpp"
#include "procopt/schema.hpp"

namespace procopt {

/// A point of the parameter lattice: one value per schema variable, each on
/// its variable's grid.
struct EnvState {
    std::vector<double> values;

    bool operator==(const EnvState& other) const {
        return values == other.values;
    }
};

/// Desired criterion values plus the AHP weights scoring deviations.
struct TargetSpec {
    std::vector<double> targets;
    std::vector<double> weights;
};

struct Transition {
    EnvState state;
    int action = 0;
    double reward = 0.0;
    EnvState next_state;
    bool terminal = false;
};

/// 3^n:one action digit per variable (base 3, variable 0 most significant):
/// 0 decreases by the variable's step, 1 keeps, 2 increases.
std::uint64_t action_count(const ProcessSchema& schema);
std::vector<double> action_decode(std::uint64_t index,
                                  const ProcessSchema& schema);

/// Applies the action's deltas, clamping each variable to its grid
/// independently.
EnvState env_step(const EnvState& state, std::uint64_t action,
                  const ProcessSchema& schema);

/// Mixed-radix index of a state over the grid, variable 0 most significant.
std::uint64_t state_grid_index(const EnvState& state,
                               const ProcessSchema& schema);
EnvState state_from_grid_index(std::uint64_t index,
                               const ProcessSchema& schema);

EnvState random_initial_state(const ProcessSchema& schema, Rng& rng);
EnvState random_initial_state(const ProcessSchema& schema, std::uint64_t seed);

/// Min-max normalization per variable; a degenerate variable (max == min)
/// maps to 0.
std::vector<double> normalize_state(const EnvState& state,
                                    const ProcessSchema& schema);

/// Sum_i sqrt(w_i^2 (f_i - p_i)^2): the weighted L1 distance between
/// predicted criteria and the target.
double weighted_l1_distance(std::span<const double> predicted,
                            const TargetSpec& target);

/// sqrt(Sum_i w_i^2 (f_i - p_i)^2): the weighted L2 solution error. Note it
/// deliberately differs from the L1 form the reward uses.
double weighted_l2_error(std::span<const double> predicted,
                         const TargetSpec& target);

/// Decrease in weighted L1 distance to target as predicted by the surrogate
/// models; positive when next_state is closer.
double reward(const EnvState& state, const EnvState& next_state,
              std::span<const RandomForestModel> models,
              const TargetSpec& target, const ProcessSchema& schema);

double solution_error(const EnvState& state,
                      std::span<const RandomForestModel> models,
                      const TargetSpec& target, const ProcessSchema& schema);

/// Per-criterion surrogate as a plain function, so agents run against
/// forests and tests can run against analytic responses.
using CriterionFn = std::function<double(std::span<const double>)>;

CriterionFn as_criterion_fn(const RandomForestModel& model);

/// Bundles everything one optimization run needs: schema, surrogates, and
/// target. Predictions are memoized per grid state; one context serves one
/// run (not thread-safe across runs).
class EnvContext {
public:
    EnvContext(ProcessSchema schema, std::vector<CriterionFn> predictors,
               TargetSpec target);

    /// Validates model/schema hashes and criterion count.
    static EnvContext from_models(const ProcessSchema& schema,
                                  std::span<const RandomForestModel> models,
                                  TargetSpec target);

    const ProcessSchema& schema() const { return schema_; }
    const TargetSpec& target() const { return target_; }
    std::size_t n_criteria() const { return predictors_.size(); }

    /// Predicted criterion values of a state (cached by grid index).
    const std::vector<double>& predict(const EnvState& state);

    double l1_distance(const EnvState& state);
    double error(const EnvState& state);

private:
    ProcessSchema schema_;
    std::vector<CriterionFn> predictors_;
    TargetSpec target_;
    std::unordered_map<std::uint64_t, std::vector<double>> cache_;
};

}  // namespace procopt
