#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "procopt/env.hpp"
#include "procopt/qnet.hpp"
#include "procopt/rng.hpp"

namespace procopt {

/// FIFO experience store: insertion beyond capacity evicts the oldest.
class ReplayMemory {
public:
    explicit ReplayMemory(std::size_t capacity);

    void push(Transition t);
    std::size_t size() const { return size_; }
    std::size_t capacity() const { return capacity_; }
    /// i = 0 is the oldest stored transition.
    const Transition& oldest(std::size_t i) const;
    /// Uniform draw over the stored transitions.
    const Transition& sample(Rng& rng) const;

private:
    std::size_t capacity_;
    std::size_t head_ = 0;  // slot the next push writes
    std::size_t size_ = 0;
    std::vector<Transition> buffer_;
};

struct AgentConfig {
    int target_sync_every = 5;       // R: gradient step + target sync cadence
    int warmup_steps = 100;          // env steps before training starts
    std::size_t replay_capacity = 2000;  // D
    double learning_rate = 0.01;     // alpha
    double discount = 0.9;           // gamma
    double epsilon_increment = 0.001;
    double epsilon_max = 0.9;
    int episodes = 5;                // E
    int steps_per_episode = 5000;    // N
    int minibatch = 32;
    std::size_t hidden = 50;
    /// qlearning_train refuses state-action tables larger than this.
    std::uint64_t table_limit = 8000000;
};

void validate(const AgentConfig& cfg);

/// epsilon is the EXPLOITATION probability here: it starts at 0 (all moves
/// random) and ramps linearly to epsilon_max.
double epsilon_at(std::uint64_t step, const AgentConfig& cfg);

/// With probability epsilon returns the argmax (first index on ties),
/// otherwise a uniformly random action.
std::size_t select_action(std::span<const double> q_values, double epsilon,
                          Rng& rng);

/// One tabular value update per Eq-style Bellman backup:
/// q + alpha (r + gamma max_next - q).
double q_update(double q_old, double reward, double discount,
                double learning_rate, double max_next);

struct StepRecord {
    double epsilon = 0.0;
    /// Training loss of the gradient step taken at this env step; NaN on
    /// steps without an update.
    double loss = 0.0;
    double min_error = 0.0;
};

struct EpisodeRecord {
    std::uint64_t distinct_states = 0;
    double seconds = 0.0;  // wall clock; never written to artifacts
};

struct RunLog {
    std::vector<StepRecord> steps;
    std::vector<EpisodeRecord> episodes;
};

struct TrainResult {
    EnvState best_state;
    double best_error = 0.0;
    /// Global env step at which the final best error was first recorded.
    std::uint64_t best_step = 0;
    RunLog log;
    /// Tabular agents only: the learned argmax action per grid state
    /// (first index on ties). Empty for the other agents.
    std::vector<std::size_t> greedy_policy;
};

/// Test hook: called once per env step after any update, with the online and
/// target parameters as they stand.
using DqnStepObserver = std::function<void(
    std::uint64_t step, const NetworkParams& online,
    const NetworkParams& target)>;

/// Experience-replay DQN with a periodically synced target network and
/// increasing epsilon-greedy exploration. Fully reproducible from the seed.
TrainResult dqn_train(EnvContext& ctx, const AgentConfig& cfg,
                      std::uint64_t seed, const DqnStepObserver& observer = {});

/// Tabular baseline on the same schedule; the whole state-action table must
/// fit under cfg.table_limit.
TrainResult qlearning_train(EnvContext& ctx, const AgentConfig& cfg,
                            std::uint64_t seed);

/// Uniform-random policy on the same episode structure and step budget; the
/// no-learning reference both agents are expected to beat.
TrainResult random_walk_baseline(EnvContext& ctx, const AgentConfig& cfg,
                                 std::uint64_t seed);

struct CompareRow {
    std::size_t scenario = 0;  // 1-based
    std::string method;
    EnvState best_state;
    std::vector<double> simulated;  // surrogate predictions at best_state
    double best_error = 0.0;
    std::uint64_t steps_to_best = 0;
};

/// Runs DQN and Q-learning on every scenario with matched per-scenario
/// seeds derived from master_seed; two rows per scenario in method order
/// dqn, qlearning.
std::vector<CompareRow> compare(const ProcessSchema& schema,
                                std::span<const RandomForestModel> models,
                                const std::vector<TargetSpec>& scenarios,
                                const AgentConfig& cfg,
                                std::uint64_t master_seed);

}  // namespace procopt
