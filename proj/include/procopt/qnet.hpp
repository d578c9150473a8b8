#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace procopt {

/// One hidden rectifier layer followed by a linear output layer, one output
/// unit per action. Weight matrices are stored row-major.
struct NetworkParams {
    std::size_t inputs = 0;
    std::size_t hidden = 0;
    std::size_t outputs = 0;
    std::vector<double> w1;  // hidden x inputs
    std::vector<double> b1;  // hidden
    std::vector<double> w2;  // outputs x hidden
    std::vector<double> b2;  // outputs

    std::size_t parameter_count() const {
        return w1.size() + b1.size() + w2.size() + b2.size();
    }
};

/// Weights uniform in +-1/sqrt(fan_in), biases zero.
NetworkParams init_params(std::size_t inputs, std::size_t outputs,
                          std::size_t hidden, std::uint64_t seed);

/// q = W2 relu(W1 x + b1) + b2.
std::vector<double> forward(const NetworkParams& params,
                            std::span<const double> features);

struct BatchSample {
    std::vector<double> features;
    std::size_t action = 0;
    double td_target = 0.0;
};

/// One plain gradient-descent step on the mean over the batch of
/// (target - q[action])^2; gradient flows only through each sample's chosen
/// action unit. Returns the pre-update batch loss.
double train_step(NetworkParams& params, std::span<const BatchSample> batch,
                  double learning_rate);

/// Deep independent copy.
NetworkParams clone_params(const NetworkParams& params);

void save_params(const NetworkParams& params, const std::string& path);
NetworkParams load_params(const std::string& path);

}  // namespace procopt
