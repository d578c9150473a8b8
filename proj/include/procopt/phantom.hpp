#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "procopt/dataset.hpp"
#include "procopt/schema.hpp"

namespace procopt {

/// Ground-truth stand-in for a real process: maps one input row to all m
/// criterion values. Used to synthesize experience data.
using PhantomFn =
    std::function<std::vector<double>(std::span<const double>)>;

/// Registers a phantom for every schema with the given hash. The ozonation
/// phantom is pre-registered.
void register_phantom(std::uint64_t schema_hash, PhantomFn fn,
                      std::vector<double> noise_sigma);

std::optional<PhantomFn> find_phantom(const ProcessSchema& schema);

/// Per-criterion noise level paired with the registered phantom
/// (2% of each response's plausible span for the ozonation process).
std::optional<std::vector<double>> default_noise_sigma(
    const ProcessSchema& schema);

/// Evaluates the ozonation responses (k/s, L*, a*, b*) at one input row.
std::vector<double> ozonation_phantom(std::span<const double> inputs);

/// Draws `count` rows with inputs uniform on each variable's grid and
/// outputs = phantom(inputs) + N(0, sigma_i) per criterion.
ExperienceDataset synth_generate(const ProcessSchema& schema, long count,
                                 const std::vector<double>& noise_sigma,
                                 std::uint64_t seed);

}  // namespace procopt
