#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "procopt/schema.hpp"

namespace procopt {

/// Measured (or synthesized) process runs: one row = n parameter inputs and
/// the m criterion outputs observed for them.
struct ExperienceDataset {
    ProcessSchema schema;
    std::vector<std::vector<double>> inputs;
    std::vector<std::vector<double>> outputs;

    std::size_t size() const { return inputs.size(); }
};

/// Reads a comma-separated file whose header must be the schema's variable
/// names followed by its criteria names, in order. Numbers use dot decimals.
/// Parse failures name the offending 1-based data row and column.
ExperienceDataset load_csv(const std::string& path,
                           const ProcessSchema& schema);

void save_csv(const ExperienceDataset& dataset, const std::string& path);

/// Seeded shuffle split. Train gets round(train_fraction * rows) rows; train
/// and test together are a permutation-free partition of the input rows.
std::pair<ExperienceDataset, ExperienceDataset> split(
    const ExperienceDataset& dataset, double train_fraction,
    std::uint64_t seed);

}  // namespace procopt
