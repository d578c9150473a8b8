#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace procopt {

/// One adjustable process parameter: closed range [min, max] walked in
/// increments of `step`.
struct Variable {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;
};

/// Declares the process under optimization: the ordered parameter variables
/// and the ordered criteria the process is scored on. Validated on
/// construction; instances are immutable afterwards.
class ProcessSchema {
public:
    ProcessSchema(std::vector<Variable> variables,
                  std::vector<std::string> criteria);

    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<std::string>& criteria() const { return criteria_; }
    std::size_t n_variables() const { return variables_.size(); }
    std::size_t n_criteria() const { return criteria_.size(); }

    /// Number of lattice points {min, min+step, ...} of variable j.
    std::size_t grid_count(std::size_t j) const;
    double grid_value(std::size_t j, std::size_t k) const;
    /// Nearest lattice index of a value known to lie on the grid.
    std::size_t grid_index(std::size_t j, double value) const;
    bool on_grid(std::size_t j, double value, double tol = 1e-6) const;
    /// Total number of states = product of per-variable grid counts.
    std::uint64_t total_grid_points() const;

    /// FNV-1a hash of the canonical text form; embedded in model files so a
    /// model trained against one schema is rejected by another.
    std::uint64_t hash() const;
    std::string canonical_string() const;

    /// The 4-variable / 4-criteria color-fading ozonation process.
    static ProcessSchema ozonation();

private:
    std::vector<Variable> variables_;
    std::vector<std::string> criteria_;
};

ProcessSchema load_schema_file(const std::string& path);
void save_schema_file(const ProcessSchema& schema, const std::string& path);

}  // namespace procopt
