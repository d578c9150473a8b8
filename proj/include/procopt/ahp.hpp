#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace procopt {

/// Square pairwise-comparison matrix on Saaty's nine-point scale.
class ComparisonMatrix {
public:
    ComparisonMatrix(std::size_t m, std::vector<double> entries);

    std::size_t size() const { return m_; }
    double at(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }

    /// Reads m rows of m comma-separated entries; fractions like "1/3" are
    /// accepted.
    static ComparisonMatrix from_csv(const std::string& path);

private:
    std::size_t m_;
    std::vector<double> a_;
};

struct Violation {
    enum class Kind { diagonal, reciprocity, scale };
    Kind kind;
    std::size_t i;
    std::size_t j;
    double value;

    std::string describe() const;
};

/// Empty result means the matrix is a valid reciprocal nine-point-scale
/// comparison matrix.
std::vector<Violation> validate(const ComparisonMatrix& matrix);

struct CriteriaWeights {
    std::vector<double> weights;
    std::vector<double> geometric_means;
    double lambda_max = 0.0;
    double ci = 0.0;
    /// Unset when m < 3: the random consistency index is zero there and the
    /// ratio is undefined.
    std::optional<double> cr;
};

/// Row geometric means normalized to weights; lambda_max as the mean of
/// (A w)_i / w_i; CI = (lambda_max - m)/(m - 1); CR = CI / RCI(m).
/// Throws when the matrix does not validate.
CriteriaWeights derive_weights(const ComparisonMatrix& matrix);

/// Saaty's random consistency index; unset where the CR is undefined
/// (m < 3 or beyond the published table).
std::optional<double> random_consistency_index(std::size_t m);

/// Default threshold 0.08. A matrix whose CR is undefined (m < 3) is always
/// consistent and accepted.
bool check_consistency(const CriteriaWeights& weights, double threshold = 0.08);

/// Weighted sum of per-criterion values.
double aggregate_objective(const CriteriaWeights& weights,
                           std::span<const double> criterion_values);

void save_weights_file(const CriteriaWeights& weights,
                       const std::vector<std::string>& criteria,
                       const std::string& path);

struct LoadedWeights {
    std::vector<std::string> criteria;
    CriteriaWeights weights;
};

LoadedWeights load_weights_file(const std::string& path);

}  // namespace procopt
