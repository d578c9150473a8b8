#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "procopt/dataset.hpp"

namespace procopt {

enum class MaxFeatures {
    all,     // every input variable is a split candidate ('auto')
    sqrt_n,  // ceil(sqrt(n)) variables drawn per node ('sqrt')
};

std::string to_string(MaxFeatures mf);
MaxFeatures max_features_from_string(const std::string& s);

struct ForestHyperParams {
    bool bootstrap = true;
    int n_estimators = 200;
    int min_samples_leaf = 1;
    int min_samples_split = 2;
    std::optional<int> max_depth;  // unset = unlimited
    MaxFeatures max_features = MaxFeatures::all;
};

/// Binary regression tree stored as flat node arrays. split_var == -1 marks
/// a leaf whose `value` is the prediction (mean of resident training
/// targets); otherwise `value` is the split threshold and samples with
/// x[split_var] < value go left.
struct Tree {
    struct Node {
        int split_var = -1;
        double value = 0.0;
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;

    double predict(std::span<const double> x) const;
    int depth() const;
};

/// Bagged regression trees for one criterion; prediction is the unweighted
/// mean over trees.
struct RandomForestModel {
    ForestHyperParams hp;
    std::vector<Tree> trees;
    std::string criterion_name;
    std::uint64_t schema_hash = 0;
    std::size_t n_inputs = 0;

    double predict(std::span<const double> inputs) const;
};

/// Greedy top-down CART growth minimizing weighted child variance of the
/// targets; thresholds are midpoints between consecutive distinct values of
/// the candidate variable.
Tree fit_tree(const std::vector<std::vector<double>>& X,
              const std::vector<double>& y, const ForestHyperParams& hp,
              std::uint64_t seed);

RandomForestModel fit_forest(const std::vector<std::vector<double>>& X,
                             const std::vector<double>& y,
                             const ForestHyperParams& hp, std::uint64_t seed,
                             std::string criterion_name = "",
                             std::uint64_t schema_hash = 0);

struct EvalMetrics {
    /// Unset when the test targets are all equal (the ratio has no meaning).
    std::optional<double> r2;
    double mae = 0.0;
    /// Percent error averaged over rows with nonzero target; NaN when every
    /// target is zero.
    double mape = 0.0;
};

EvalMetrics evaluate(const RandomForestModel& model,
                     const std::vector<std::vector<double>>& X_test,
                     const std::vector<double>& y_test);

/// The stock tuning grid: 2 x 10 x 3 x 3 x 11 x 2 = 3960 combinations.
std::vector<ForestHyperParams> default_hyperparameter_grid();

struct GridSearchResult {
    ForestHyperParams best;
    std::size_t best_index = 0;
    /// Mean held-out MSE per grid entry, in grid order.
    std::vector<double> cv_mse;
};

/// K-fold cross validation over the grid; folds come from one seeded shuffle
/// and are shared by every hyperparameter combination. Ties on mean MSE keep
/// the earliest grid entry.
GridSearchResult grid_search_cv(const std::vector<std::vector<double>>& X,
                                const std::vector<double>& y,
                                const std::vector<ForestHyperParams>& grid,
                                int folds, std::uint64_t seed);

void save_model(const RandomForestModel& model, const std::string& path);
RandomForestModel load_model(const std::string& path);

/// Reads a hyperparameter grid from CSV with columns
/// bootstrap,n_estimators,min_samples_leaf,min_samples_split,max_depth,
/// max_features (max_depth accepts "none"). One combination per row.
std::vector<ForestHyperParams> load_grid_file(const std::string& path);

/// Extracts column i of the dataset outputs.
std::vector<double> target_column(const ExperienceDataset& dataset,
                                  std::size_t i);

}  // namespace procopt
