#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "opmode/kinematics.hpp"

namespace opmode::mnn {

using kinematics::kNumBins;
using kinematics::OpModeDistribution;

inline constexpr std::size_t kModules = 4;
inline constexpr std::array<const char*, kModules> kModuleNames = {"brake_idle", "low", "moderate", "high"};
inline constexpr std::array<std::size_t, kModules> kHeadWidths = {2, 6, 9, 6};
inline constexpr std::size_t kShared1 = 128;
inline constexpr std::size_t kShared2 = 64;
inline constexpr std::size_t kModuleHidden = 32;

/// A dense layer inside the flat parameter vector. Weights are row-major,
/// out x in, followed by `out` biases.
struct Layer {
  std::string name;
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t offset = 0;

  std::size_t weight(std::size_t o, std::size_t i) const { return offset + o * in + i; }
  std::size_t bias(std::size_t o) const { return offset + out * in + o; }
  std::size_t size() const { return out * (in + 1); }
};

/// Shared trunk (two ReLU layers), then per module a ReLU hidden layer and a
/// linear head. Heads are concatenated in bin order before one softmax.
class Architecture {
 public:
  explicit Architecture(std::size_t input_dim);

  std::size_t input_dim() const { return input_dim_; }
  std::size_t num_params() const { return num_params_; }
  const Layer& shared1() const { return layers_[0]; }
  const Layer& shared2() const { return layers_[1]; }
  const Layer& hidden(std::size_t m) const { return layers_[2 + m]; }
  const Layer& head(std::size_t m) const { return layers_[2 + kModules + m]; }
  const std::vector<Layer>& layers() const { return layers_; }

  /// First output (bin index) produced by module m's head.
  static std::size_t head_offset(std::size_t m);
  /// Module whose head produces bin index b.
  static std::size_t module_of_bin(std::size_t b);

 private:
  std::size_t input_dim_;
  std::size_t num_params_ = 0;
  std::vector<Layer> layers_;
};

struct Model {
  Architecture arch{1};
  std::vector<double> params;
  std::string schema_hash;
};

/// Fan-in uniform weights in ±sqrt(6 / fan_in), zero biases.
Model init(std::size_t input_dim, std::uint64_t seed);

/// Concatenated head outputs before the softmax.
std::array<double, kNumBins> logits(const Model& model, std::span<const double> x);
std::array<double, kNumBins> softmax(const std::array<double, kNumBins>& z);
OpModeDistribution forward(const Model& model, std::span<const double> x);

/// (1/23) * sum of squared differences.
double loss(const OpModeDistribution& pred, const OpModeDistribution& target);

/// Row-major matrix of encoded inputs.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

/// Adds the gradient of one sample's loss to `grad` and returns the loss.
double accumulate_sample_gradient(const Model& model, std::span<const double> x, const OpModeDistribution& target,
                                  std::span<double> grad);

/// Mean gradient and mean loss over the selected rows. Per-sample gradients
/// are computed in parallel and summed in row order, so the result does not
/// depend on the thread count.
double batch_gradient(const Model& model, const Matrix& x, std::span<const OpModeDistribution> targets,
                      std::span<const std::size_t> rows, std::vector<double>& grad);

std::vector<OpModeDistribution> predict_batch(const Model& model, const Matrix& x);

namespace serial {
double batch_gradient(const Model& model, const Matrix& x, std::span<const OpModeDistribution> targets,
                      std::span<const std::size_t> rows, std::vector<double>& grad);
std::vector<OpModeDistribution> predict_batch(const Model& model, const Matrix& x);
}  // namespace serial

struct TrainConfig {
  double lr = 0.001;
  int epochs = 500;
  std::size_t batch_size = 32;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::uint64_t seed = 1;

  void validate() const;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t step = 0;
};

/// One bias-corrected Adam update. Throws RuntimeFailure on a non-finite gradient.
void adam_step(std::span<double> params, std::span<const double> grad, AdamState& state, const TrainConfig& cfg);

struct EpochLoss {
  int epoch = 0;
  double train_loss = 0.0;  // mean over the epoch's batches, before each update
  double test_loss = 0.0;   // whole test set after the epoch; NaN without a test set
};

struct TrainResult {
  Model model;
  AdamState adam;
  std::vector<EpochLoss> history;
};

/// Full training run from init(cfg.seed). Throws RuntimeFailure when the loss
/// becomes non-finite, naming the epoch.
TrainResult train(const Matrix& x_train, std::span<const OpModeDistribution> y_train, const Matrix& x_test,
                  std::span<const OpModeDistribution> y_test, const TrainConfig& cfg,
                  const std::function<void(const EpochLoss&)>& on_epoch = {});

double mean_loss(const Model& model, const Matrix& x, std::span<const OpModeDistribution> targets);

std::string format_weights_json(const Model& model, const AdamState& adam);
/// Throws ValidationError on malformed or truncated input, inconsistent layer
/// sizes, or when `expected_schema_hash` is non-empty and differs.
std::pair<Model, AdamState> parse_weights_json(const std::string& text, const std::string& origin,
                                               const std::string& expected_schema_hash = "");
void save_weights(const std::filesystem::path& path, const Model& model, const AdamState& adam);
std::pair<Model, AdamState> load_weights(const std::filesystem::path& path,
                                         const std::string& expected_schema_hash = "");

std::string format_history_csv(const std::vector<EpochLoss>& history);

}  // namespace opmode::mnn
