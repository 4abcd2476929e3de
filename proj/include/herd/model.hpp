#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "herd/error.hpp"

namespace herd {

// Spin values are {-1,+1} end to end; {0,1} inputs are converted at the I/O
// boundary.
using Spin = std::int8_t;
using SpinVector = std::vector<Spin>;

// Canonical index of a spin configuration: unit 0 is the most significant
// bit, spin +1 maps to bit 1. Index comparison therefore equals
// lexicographic comparison of the spins with -1 < +1, and index 0 is the
// all-(-1) state. All "lowest index" tie-breaks refer to this order.
int spin_index(std::span<const Spin> spins);
SpinVector index_to_spins(int index, int units);

// ---------------------------------------------------------------------------
// Enumerated generic model: an explicit table of feature values over a finite
// joint state space. Joint enumeration is visible-major: state (v, h) has
// joint index v * hidden_count + h.
// ---------------------------------------------------------------------------

struct EnumState {
  int visible = 0;
  int hidden = 0;
  bool operator==(const EnumState&) const = default;
};

class EnumeratedModel {
 public:
  using VisibleState = int;
  using HiddenState = int;
  using JointState = EnumState;

  EnumeratedModel() = default;
  // feature_matrix is row-major (visible_count * hidden_count) x
  // feature_count; every entry must be finite.
  EnumeratedModel(int visible_count, int hidden_count, int feature_count,
                  std::vector<double> feature_matrix);

  int visible_count() const { return visible_count_; }
  int hidden_count() const { return hidden_count_; }
  int joint_count() const { return visible_count_ * hidden_count_; }
  int feature_count() const { return feature_count_; }

  int joint_index(const EnumState& s) const {
    return s.visible * hidden_count_ + s.hidden;
  }
  EnumState state_from_joint(int j) const {
    return {j / hidden_count_, j % hidden_count_};
  }

  std::span<const double> features_at(int joint) const {
    return {feature_matrix_.data() +
                static_cast<std::size_t>(joint) * feature_count_,
            static_cast<std::size_t>(feature_count_)};
  }

  // Optional per-visible-state labels (spin rows for converted models, grid
  // coordinates for function-grid models); used by sample exporters.
  const std::vector<std::vector<double>>& visible_labels() const {
    return visible_labels_;
  }
  void set_visible_labels(std::vector<std::vector<double>> labels);

 private:
  int visible_count_ = 0;
  int hidden_count_ = 1;
  int feature_count_ = 0;
  std::vector<double> feature_matrix_;
  std::vector<std::vector<double>> visible_labels_;
};

// ---------------------------------------------------------------------------
// Restricted Boltzmann machine over spins. Feature layout, fixed so that rate
// filter export can slice the pairwise block of one hidden unit:
//   [0, D)            visible biases   g = x_j
//   [D, D+K)          hidden biases    g = z_i
//   [D+K, D+K+D*K)    pairwise         g = z_i * x_j, hidden-major (i outer)
// ---------------------------------------------------------------------------

struct RbmState {
  SpinVector visible;
  SpinVector hidden;
  bool operator==(const RbmState&) const = default;
};

class RbmModel {
 public:
  using VisibleState = SpinVector;
  using HiddenState = SpinVector;
  using JointState = RbmState;

  RbmModel() = default;
  RbmModel(int visible_units, int hidden_units);

  int visible_units() const { return visible_units_; }
  int hidden_units() const { return hidden_units_; }
  int feature_count() const {
    return visible_units_ + hidden_units_ + visible_units_ * hidden_units_;
  }

  int visible_bias_index(int j) const { return j; }
  int hidden_bias_index(int i) const { return visible_units_ + i; }
  int pair_index(int i, int j) const {
    return visible_units_ + hidden_units_ + i * visible_units_ + j;
  }

 private:
  int visible_units_ = 0;
  int hidden_units_ = 0;
};

// ---------------------------------------------------------------------------
// Datasets: N visible configurations. Entries are validated at load time.
// ---------------------------------------------------------------------------

template <class Model>
struct Dataset {
  std::vector<typename Model::VisibleState> cases;
  std::size_t size() const { return cases.size(); }
  bool empty() const { return cases.empty(); }
};

using SpinDataset = Dataset<RbmModel>;
using IndexDataset = Dataset<EnumeratedModel>;

void validate_dataset(const RbmModel& model, const SpinDataset& data);
void validate_dataset(const EnumeratedModel& model, const IndexDataset& data);

// ---------------------------------------------------------------------------
// Feature evaluation and scores. score(w, s) = sum_a w_a * g_a(s); the energy
// of a state is -score.
// ---------------------------------------------------------------------------

std::vector<double> feature_vector(const EnumeratedModel& model,
                                   const EnumState& s);
std::vector<double> feature_vector(const RbmModel& model, const RbmState& s);

// Adds scale * g(s) into acc (length feature_count).
void add_features(const EnumeratedModel& model, const EnumState& s,
                  double scale, std::span<double> acc);
void add_features(const RbmModel& model, const RbmState& s, double scale,
                  std::span<double> acc);

double score(const EnumeratedModel& model, std::span<const double> w,
             const EnumState& s);
double score(const RbmModel& model, std::span<const double> w,
             const RbmState& s);

// ---------------------------------------------------------------------------
// Conversions and builders.
// ---------------------------------------------------------------------------

// Exhaustive conversion of an RBM to the enumerated table (2^D * 2^K rows in
// canonical spin-index order, visible-major). Requires D + K <= 20.
EnumeratedModel rbm_to_enumerated(const RbmModel& model);

// Visible index of a spin vector / dataset under the canonical order used by
// rbm_to_enumerated.
IndexDataset to_index_dataset(const RbmModel& model, const SpinDataset& data);

// Fully observed two-feature model on a grid over [-pi, pi] with features
// (sin x, cos x). grid_points == 0 selects the default unit-step grid
// {-pi, -pi+1, ...} truncated at pi (7 points); otherwise grid_points >= 3
// evenly spaced points including both endpoints.
EnumeratedModel make_sin_cos_model(int grid_points = 0);

// One case per grid point: the uniform distribution over the grid.
IndexDataset uniform_grid_dataset(const EnumeratedModel& model);

// Pixel binarization: +1 iff pixel/maxval - threshold > 0, else -1 (exact
// threshold maps to -1).
SpinVector binarize_grayscale(std::span<const int> pixels, int maxval = 256,
                              double threshold = 0.2);

}  // namespace herd
