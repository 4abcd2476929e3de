#include "herd/model.hpp"

#include <cmath>
#include <numbers>

namespace herd {

int spin_index(std::span<const Spin> spins) {
  int index = 0;
  for (Spin s : spins) index = (index << 1) | (s > 0 ? 1 : 0);
  return index;
}

SpinVector index_to_spins(int index, int units) {
  SpinVector spins(static_cast<std::size_t>(units));
  for (int j = 0; j < units; ++j) {
    const int bit = (index >> (units - 1 - j)) & 1;
    spins[static_cast<std::size_t>(j)] = bit ? Spin{1} : Spin{-1};
  }
  return spins;
}

EnumeratedModel::EnumeratedModel(int visible_count, int hidden_count,
                                 int feature_count,
                                 std::vector<double> feature_matrix)
    : visible_count_(visible_count),
      hidden_count_(hidden_count),
      feature_count_(feature_count),
      feature_matrix_(std::move(feature_matrix)) {
  if (visible_count_ < 1 || hidden_count_ < 1 || feature_count_ < 1)
    throw DataError("enumerated model: counts must be positive");
  const std::size_t expected = static_cast<std::size_t>(visible_count_) *
                               static_cast<std::size_t>(hidden_count_) *
                               static_cast<std::size_t>(feature_count_);
  if (feature_matrix_.size() != expected)
    throw DataError("enumerated model: feature matrix size mismatch");
  for (double g : feature_matrix_)
    if (!std::isfinite(g))
      throw DataError("enumerated model: non-finite feature value");
}

void EnumeratedModel::set_visible_labels(
    std::vector<std::vector<double>> labels) {
  if (static_cast<int>(labels.size()) != visible_count_)
    throw DataError("enumerated model: label count mismatch");
  visible_labels_ = std::move(labels);
}

RbmModel::RbmModel(int visible_units, int hidden_units)
    : visible_units_(visible_units), hidden_units_(hidden_units) {
  if (visible_units_ < 1 || hidden_units_ < 0)
    throw DataError("rbm model: need at least one visible unit");
}

void validate_dataset(const RbmModel& model, const SpinDataset& data) {
  for (const SpinVector& x : data.cases) {
    if (static_cast<int>(x.size()) != model.visible_units())
      throw DataError("dataset: case dimension does not match model");
    for (Spin s : x)
      if (s != 1 && s != -1) throw DataError("dataset: entries must be +/-1");
  }
}

void validate_dataset(const EnumeratedModel& model, const IndexDataset& data) {
  for (int v : data.cases)
    if (v < 0 || v >= model.visible_count())
      throw DataError("dataset: visible index out of range");
}

std::vector<double> feature_vector(const EnumeratedModel& model,
                                   const EnumState& s) {
  auto row = model.features_at(model.joint_index(s));
  return {row.begin(), row.end()};
}

std::vector<double> feature_vector(const RbmModel& model, const RbmState& s) {
  std::vector<double> g(static_cast<std::size_t>(model.feature_count()), 0.0);
  add_features(model, s, 1.0, g);
  return g;
}

void add_features(const EnumeratedModel& model, const EnumState& s,
                  double scale, std::span<double> acc) {
  auto row = model.features_at(model.joint_index(s));
  for (std::size_t a = 0; a < row.size(); ++a) acc[a] += scale * row[a];
}

void add_features(const RbmModel& model, const RbmState& s, double scale,
                  std::span<double> acc) {
  const int D = model.visible_units();
  const int K = model.hidden_units();
  if (static_cast<int>(s.visible.size()) != D ||
      static_cast<int>(s.hidden.size()) != K)
    throw DataError("rbm state dimension mismatch");
  for (int j = 0; j < D; ++j) acc[static_cast<std::size_t>(j)] += scale * s.visible[static_cast<std::size_t>(j)];
  for (int i = 0; i < K; ++i)
    acc[static_cast<std::size_t>(D + i)] += scale * s.hidden[static_cast<std::size_t>(i)];
  for (int i = 0; i < K; ++i) {
    const double zi = s.hidden[static_cast<std::size_t>(i)];
    double* block = acc.data() + model.pair_index(i, 0);
    for (int j = 0; j < D; ++j)
      block[j] += scale * zi * s.visible[static_cast<std::size_t>(j)];
  }
}

double score(const EnumeratedModel& model, std::span<const double> w,
             const EnumState& s) {
  if (static_cast<int>(w.size()) != model.feature_count())
    throw DataError("weight length does not match model feature count");
  auto row = model.features_at(model.joint_index(s));
  double acc = 0.0;
  for (std::size_t a = 0; a < row.size(); ++a) acc += w[a] * row[a];
  return acc;
}

double score(const RbmModel& model, std::span<const double> w,
             const RbmState& s) {
  const int D = model.visible_units();
  const int K = model.hidden_units();
  if (static_cast<int>(w.size()) != model.feature_count())
    throw DataError("weight length does not match model feature count");
  if (static_cast<int>(s.visible.size()) != D ||
      static_cast<int>(s.hidden.size()) != K)
    throw DataError("rbm state dimension mismatch");
  double acc = 0.0;
  for (int j = 0; j < D; ++j) acc += w[static_cast<std::size_t>(j)] * s.visible[static_cast<std::size_t>(j)];
  for (int i = 0; i < K; ++i) {
    const double zi = s.hidden[static_cast<std::size_t>(i)];
    acc += w[static_cast<std::size_t>(D + i)] * zi;
    const double* block = w.data() + model.pair_index(i, 0);
    double pair = 0.0;
    for (int j = 0; j < D; ++j) pair += block[j] * s.visible[static_cast<std::size_t>(j)];
    acc += zi * pair;
  }
  return acc;
}

EnumeratedModel rbm_to_enumerated(const RbmModel& model) {
  const int D = model.visible_units();
  const int K = model.hidden_units();
  if (D + K > 20) throw DataError("rbm_to_enumerated: 2^(D+K) exceeds cap");
  const int V = 1 << D;
  const int H = 1 << K;
  const int F = model.feature_count();
  std::vector<double> matrix(static_cast<std::size_t>(V) * H * F);
  std::vector<std::vector<double>> labels;
  labels.reserve(static_cast<std::size_t>(V));
  for (int v = 0; v < V; ++v) {
    const SpinVector x = index_to_spins(v, D);
    labels.emplace_back(x.begin(), x.end());
    for (int h = 0; h < H; ++h) {
      RbmState s{x, index_to_spins(h, K)};
      const std::size_t base =
          (static_cast<std::size_t>(v) * H + static_cast<std::size_t>(h)) * F;
      std::span<double> row(matrix.data() + base, static_cast<std::size_t>(F));
      add_features(model, s, 1.0, row);
    }
  }
  EnumeratedModel out(V, H, F, std::move(matrix));
  out.set_visible_labels(std::move(labels));
  return out;
}

IndexDataset to_index_dataset(const RbmModel& model, const SpinDataset& data) {
  validate_dataset(model, data);
  IndexDataset out;
  out.cases.reserve(data.cases.size());
  for (const SpinVector& x : data.cases) out.cases.push_back(spin_index(x));
  return out;
}

EnumeratedModel make_sin_cos_model(int grid_points) {
  constexpr double pi = std::numbers::pi;
  std::vector<double> xs;
  if (grid_points == 0) {
    // Unit-step grid from -pi, keeping points <= pi.
    for (double x = -pi; x <= pi; x += 1.0) xs.push_back(x);
  } else {
    if (grid_points < 3) throw ConfigError("sin/cos grid needs >= 3 points");
    for (int k = 0; k < grid_points; ++k)
      xs.push_back(-pi + 2.0 * pi * k / (grid_points - 1));
  }
  const int V = static_cast<int>(xs.size());
  std::vector<double> matrix;
  matrix.reserve(static_cast<std::size_t>(V) * 2);
  std::vector<std::vector<double>> labels;
  for (double x : xs) {
    matrix.push_back(std::sin(x));
    matrix.push_back(std::cos(x));
    labels.push_back({x});
  }
  EnumeratedModel out(V, 1, 2, std::move(matrix));
  out.set_visible_labels(std::move(labels));
  return out;
}

IndexDataset uniform_grid_dataset(const EnumeratedModel& model) {
  IndexDataset data;
  data.cases.resize(static_cast<std::size_t>(model.visible_count()));
  for (int v = 0; v < model.visible_count(); ++v)
    data.cases[static_cast<std::size_t>(v)] = v;
  return data;
}

SpinVector binarize_grayscale(std::span<const int> pixels, int maxval,
                              double threshold) {
  if (maxval <= 0) throw DataError("binarize: maxval must be positive");
  SpinVector out(pixels.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const double v = static_cast<double>(pixels[i]) / maxval - threshold;
    out[i] = v > 0.0 ? Spin{1} : Spin{-1};
  }
  return out;
}

}  // namespace herd
