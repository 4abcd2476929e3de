#pragma once

#include <cstdint>
#include <span>

#include "herd/model.hpp"

namespace herd {

// Largest state count any exhaustive scan will walk.
inline constexpr std::int64_t kDefaultJointCap = std::int64_t{1} << 20;

// Coordinate ascent settings. The sweep order is fixed: ascending coordinate
// index, visible block before hidden block.
struct AscentConfig {
  int max_sweeps = 10;
};

// Tie rules, used consistently by every maximizer (all are invariant under
// positive rescaling of the coefficients):
//   - per-unit signs prefer +1 on an exactly zero pre-activation;
//   - index scans keep the lowest canonical index;
//   - coordinate flips require a strict score increase.

// Best hidden configuration for a fixed visible configuration. For the RBM
// each hidden unit is conditionally independent given x, so the per-unit sign
// of its pre-activation is the exact conditional maximizer.
SpinVector argmax_hidden(const RbmModel& model, std::span<const double> w,
                         const SpinVector& x);
int argmax_hidden(const EnumeratedModel& model, std::span<const double> w,
                  int visible);

// Exact global maximizer of score over the joint space. The RBM overload
// enumerates the smaller layer and fills in the other layer by its
// conditional closed form, which is still the exact global maximum; the cap
// applies to the enumerated layer.
EnumState argmax_joint_exhaustive(const EnumeratedModel& model,
                                  std::span<const double> w,
                                  std::int64_t cap = kDefaultJointCap);
RbmState argmax_joint_exhaustive(const RbmModel& model,
                                 std::span<const double> w,
                                 std::int64_t cap = kDefaultJointCap);

// Greedy local search: single-coordinate moves in fixed order, accepting only
// strict improvements, until a full sweep changes nothing or max_sweeps is
// reached. Never decreases the score. For the enumerated model the two
// coordinates are the visible and hidden indices and a "flip" is an exact
// conditional scan.
RbmState ascend_joint(const RbmModel& model, std::span<const double> w,
                      RbmState init, const AscentConfig& cfg = {});
EnumState ascend_joint(const EnumeratedModel& model, std::span<const double> w,
                       EnumState init, const AscentConfig& cfg = {});

// The data case with the lowest energy E(x_n) = -score(x_n, z*_n), where
// z*_n = argmax_hidden(x_n); ties keep the lowest case index.
template <class Model>
struct LowestEnergyCase {
  int index = 0;
  typename Model::JointState state;
  double energy = 0.0;
};

LowestEnergyCase<RbmModel> lowest_energy_case(const RbmModel& model,
                                              std::span<const double> w,
                                              const SpinDataset& data);
LowestEnergyCase<EnumeratedModel> lowest_energy_case(
    const EnumeratedModel& model, std::span<const double> w,
    const IndexDataset& data);

}  // namespace herd
