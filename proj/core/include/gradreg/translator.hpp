// translator.hpp - parametric intensity translation between modalities.
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gradreg/adam.hpp"
#include "gradreg/losses.hpp"
#include "gradreg/volume.hpp"

namespace gradreg {

// Maps the warped floating volume into the reference modality's intensity
// space. Two kinds:
//
//   lut  - piecewise-linear map over [0,1] with K knots at strictly
//          increasing positions; deterministic, good test vehicle.
//   mlp  - per-voxel network over six local features
//          (intensity, 3 normalized-gradient components, local 3^3 mean,
//          local 3^3 std), one tanh hidden layer, linear output.
//
// Feature normalization constants are fixed at construction and serialized
// with the model, so translate is a pure function of (model, volume).
struct TranslatorModel {
    enum class Kind { lut, mlp };
    static constexpr int kFeatureCount = 6;

    Kind kind = Kind::mlp;

    // lut parameters
    std::vector<double> knot_x;  // strictly increasing in [0,1]
    std::vector<double> knot_y;  // unconstrained values

    // mlp parameters
    int hidden = 16;
    std::vector<double> w1;  // hidden x kFeatureCount, row-major
    std::vector<double> b1;  // hidden
    std::vector<double> w2;  // hidden
    double b2 = 0.0;

    // feature pipeline constants (mlp)
    double feature_epsilon = 1e-6;
    std::array<double, kFeatureCount> feat_shift{};
    std::array<double, kFeatureCount> feat_scale{};

    // Identity map: K uniform knots with y = x.
    static TranslatorModel identity_lut(int knots = 32);
    // Near-identity mlp: one hidden unit carries the intensity through a
    // shallow tanh, the rest start with small seeded weights.
    static TranslatorModel make_mlp(int hidden, std::uint64_t seed);

    std::size_t param_count() const;
    void get_params(std::vector<double>& out) const;
    void set_params(std::span<const double> p);
    void validate() const;
};

// Per-voxel deterministic translation of a warped floating volume.
Volume3D translate(const TranslatorModel& model, const Volume3D& F_warped);

// dL/dF_warped given dL/dF_translated: the exact adjoint through the value
// path and, for mlp, through every feature (normalized gradient, local mean,
// local std).
std::vector<double> translate_input_gradient(const TranslatorModel& model,
                                             const Volume3D& F_warped,
                                             std::span<const double> upstream);

// dL/dparams given dL/dF_translated, laid out as get_params.
std::vector<double> translate_param_gradient(const TranslatorModel& model,
                                             const Volume3D& F_warped,
                                             std::span<const double> upstream);

struct TranslatorTrainState {
    AdamState adam;  // lr 1e-4, decays 0.9/0.999, guard 1e-8 by default
};

struct TranslatorStepResult {
    double loss = 0.0;
    double lg_term = 0.0;
    double l1_term = 0.0;
};

// One Adam update of the model against translator_loss back-propagated
// through translate. Throws divergence_error (from registration.hpp users'
// perspective: a config_error-independent numeric failure) when the loss is
// not finite.
TranslatorStepResult translator_step(TranslatorModel& model, const Volume3D& F_warped,
                                     const Volume3D& R, const LossConfig& cfg,
                                     TranslatorTrainState& state);

// JSON round-trip of the model (kind, parameters, feature constants).
void save_translator(const TranslatorModel& model, const std::filesystem::path& path);
TranslatorModel load_translator(const std::filesystem::path& path);

}  // namespace gradreg
