// losses.hpp - similarity metrics and loss terms with analytic gradients.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gradreg/field.hpp"
#include "gradreg/types.hpp"
#include "gradreg/volume.hpp"

namespace gradreg {

struct TranslatorModel;

// Weights and window sizes shared by every loss term.
struct LossConfig {
    double alpha = 1.0;    // smoothness weight in the registration loss
    double beta = 2.0;     // local-gradient weight in the similarity
    double mu = 5.0;       // local-gradient weight in the translator loss
    double lambda = 100.0; // L1 weight in the translator loss
    int lg_window = 7;     // odd, >= 3
    int cc_window = 7;     // odd, >= 3
    double epsilon = 1e-6;     // gradient-normalization guard
    double cc_epsilon = 1e-5;  // variance-product guard in the local CC

    void validate() const;
};

// A scalar loss plus optional per-voxel gradients with respect to the volume
// arguments, in the argument order of the operation that produced it.
struct LossValue {
    double value = 0.0;
    std::vector<double> grad_a;  // empty unless requested
    std::vector<double> grad_b;
};

// Box-summed intensity gradient: per voxel, the sum of central-difference
// gradient vectors over the n^3 neighborhood (one-sided differences and
// truncated boxes at the volume boundary).
DisplacementField local_gradient(const Volume3D& I, int n);

// local_gradient normalized per voxel to g / (|g| + epsilon); the result has
// norm in [0,1) and is exactly zero where the summed gradient vanishes.
DisplacementField normalized_gradient(const Volume3D& I, int n, double epsilon);

// Local-gradient similarity: sum over voxels of |n(R,p) . n(F,p)|.
// Symmetric in its arguments and invariant to intensity negation of either
// one. Gradients are the exact chain through the box sum and normalization.
LossValue lg_similarity(const Volume3D& R, const Volume3D& F, const LossConfig& cfg,
                        bool want_grad_r = false, bool want_grad_f = true);

// Windowed squared cross-correlation: sum over voxels of
// (sum (R-Rbar)(F-Fbar))^2 / (sum (R-Rbar)^2 * sum (F-Fbar)^2 + eps)
// over the truncated window centered at each voxel. Per-window values lie in
// [0,1); windows where either volume is constant contribute zero.
// Gradient is returned with respect to F (grad_b).
LossValue lcc_similarity(const Volume3D& R, const Volume3D& F, int window, double epsilon,
                         bool want_grad_f = true);

// Mean absolute difference with subgradient sign(A-B)/N (zero at ties).
LossValue l1_loss(const Volume3D& A, const Volume3D& B,
                  bool want_grad_a = true, bool want_grad_b = false);

// Histogram mutual information in nats, equal-width bins over each volume's
// [min,max]. Evaluation-only; no gradients.
double mi_metric(const Volume3D& R, const Volume3D& F, int bins);

// Normalized-gradient-field comparison metric: sum over voxels of the squared
// dot product of per-voxel (window 1) normalized gradients. Evaluation-only.
double ngf_metric(const Volume3D& R, const Volume3D& F, double epsilon);

// Full registration objective and its gradient with respect to the field:
//
//   L_T = -LCC(R, F'(phi))/|O| - beta * LG(R, F(phi))/|O| + alpha * smooth(phi)/|O|
//
// where F(phi) = warp(F, phi) and F'(phi) = translate(translator, F(phi)).
// When translator is null the LCC term is dropped (LG-only mode). All terms
// are normalized per voxel so the objective and its gradients are comparable
// across pyramid resolutions. The field gradient is the exact chain through
// the translator's feature pipeline, the trilinear warp and the smoothness
// term.
struct RegistrationLossResult {
    double total = 0.0;
    double lcc_term = 0.0;     // -LCC/|O| contribution (0 when disabled)
    double lg_term = 0.0;      // -beta*LG/|O| contribution
    double smooth_term = 0.0;  // +alpha*smooth/|O| contribution
    DisplacementField grad_phi;
    Volume3D warped;                     // F(phi)
    std::optional<Volume3D> translated;  // F'(phi), present when translator given
};
RegistrationLossResult registration_loss(const Volume3D& R, const Volume3D& F,
                                         const TranslatorModel* translator,
                                         const DisplacementField& phi,
                                         const LossConfig& cfg, bool want_grad = true);

// Translator objective (the generator loss with the adversarial term dropped):
//
//   L_G = -mu * LG(F', F(phi))/|O| + lambda * L1(F', R)
//
// Gradient is returned with respect to F' (grad_a).
struct TranslatorLossResult {
    double total = 0.0;
    double lg_term = 0.0;
    double l1_term = 0.0;
    std::vector<double> grad_translated;
};
TranslatorLossResult translator_loss(const Volume3D& F_translated, const Volume3D& F_warped,
                                     const Volume3D& R, const LossConfig& cfg,
                                     bool want_grad = true);

}  // namespace gradreg
