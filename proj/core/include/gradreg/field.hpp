// field.hpp - dense displacement fields, warping and field calculus.
#pragma once

#include <span>
#include <vector>

#include "gradreg/types.hpp"
#include "gradreg/volume.hpp"

namespace gradreg {

// Dense per-voxel displacement u(p) in voxel units; the warped sample location
// is p + u(p). Components are stored as three contiguous planes (all ux, then
// all uy, then all uz), each in x-fastest order — the same layout as the file
// format. The struct doubles as the container for per-voxel 3-vector gradients
// of a loss with respect to the field.
struct DisplacementField {
    Dims3 dims;
    std::vector<double> comp;  // 3 * dims.total()

    static DisplacementField zeros(Dims3 d) {
        DisplacementField f;
        f.dims = d;
        f.comp.assign(3 * d.total(), 0.0);
        return f;
    }

    std::span<double> plane(int c) {
        const std::size_t n = dims.total();
        return {comp.data() + c * n, n};
    }
    std::span<const double> plane(int c) const {
        const std::size_t n = dims.total();
        return {comp.data() + c * n, n};
    }

    double& u(int c, std::size_t i) { return comp[c * dims.total() + i]; }
    double u(int c, std::size_t i) const { return comp[c * dims.total() + i]; }

    void validate(const char* what = "DisplacementField") const;
};

struct JacobianStats {
    double min_det = 1.0;
    double mean_det = 1.0;
    double fraction_nonpositive = 0.0;  // in [0,1]
};

// out[p] = trilinear sample of F at p + u(p), clamped-edge extension.
Volume3D warp(const Volume3D& F, const DisplacementField& phi);

// Nearest-neighbor warp for categorical labels, same p + u(p) convention.
LabelMask warp_labels(const LabelMask& mask, const DisplacementField& phi);

// Exact adjoint of warp: given dL/dout per voxel, returns dL/du per voxel.
// Derivatives are those of the clamped trilinear interpolant: one-sided in the
// last cell along each axis, zero where the sample position is clamped.
DisplacementField warp_gradient(const Volume3D& F, const DisplacementField& phi,
                                std::span<const double> upstream);

// Sum over voxels of the squared Frobenius norm of the forward-difference
// Jacobian of u. The final plane along each axis contributes a zero
// difference. Returns the value and its exact gradient with respect to u.
struct SmoothnessResult {
    double value = 0.0;
    DisplacementField grad;
};
SmoothnessResult smoothness_loss(const DisplacementField& phi, bool want_grad = true);

// det(I + du/dp) per voxel, central differences interior and one-sided on the
// boundary, aggregated over the volume.
JacobianStats jacobian_stats(const DisplacementField& phi);

// r(p) = inner(p) + outer sampled trilinearly at p + inner(p), so that
// warp(F, compose(outer, inner)) tracks warp(warp(F, outer), inner).
DisplacementField compose(const DisplacementField& outer, const DisplacementField& inner);

// Trilinear resample of each component onto new_dims (align-corner coordinate
// mapping); magnitudes are rescaled by the per-axis dimension ratio since the
// field is stored in voxel units.
DisplacementField upsample_field(const DisplacementField& phi, Dims3 new_dims);

}  // namespace gradreg
