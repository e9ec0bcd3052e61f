// volume.hpp - dense 3D scalar volumes and label masks.
#pragma once

#include <cstdint>
#include <vector>

#include "gradreg/types.hpp"

namespace gradreg {

// Scalar intensity grid. Linear order is x-fastest: index = x + nx*(y + ny*z).
// Volumes are treated as immutable values once constructed; every operation
// returns a new volume.
struct Volume3D {
    Dims3 dims;
    Vec3d spacing{1.0, 1.0, 1.0};  // millimeters
    std::vector<double> data;      // dims.total() entries, all finite

    static Volume3D zeros(Dims3 d) {
        Volume3D v;
        v.dims = d;
        v.data.assign(d.total(), 0.0);
        return v;
    }

    double& at(int x, int y, int z) { return data[dims.index(x, y, z)]; }
    double at(int x, int y, int z) const { return data[dims.index(x, y, z)]; }

    // Trilinear sample at a continuous position in voxel coordinates.
    // Positions outside the grid are clamped to the edge.
    double sample(double x, double y, double z) const;

    // Throws shape_error / data_error if the size or finiteness invariant is broken.
    void validate(const char* what = "Volume3D") const;
};

// Per-voxel non-negative integer labels, 0 = background. Dims must match the
// paired volume exactly.
struct LabelMask {
    Dims3 dims;
    std::vector<std::int32_t> data;

    static LabelMask zeros(Dims3 d) {
        LabelMask m;
        m.dims = d;
        m.data.assign(d.total(), 0);
        return m;
    }

    std::int32_t& at(int x, int y, int z) { return data[dims.index(x, y, z)]; }
    std::int32_t at(int x, int y, int z) const { return data[dims.index(x, y, z)]; }
};

// Affine rescale to [0,1]. Constant volumes map to all-zeros.
// Idempotent and order-preserving.
Volume3D normalize_intensity(const Volume3D& vol);

std::pair<double, double> intensity_range(const Volume3D& vol);

}  // namespace gradreg
