// types.hpp - shared small types and the error taxonomy.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gradreg {

struct Dims3 {
    int nx = 0, ny = 0, nz = 0;

    std::size_t total() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }
    std::size_t index(int x, int y, int z) const {
        return static_cast<std::size_t>(x) +
               static_cast<std::size_t>(nx) *
                   (static_cast<std::size_t>(y) +
                    static_cast<std::size_t>(ny) * static_cast<std::size_t>(z));
    }
    int axis(int a) const { return a == 0 ? nx : (a == 1 ? ny : nz); }
    int min_axis() const { return nx < ny ? (nx < nz ? nx : nz) : (ny < nz ? ny : nz); }
    bool operator==(const Dims3&) const = default;
};

struct Vec3d {
    double x = 0.0, y = 0.0, z = 0.0;
    bool operator==(const Vec3d&) const = default;
};

// Error taxonomy. The CLI maps these onto exit codes: config/shape/bounds -> 2,
// divergence -> 3, io/format/data -> 4.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& m) : std::runtime_error(m) {}
};
struct format_error : std::runtime_error {
    explicit format_error(const std::string& m) : std::runtime_error(m) {}
};
struct data_error : std::runtime_error {
    explicit data_error(const std::string& m) : std::runtime_error(m) {}
};
struct shape_error : std::runtime_error {
    explicit shape_error(const std::string& m) : std::runtime_error(m) {}
};
struct config_error : std::runtime_error {
    explicit config_error(const std::string& m) : std::runtime_error(m) {}
};
struct bounds_error : std::runtime_error {
    explicit bounds_error(const std::string& m) : std::runtime_error(m) {}
};

inline std::string dims_str(const Dims3& d) {
    return std::to_string(d.nx) + "x" + std::to_string(d.ny) + "x" + std::to_string(d.nz);
}

inline void require_same_dims(const Dims3& a, const Dims3& b, const char* what) {
    if (!(a == b)) {
        throw shape_error(std::string(what) + ": dims mismatch " + dims_str(a) + " vs " + dims_str(b));
    }
}

}  // namespace gradreg
