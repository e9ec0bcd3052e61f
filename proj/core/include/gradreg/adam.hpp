// adam.hpp - first-order moment-based optimizer state.
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "gradreg/types.hpp"

namespace gradreg {

// Plain Adam with optional per-component step clamping. One state drives one
// flat parameter vector; the bias-corrected step count ticks once per update.
struct AdamState {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double step_clamp = 0.0;  // max |update| per component; 0 disables

    long t = 0;
    std::vector<double> m, v;

    void init(std::size_t n) {
        m.assign(n, 0.0);
        v.assign(n, 0.0);
        t = 0;
    }

    void update(std::span<double> params, std::span<const double> grad) {
        if (m.size() != params.size()) init(params.size());
        ++t;
        const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(t));
        const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(t));
        for (std::size_t i = 0; i < params.size(); ++i) {
            m[i] = beta1 * m[i] + (1.0 - beta1) * grad[i];
            v[i] = beta2 * v[i] + (1.0 - beta2) * grad[i] * grad[i];
            const double mhat = m[i] / bc1;
            const double vhat = v[i] / bc2;
            double step = lr * mhat / (std::sqrt(vhat) + eps);
            if (step_clamp > 0.0) {
                if (step > step_clamp) step = step_clamp;
                if (step < -step_clamp) step = -step_clamp;
            }
            params[i] -= step;
        }
    }
};

}  // namespace gradreg
