// Copyright (c) 2026 The rolefit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rolefit/errors.hpp"
#include "rolefit/matrix.hpp"

namespace rolefit {

/// Named weight tensor with its gradient buffer. grad always matches the
/// value shape; frozen tensors keep trainable = false and are never updated.
struct Parameter {
    std::string name;
    Matrix value;
    Matrix grad;
    bool trainable = true;

    Parameter() = default;
    Parameter(std::string n, Matrix v, bool train = true)
        : name(std::move(n)), value(std::move(v)), grad(value.rows(), value.cols()),
          trainable(train) {}

    void zero_grad() { grad.fill(0.0); }
};

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// First/second moment buffers, one pair per parameter, indexed in step order.
class AdamState {
public:
    void ensure(const std::vector<Parameter>& params) {
        if (m_.size() == params.size()) return;
        m_.clear();
        v_.clear();
        for (const Parameter& p : params) {
            m_.emplace_back(p.value.rows(), p.value.cols());
            v_.emplace_back(p.value.rows(), p.value.cols());
        }
    }

    Matrix& m(std::size_t i) { return m_[i]; }
    Matrix& v(std::size_t i) { return v_[i]; }

private:
    std::vector<Matrix> m_;
    std::vector<Matrix> v_;
};

/// One Adam update over every trainable parameter. step is 1-based and drives
/// the bias correction. Throws DivergenceError naming the parameter on a
/// non-finite gradient.
inline void adam_step(std::vector<Parameter>& params, AdamState& state,
                      const AdamConfig& config, std::size_t step) {
    if (step < 1) throw ConfigError("adam_step: step must be >= 1");
    state.ensure(params);
    const double bc1 = 1.0 - std::pow(config.beta1, static_cast<double>(step));
    const double bc2 = 1.0 - std::pow(config.beta2, static_cast<double>(step));
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        Parameter& p = params[pi];
        if (!p.trainable) continue;
        Matrix& m = state.m(pi);
        Matrix& v = state.v(pi);
        for (std::size_t i = 0; i < p.value.size(); ++i) {
            const double g = p.grad[i];
            if (!std::isfinite(g)) {
                throw DivergenceError("adam_step: non-finite gradient in parameter '" +
                                      p.name + "'");
            }
            m[i] = config.beta1 * m[i] + (1.0 - config.beta1) * g;
            v[i] = config.beta2 * v[i] + (1.0 - config.beta2) * g * g;
            const double mhat = m[i] / bc1;
            const double vhat = v[i] / bc2;
            p.value[i] -= config.learning_rate * mhat / (std::sqrt(vhat) + config.epsilon);
        }
    }
}

}  // namespace rolefit
