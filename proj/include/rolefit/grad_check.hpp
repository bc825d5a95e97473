// Copyright (c) 2026 The rolefit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rolefit/adam.hpp"
#include "rolefit/rng.hpp"

namespace rolefit {

struct GradCheckResult {
    double max_rel_error = 0.0;
    // Worst coordinate, for diagnostics.
    std::string worst_param;
    std::size_t worst_index = 0;
    double worst_analytic = 0.0;
    double worst_numeric = 0.0;
    std::size_t coords_checked = 0;
};

struct GradCheckOptions {
    double epsilon = 1e-5;
    // Cap on coordinates checked per parameter; 0 means every coordinate.
    std::size_t max_coords_per_param = 0;
    std::uint64_t seed = 0;
};

/// Central-difference gradient check. `loss` must be a deterministic function
/// of the current parameter values; `params` must already hold the analytic
/// gradients for the same values. Relative error per coordinate is
/// |analytic - numeric| / max(1e-8, |analytic| + |numeric|).
inline GradCheckResult grad_check(const std::function<double()>& loss,
                                  std::vector<Parameter>& params,
                                  const GradCheckOptions& options = {}) {
    if (options.epsilon <= 0.0) throw ConfigError("grad_check: epsilon must be > 0");
    GradCheckResult result;
    Rng rng(mix_seed(options.seed, hash_name("grad_check")));
    for (Parameter& p : params) {
        if (!p.trainable) continue;
        std::vector<std::size_t> coords(p.value.size());
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i;
        if (options.max_coords_per_param != 0 &&
            coords.size() > options.max_coords_per_param) {
            rng.shuffle(coords);
            coords.resize(options.max_coords_per_param);
        }
        for (std::size_t i : coords) {
            const double saved = p.value[i];
            p.value[i] = saved + options.epsilon;
            const double up = loss();
            p.value[i] = saved - options.epsilon;
            const double down = loss();
            p.value[i] = saved;
            const double numeric = (up - down) / (2.0 * options.epsilon);
            const double analytic = p.grad[i];
            const double denom = std::max(1e-8, std::abs(analytic) + std::abs(numeric));
            const double rel = std::abs(analytic - numeric) / denom;
            ++result.coords_checked;
            if (rel > result.max_rel_error) {
                result.max_rel_error = rel;
                result.worst_param = p.name;
                result.worst_index = i;
                result.worst_analytic = analytic;
                result.worst_numeric = numeric;
            }
        }
    }
    return result;
}

}  // namespace rolefit
