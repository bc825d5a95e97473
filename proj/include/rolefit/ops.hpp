// Copyright (c) 2026 The rolefit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "rolefit/errors.hpp"

namespace rolefit {

/// Per-channel PReLU slopes for the residual block.
struct PReLUState {
    std::vector<double> alpha;
};

/// out[i] = x[i] if x[i] > 0 else alpha[i] * x[i].
inline std::vector<double> prelu(const std::vector<double>& x, const PReLUState& state) {
    if (x.size() != state.alpha.size()) {
        throw DimensionError("prelu: input length " + std::to_string(x.size()) +
                             " != alpha length " + std::to_string(state.alpha.size()));
    }
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] > 0.0 ? x[i] : state.alpha[i] * x[i];
    }
    return out;
}

struct SoftmaxCrossEntropy {
    double loss;
    std::vector<double> grad;  // softmax(logits) - onehot(target)
};

/// Max-subtracted softmax probabilities.
inline std::vector<double> softmax(const std::vector<double>& logits) {
    std::vector<double> probs(logits.size());
    const double mx = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        probs[i] = std::exp(logits[i] - mx);
        sum += probs[i];
    }
    const double inv = 1.0 / sum;
    for (double& p : probs) p *= inv;
    return probs;
}

/// Cross-entropy of softmax(logits) against a class index, with the gradient
/// with respect to the logits.
inline SoftmaxCrossEntropy softmax_cross_entropy(const std::vector<double>& logits,
                                                 std::size_t target) {
    if (target >= logits.size()) {
        throw IndexError("softmax_cross_entropy: target " + std::to_string(target) +
                         " out of range for " + std::to_string(logits.size()) + " classes");
    }
    const double mx = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    std::vector<double> ex(logits.size());
    for (std::size_t i = 0; i < logits.size(); ++i) {
        ex[i] = std::exp(logits[i] - mx);
        sum += ex[i];
    }
    SoftmaxCrossEntropy out;
    out.loss = std::log(sum) - (logits[target] - mx);
    out.grad.resize(logits.size());
    const double inv = 1.0 / sum;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        out.grad[i] = ex[i] * inv;
    }
    out.grad[target] -= 1.0;
    return out;
}

}  // namespace rolefit
