// Copyright (c) 2026 The rolefit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rolefit/errors.hpp"
#include "rolefit/roles.hpp"
#include "rolefit/vocab.hpp"

namespace rolefit {

/// One event before indexing: an optional lemma per role slot.
using RawEvent = std::array<std::optional<std::string>, kNumRoles>;

/// Builds a RawEvent from (role-label, lemma) pairs. Unknown labels raise a
/// SchemaError naming the label; a role seen twice keeps the first filler.
inline RawEvent make_raw_event(const std::vector<std::pair<std::string, std::string>>& pairs) {
    RawEvent event;
    for (const auto& [label, lemma] : pairs) {
        const auto slot = role_slot(label);
        if (!slot) throw SchemaError("unknown role label: '" + label + "'");
        if (!event[*slot]) event[*slot] = lemma;
    }
    return event;
}

/// One indexed event: a word id per role slot, missing_id for empty slots.
struct Event {
    std::array<std::uint32_t, kNumRoles> words{};

    bool operator==(const Event&) const = default;
};

/// An event plus the slot whose (word, role) pair is predicted. The target
/// slot never holds a MISSING word.
struct TrainingSample {
    Event event;
    std::uint8_t target_slot = 0;

    bool operator==(const TrainingSample&) const = default;
};

/// Known lemma -> its id; unknown lemma -> UNK; absent slot -> MISSING.
inline Event index_event(const RawEvent& raw, const Vocabulary& vocab) {
    Event event;
    for (std::size_t s = 0; s < kNumRoles; ++s) {
        event.words[s] = raw[s] ? vocab.id_of(*raw[s]) : vocab.missing_id();
    }
    return event;
}

/// One sample per slot whose word is present, in slot order.
inline std::vector<TrainingSample> enumerate_targets(const Event& event,
                                                     std::uint32_t missing_id) {
    std::vector<TrainingSample> samples;
    for (std::size_t s = 0; s < kNumRoles; ++s) {
        if (event.words[s] != missing_id) {
            samples.push_back(TrainingSample{event, static_cast<std::uint8_t>(s)});
        }
    }
    return samples;
}

inline std::vector<TrainingSample> enumerate_targets(const Event& event,
                                                     const Vocabulary& vocab) {
    return enumerate_targets(event, vocab.missing_id());
}

}  // namespace rolefit
