// Copyright (c) 2026 The rolefit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace rolefit {

/// Fixed 7-slot role set. Canonical order:
///   0=PRD, 1=Arg0, 2=Arg1, 3=ArgM-Mnr, 4=ArgM-Loc, 5=ArgM-Tmp, 6=UNK-role
inline constexpr std::size_t kNumRoles = 7;

inline constexpr std::array<std::string_view, kNumRoles> kRoleLabels = {
    "PRD", "Arg0", "Arg1", "ArgM-Mnr", "ArgM-Loc", "ArgM-Tmp", "UNK-role"};

inline constexpr std::size_t kSlotPrd = 0;
inline constexpr std::size_t kSlotArg0 = 1;
inline constexpr std::size_t kSlotArg1 = 2;
inline constexpr std::size_t kSlotArgMMnr = 3;
inline constexpr std::size_t kSlotArgMLoc = 4;
inline constexpr std::size_t kSlotArgMTmp = 5;
inline constexpr std::size_t kSlotUnkRole = 6;

inline std::string_view role_label(std::size_t slot) { return kRoleLabels[slot]; }

/// Canonical labels only; returns nullopt for anything else.
inline std::optional<std::size_t> role_slot(std::string_view label) {
    for (std::size_t i = 0; i < kNumRoles; ++i) {
        if (kRoleLabels[i] == label) return i;
    }
    return std::nullopt;
}

/// Maps evaluation-dataset role names onto the 7-slot set. Accepts the
/// canonical labels plus the aliases used by the thematic-fit datasets
/// (subject, object/patient, instrument, location, time). The role set has no
/// Arg2, so instruments are housed under ArgM-Mnr.
inline std::optional<std::size_t> role_slot_with_aliases(std::string_view label) {
    if (auto slot = role_slot(label)) return slot;
    if (label == "subject" || label == "agent") return kSlotArg0;
    if (label == "object" || label == "patient" || label == "theme") return kSlotArg1;
    if (label == "instrument" || label == "manner") return kSlotArgMMnr;
    if (label == "location") return kSlotArgMLoc;
    if (label == "time") return kSlotArgMTmp;
    return std::nullopt;
}

}  // namespace rolefit
