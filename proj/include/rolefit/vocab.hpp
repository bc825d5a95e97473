// Copyright (c) 2026 The rolefit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "rolefit/errors.hpp"
#include "rolefit/rng.hpp"

namespace rolefit {

/// Frequency-capped word<->id map. Real words get dense ids 0..V-1 ordered by
/// descending frequency (ties broken lexicographically); UNK and MISSING are
/// the two highest ids, V and V+1.
class Vocabulary {
public:
    Vocabulary() = default;

    /// words must already be sorted in id order.
    Vocabulary(std::vector<std::string> words, std::vector<std::uint64_t> counts)
        : id_to_word_(std::move(words)), counts_(std::move(counts)) {
        for (std::size_t i = 0; i < id_to_word_.size(); ++i) {
            word_to_id_.emplace(id_to_word_[i], static_cast<std::uint32_t>(i));
        }
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(id_to_word_.size()); }
    std::uint32_t unk_id() const { return size(); }
    std::uint32_t missing_id() const { return size() + 1; }
    /// Total id space, including the two sentinels.
    std::uint32_t table_size() const { return size() + 2; }
    /// Word prediction classes: real words + UNK; MISSING is never a class.
    std::uint32_t num_word_classes() const { return size() + 1; }

    /// Known word -> its id; anything else -> unk_id.
    std::uint32_t id_of(const std::string& word) const {
        auto it = word_to_id_.find(word);
        return it == word_to_id_.end() ? unk_id() : it->second;
    }

    bool contains(const std::string& word) const {
        return word_to_id_.find(word) != word_to_id_.end();
    }

    const std::string& word_of(std::uint32_t id) const { return id_to_word_[id]; }
    std::uint64_t count_of(std::uint32_t id) const { return counts_[id]; }

    /// Stable FNV-1a digest over (word, count) rows; ties checkpoints to the
    /// vocabulary they were trained with.
    std::string hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](std::string_view s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
        };
        for (std::size_t i = 0; i < id_to_word_.size(); ++i) {
            mix(id_to_word_[i]);
            mix("\t");
            mix(std::to_string(counts_[i]));
            mix("\n");
        }
        std::ostringstream os;
        os << std::hex << h;
        return os.str();
    }

    /// TSV rows `word<TAB>count` in id order; sentinel ids are implied by the
    /// line count.
    void save_tsv(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write vocabulary file: " + path);
        for (std::size_t i = 0; i < id_to_word_.size(); ++i) {
            out << id_to_word_[i] << '\t' << counts_[i] << '\n';
        }
    }

    static Vocabulary load_tsv(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot read vocabulary file: " + path);
        std::vector<std::string> words;
        std::vector<std::uint64_t> counts;
        std::string line;
        long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos) {
                throw FormatError("vocabulary row missing tab separator", lineno);
            }
            words.push_back(line.substr(0, tab));
            try {
                counts.push_back(std::stoull(line.substr(tab + 1)));
            } catch (const std::exception&) {
                throw FormatError("vocabulary row has non-numeric count", lineno);
            }
        }
        return Vocabulary(std::move(words), std::move(counts));
    }

private:
    std::vector<std::string> id_to_word_;
    std::vector<std::uint64_t> counts_;
    std::unordered_map<std::string, std::uint32_t> word_to_id_;
};

/// Builds the top-`cap` vocabulary from word counts. Order: descending count,
/// lexicographic on ties.
inline Vocabulary build_vocab_from_counts(
    const std::unordered_map<std::string, std::uint64_t>& word_counts, std::size_t cap) {
    if (cap < 1) throw ConfigError("build_vocab: cap must be >= 1");
    if (word_counts.empty()) {
        throw ConfigError("build_vocab: corpus produced an empty vocabulary");
    }
    std::vector<std::pair<std::string, std::uint64_t>> entries(word_counts.begin(),
                                                               word_counts.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > cap) entries.resize(cap);
    std::vector<std::string> words;
    std::vector<std::uint64_t> counts;
    words.reserve(entries.size());
    counts.reserve(entries.size());
    for (auto& [w, c] : entries) {
        words.push_back(std::move(w));
        counts.push_back(c);
    }
    return Vocabulary(std::move(words), std::move(counts));
}

}  // namespace rolefit
