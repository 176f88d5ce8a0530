/*
   Copyright 2026 The polyinj Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polyinj/join.hpp"

#include <algorithm>
#include <numeric>

#include "polyinj/parallel.hpp"

namespace polyinj {

namespace {

std::uint64_t pairs(std::uint64_t n) { return n * (n - 1) / 2; }

std::size_t partition_of(std::uint64_t fp0) {
    // residues are < 2^62; the undefined marker lands in the last partition
    return std::min<std::size_t>(fp0 >> 54, kJoinPartitions - 1);
}

/* Exact confirmation of one fingerprint bucket. */
void confirm(std::vector<std::uint64_t> bucket, const JoinCallbacks& cb, JoinStats& stats,
             std::vector<std::vector<std::uint64_t>>& out) {
    stats.fingerprint_candidates += pairs(bucket.size());
    std::vector<std::pair<Rational, std::uint64_t>> valued;
    valued.reserve(bucket.size());
    for (auto idx : bucket) valued.emplace_back(cb.exact(idx), idx);
    std::sort(valued.begin(), valued.end());
    for (std::size_t i = 0; i < valued.size();) {
        std::size_t j = i + 1;
        while (j < valued.size() && valued[j].first == valued[i].first) ++j;
        if (j - i >= 2) {
            std::vector<std::uint64_t> cls;
            for (std::size_t k = i; k < j; ++k) cls.push_back(valued[k].second);
            stats.exact_confirms += pairs(cls.size());
            out.push_back(std::move(cls));  // already ascending: ties sorted by index
        }
        i = j;
    }
}

void escalate(const std::vector<std::uint64_t>& bucket, const JoinCallbacks& cb, JoinStats& stats,
              std::vector<std::vector<std::uint64_t>>& out) {
    ++stats.escalated_buckets;
    std::vector<std::pair<std::array<std::uint64_t, 2>, std::uint64_t>> keyed;
    keyed.reserve(bucket.size());
    for (auto idx : bucket) keyed.emplace_back(cb.extra_residues(idx), idx);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size();) {
        std::size_t j = i + 1;
        while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
        if (j - i >= 2) {
            std::vector<std::uint64_t> sub;
            for (std::size_t k = i; k < j; ++k) sub.push_back(keyed[k].second);
            confirm(std::move(sub), cb, stats, out);
        }
        i = j;
    }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> equal_value_classes(std::vector<JoinEntry> entries,
                                                            const JoinCallbacks& callbacks, unsigned threads,
                                                            JoinStats& stats) {
    std::vector<std::vector<JoinEntry>> parts(kJoinPartitions);
    for (const auto& e : entries) parts[partition_of(e.fp0)].push_back(e);
    entries.clear();
    entries.shrink_to_fit();

    std::vector<std::vector<std::vector<std::uint64_t>>> part_classes(kJoinPartitions);
    std::vector<JoinStats> part_stats(kJoinPartitions);
    parallel_for(kJoinPartitions, threads, [&](std::size_t p) {
        auto& part = parts[p];
        std::sort(part.begin(), part.end(), [](const JoinEntry& a, const JoinEntry& b) {
            return std::tie(a.fp0, a.fp1, a.index) < std::tie(b.fp0, b.fp1, b.index);
        });
        for (std::size_t i = 0; i < part.size();) {
            std::size_t j = i + 1;
            while (j < part.size() && part[j].fp0 == part[i].fp0 && part[j].fp1 == part[i].fp1) ++j;
            if (j - i >= 2) {
                std::vector<std::uint64_t> bucket;
                for (std::size_t k = i; k < j; ++k) bucket.push_back(part[k].index);
                if (bucket.size() > kEscalationThreshold && callbacks.extra_residues)
                    escalate(bucket, callbacks, part_stats[p], part_classes[p]);
                else
                    confirm(std::move(bucket), callbacks, part_stats[p], part_classes[p]);
            }
            i = j;
        }
        std::vector<JoinEntry>().swap(part);
    });

    std::vector<std::vector<std::uint64_t>> classes;
    for (std::size_t p = 0; p < kJoinPartitions; ++p) {
        stats.fingerprint_candidates += part_stats[p].fingerprint_candidates;
        stats.exact_confirms += part_stats[p].exact_confirms;
        stats.escalated_buckets += part_stats[p].escalated_buckets;
        for (auto& c : part_classes[p]) classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

}  // namespace polyinj
