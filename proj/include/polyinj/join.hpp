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

#ifndef POLYINJ_JOIN_HPP
#define POLYINJ_JOIN_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "polyinj/rational.hpp"

namespace polyinj {

/* One evaluated input during the fingerprint join: its value is kept only as residues. */
struct JoinEntry {
    std::uint64_t fp0;
    std::uint64_t fp1;
    std::uint64_t index;

    friend bool operator==(const JoinEntry&, const JoinEntry&) = default;
};

struct JoinStats {
    std::uint64_t fingerprint_candidates = 0;  // pairs sharing a final fingerprint
    std::uint64_t exact_confirms = 0;          // of those, pairs with exactly equal values
    std::uint64_t escalated_buckets = 0;       // buckets re-split with the extra primes
};

struct JoinCallbacks {
    /* Exact value of an input. Called only for members of fingerprint buckets. */
    std::function<Rational(std::uint64_t)> exact;
    /* Residues under the third and fourth run primes. */
    std::function<std::array<std::uint64_t, 2>(std::uint64_t)> extra_residues;
};

/* Buckets larger than this are re-split with two more primes before exact confirmation. */
inline constexpr std::size_t kEscalationThreshold = 1000;

/* Partitions of the merge phase, keyed by the top bits of the first residue. */
inline constexpr std::size_t kJoinPartitions = 256;

/*
 * Groups entries whose values are exactly equal. Returns every class with at
 * least two members; indices ascending inside a class, classes ordered by
 * their smallest index. Output does not depend on the input order or the
 * thread count.
 */
std::vector<std::vector<std::uint64_t>> equal_value_classes(std::vector<JoinEntry> entries,
                                                            const JoinCallbacks& callbacks, unsigned threads,
                                                            JoinStats& stats);

}  // namespace polyinj

#endif
