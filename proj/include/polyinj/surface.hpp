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

#ifndef POLYINJ_SURFACE_HPP
#define POLYINJ_SURFACE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyinj/binary_form.hpp"
#include "polyinj/rational.hpp"

namespace polyinj {

/* Point of P^3(Q) stored as its primitive integer representative, first nonzero coordinate positive. */
class ProjPoint {
   public:
    /* Throws ErrorCode::domain for the all-zero vector. */
    explicit ProjPoint(std::array<Integer, 4> coords);

    const std::array<Integer, 4>& coords() const noexcept { return coords_; }
    const Integer& operator[](std::size_t i) const noexcept { return coords_[i]; }

    /* max |coordinate| of the canonical representative. */
    Integer height() const;

    /* (z:w:x:y) */
    ProjPoint swapped() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) noexcept { return a.coords_ == b.coords_; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) noexcept { return a.coords_ < b.coords_; }

   private:
    std::array<Integer, 4> coords_;
};

/* Rational points of bounded height on F(x,y) = F(z,w), split by the trivial lines. */
struct PointSet {
    BinaryForm form;
    std::uint64_t height_bound;
    std::vector<ProjPoint> trivial;
    std::vector<ProjPoint> exceptional;
};

struct ScanOptions {
    unsigned threads = 0;
};

/*
 * Every canonical point with all |coords| <= H satisfying F(x,y) = F(z,w),
 * found by a fingerprint hash-join of the (2H+1)^2 integer pairs against
 * themselves with exact confirmation. Points are sorted.
 */
PointSet scan_surface(const BinaryForm& form, std::uint64_t height_bound, const ScanOptions& options = {});

/*
 * zeta in {1, -1} with x = zeta z and y = zeta w, where zeta^d = 1 over Q;
 * -1 qualifies only for even d.
 */
std::optional<int> is_trivial_point(const ProjPoint& p, std::uint64_t degree);

/* Stable partition into (trivial, exceptional). */
std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> classify(std::span<const ProjPoint> points,
                                                                   std::uint64_t degree);

}  // namespace polyinj

#endif
