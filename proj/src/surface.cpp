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

#include "polyinj/surface.hpp"

#include <algorithm>

#include "polyinj/error.hpp"
#include "polyinj/eval_kernel.hpp"
#include "polyinj/join.hpp"
#include "polyinj/parallel.hpp"

namespace polyinj {

ProjPoint::ProjPoint(std::array<Integer, 4> coords) : coords_(std::move(coords)) {
    Integer g = 0;
    for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw Error(ErrorCode::domain, "projective point with all coordinates zero");
    const auto first = std::find_if(coords_.begin(), coords_.end(), [](const Integer& c) { return c != 0; });
    if (*first < 0) g = -g;
    for (auto& c : coords_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Integer ProjPoint::height() const {
    Integer h = 0;
    for (const auto& c : coords_) h = std::max<Integer>(h, ::abs(c));
    return h;
}

ProjPoint ProjPoint::swapped() const { return ProjPoint({coords_[2], coords_[3], coords_[0], coords_[1]}); }

std::optional<int> is_trivial_point(const ProjPoint& p, std::uint64_t degree) {
    if (p[0] == p[2] && p[1] == p[3]) return 1;
    if (degree % 2 == 0 && p[0] == -p[2] && p[1] == -p[3]) return -1;
    return std::nullopt;
}

std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> classify(std::span<const ProjPoint> points,
                                                                   std::uint64_t degree) {
    std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> out;
    for (const auto& p : points) (is_trivial_point(p, degree) ? out.first : out.second).push_back(p);
    return out;
}

PointSet scan_surface(const BinaryForm& form, std::uint64_t height_bound, const ScanOptions& options) {
    if (height_bound == 0) throw Error(ErrorCode::domain, "height bound must be positive");
    const unsigned threads = resolve_threads(options.threads);

    std::vector<Rational> values;
    const auto h = static_cast<long>(height_bound);
    for (long v = -h; v <= h; ++v) values.emplace_back(v);
    const std::size_t n = values.size();
    const std::uint64_t total = static_cast<std::uint64_t>(n) * n;

    const PairEvaluator f(form.to_poly());
    const ModularTable t0(f, values, kDefaultPrimes[0]);
    const ModularTable t1(f, values, kDefaultPrimes[1]);

    // shard the pair range; each shard fills its own slice
    std::vector<JoinEntry> entries(total);
    const std::size_t shards = std::max<std::size_t>(1, std::min<std::uint64_t>(total / 4096 + 1, 256));
    parallel_for(shards, threads, [&](std::size_t s) {
        const std::uint64_t lo = total * s / shards, hi = total * (s + 1) / shards;
        for (std::uint64_t k = lo; k < hi; ++k) {
            const std::size_t ix = k / n, iy = k % n;
            entries[k] = {pair_residue(t0, f, values, ix, iy), pair_residue(t1, f, values, ix, iy), k};
        }
    });

    JoinCallbacks callbacks;
    callbacks.exact = [&](std::uint64_t k) { return f.exact(values[k / n], values[k % n]); };
    callbacks.extra_residues = [&](std::uint64_t k) {
        const Rational v = f.exact(values[k / n], values[k % n]);
        return std::array<std::uint64_t, 2>{residue(v, kDefaultPrimes[2]), residue(v, kDefaultPrimes[3])};
    };
    JoinStats stats;
    const auto classes = equal_value_classes(std::move(entries), callbacks, threads, stats);

    auto point_of = [&](std::uint64_t a, std::uint64_t b) {
        return std::array<Integer, 4>{Integer(values[a / n].num()), Integer(values[a % n].num()),
                                      Integer(values[b / n].num()), Integer(values[b % n].num())};
    };
    auto nonzero = [](const std::array<Integer, 4>& c) {
        return std::any_of(c.begin(), c.end(), [](const Integer& v) { return v != 0; });
    };

    std::vector<ProjPoint> points;
    // the diagonal (x:y:x:y) always satisfies the equation
    for (std::uint64_t k = 0; k < total; ++k) {
        auto c = point_of(k, k);
        if (nonzero(c)) points.emplace_back(std::move(c));
    }
    for (const auto& cls : classes)
        for (auto a : cls)
            for (auto b : cls)
                if (a != b) points.emplace_back(point_of(a, b));

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    auto [trivial, exceptional] = classify(points, form.degree());
    return PointSet{form, height_bound, std::move(trivial), std::move(exceptional)};
}

}  // namespace polyinj
