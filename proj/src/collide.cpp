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

#include "polyinj/collide.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <mutex>
#include <numeric>
#include <tuple>

#include "polyinj/error.hpp"
#include "polyinj/eval_kernel.hpp"
#include "polyinj/fingerprint.hpp"
#include "polyinj/parallel.hpp"

namespace polyinj {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(InputMode mode) noexcept { return mode == InputMode::integers ? "int" : "rat"; }

InputMode input_mode_from_string(std::string_view text) {
    if (text == "int" || text == "integers") return InputMode::integers;
    if (text == "rat" || text == "rationals") return InputMode::rationals;
    throw Error(ErrorCode::parse, "unknown input mode '" + std::string(text) + "'");
}

std::vector<Rational> enumerate_inputs(std::uint64_t height_bound) {
    if (height_bound == 0) throw Error(ErrorCode::domain, "height bound must be positive");
    struct Keyed {
        long height, num, den;
    };
    std::vector<Keyed> keyed;
    const long h = static_cast<long>(height_bound);
    keyed.push_back({1, 0, 1});
    for (long den = 1; den <= h; ++den)
        for (long num = 1; num <= h; ++num)
            if (std::gcd(num, den) == 1) {
                keyed.push_back({std::max(num, den), num, den});
                keyed.push_back({std::max(num, den), -num, den});
            }
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return std::tie(a.height, a.num, a.den) < std::tie(b.height, b.num, b.den); });
    std::vector<Rational> out;
    out.reserve(keyed.size());
    for (const auto& k : keyed) out.push_back(Rational::canonicalize(k.num, k.den));
    return out;
}

std::vector<Rational> space_values(const SearchSpace& space) {
    if (space.height_bound == 0) throw Error(ErrorCode::domain, "height bound must be positive");
    if (space.mode == InputMode::rationals) return enumerate_inputs(space.height_bound);
    std::vector<Rational> out;
    const long h = static_cast<long>(space.height_bound);
    for (long v = -h; v <= h; ++v) out.emplace_back(v);
    return out;
}

namespace {

void require_xy(const MultiPoly& f) {
    if (f.uses(Var::z) || f.uses(Var::w)) throw Error(ErrorCode::arity, "collision search needs a polynomial in x, y");
}

/* Collisions of one equal-value class: every pair of members, ordered canonically. */
void emit_class(std::vector<InputPair> members, const Rational& value, std::vector<Collision>& out) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) out.push_back({members[i], members[j], value});
}

/* ---- checkpoint files ---- */

constexpr const char* kCheckpointFormat = "polyinj.collide.checkpoint/1";

fs::path shard_file(const fs::path& checkpoint, std::uint64_t shard) {
    return fs::path(checkpoint.string() + ".shard-" + std::to_string(shard) + ".bin");
}

void atomic_write(const fs::path& target, const std::string& bytes) {
    const fs::path tmp = fs::path(target.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::checkpoint, "cannot open " + tmp.string() + " for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) throw Error(ErrorCode::checkpoint, "write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw Error(ErrorCode::checkpoint, "cannot move " + tmp.string() + " into place: " + ec.message());
}

json checkpoint_header(const MultiPoly& f, const SearchSpace& space, std::uint64_t shards,
                       const std::vector<std::uint64_t>& primes) {
    std::string vars;
    for (Var v : f.vars()) vars += var_name(v);
    return json{{"format", kCheckpointFormat}, {"poly", render(f)},   {"vars", vars},
                {"mode", to_string(space.mode)}, {"height", space.height_bound}, {"shards", shards},
                {"primes", primes}};
}

void write_checkpoint(const fs::path& path, json header, const std::vector<char>& done) {
    json completed = json::array();
    for (std::size_t s = 0; s < done.size(); ++s)
        if (done[s]) completed.push_back(s);
    header["completed"] = std::move(completed);
    atomic_write(path, header.dump(2) + "\n");
}

void write_shard(const fs::path& checkpoint, std::uint64_t shard, const std::vector<JoinEntry>& entries) {
    std::string bytes(entries.size() * sizeof(JoinEntry), '\0');
    if (!entries.empty()) std::memcpy(bytes.data(), entries.data(), bytes.size());
    atomic_write(shard_file(checkpoint, shard), bytes);
}

std::vector<JoinEntry> read_shard(const fs::path& checkpoint, std::uint64_t shard) {
    const fs::path file = shard_file(checkpoint, shard);
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorCode::checkpoint, "missing shard file " + file.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() % sizeof(JoinEntry) != 0) throw Error(ErrorCode::checkpoint, "truncated shard file " + file.string());
    std::vector<JoinEntry> entries(bytes.size() / sizeof(JoinEntry));
    if (!entries.empty()) std::memcpy(entries.data(), bytes.data(), bytes.size());
    return entries;
}

std::vector<char> load_checkpoint(const fs::path& path, const json& expected_header) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::checkpoint, "cannot read checkpoint " + path.string());
    json stored;
    try {
        stored = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::checkpoint, "malformed checkpoint " + path.string() + ": " + e.what());
    }
    for (const auto& [key, value] : expected_header.items())
        if (!stored.contains(key) || stored[key] != value)
            throw Error(ErrorCode::checkpoint, "checkpoint field '" + key + "' does not match this search");
    std::vector<char> done(expected_header.at("shards").get<std::uint64_t>(), 0);
    try {
        for (const auto& id : stored.at("completed")) {
            const auto s = id.get<std::uint64_t>();
            if (s >= done.size()) throw Error(ErrorCode::checkpoint, "checkpoint lists unknown shard");
            done[s] = 1;
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::checkpoint, std::string("malformed checkpoint: ") + e.what());
    }
    return done;
}

}  // namespace

CollisionReport find_collisions(const MultiPoly& f, const SearchSpace& space, const SearchOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    require_xy(f);
    if (options.resume && !options.checkpoint) throw Error(ErrorCode::checkpoint, "resume requires a checkpoint path");

    const std::vector<Rational> values = space_values(space);
    const std::size_t n = values.size();
    const std::uint64_t total = static_cast<std::uint64_t>(n) * n;
    const std::uint64_t shards = std::clamp<std::uint64_t>(options.shards, 1, total);
    const unsigned threads = resolve_threads(options.threads);

    CollisionReport report;
    report.poly = f;
    report.space = space;
    report.primes = {kDefaultPrimes[0], kDefaultPrimes[1]};
    report.shards = shards;
    report.checkpoint = options.checkpoint;
    report.stats.inputs_evaluated = total;

    const PairEvaluator eval(f);
    const ModularTable t0(eval, values, report.primes[0]);
    const ModularTable t1(eval, values, report.primes[1]);

    std::vector<std::vector<JoinEntry>> shard_entries(shards);
    std::vector<char> done(shards, 0);
    const json header = checkpoint_header(f, space, shards, report.primes);
    if (options.checkpoint) {
        if (options.resume) {
            done = load_checkpoint(*options.checkpoint, header);
            for (std::uint64_t s = 0; s < shards; ++s)
                if (done[s]) shard_entries[s] = read_shard(*options.checkpoint, s);
        } else {
            write_checkpoint(*options.checkpoint, header, done);
        }
    }

    std::vector<std::uint64_t> pending;
    for (std::uint64_t s = 0; s < shards; ++s)
        if (!done[s]) pending.push_back(s);
    const std::size_t budget =
        options.stop_after_shards ? std::min<std::size_t>(*options.stop_after_shards, pending.size()) : pending.size();

    std::mutex checkpoint_mutex;
    parallel_for(budget, threads, [&](std::size_t i) {
        const std::uint64_t s = pending[i];
        const std::uint64_t lo = total * s / shards, hi = total * (s + 1) / shards;
        std::vector<JoinEntry> entries;
        entries.reserve(hi - lo);
        for (std::uint64_t k = lo; k < hi; ++k) {
            const std::size_t ix = k / n, iy = k % n;
            entries.push_back({pair_residue(t0, eval, values, ix, iy), pair_residue(t1, eval, values, ix, iy), k});
        }
        if (options.checkpoint) {
            write_shard(*options.checkpoint, s, entries);
            std::lock_guard lock(checkpoint_mutex);
            done[s] = 1;
            write_checkpoint(*options.checkpoint, header, done);
        } else {
            done[s] = 1;
        }
        shard_entries[s] = std::move(entries);
    });

    if (std::find(done.begin(), done.end(), 0) != done.end()) {
        report.complete = false;
        report.stats.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return report;
    }

    std::vector<JoinEntry> all;
    all.reserve(total);
    for (auto& se : shard_entries) {
        all.insert(all.end(), se.begin(), se.end());
        std::vector<JoinEntry>().swap(se);
    }

    JoinCallbacks callbacks;
    callbacks.exact = [&](std::uint64_t k) { return eval.exact(values[k / n], values[k % n]); };
    callbacks.extra_residues = [&](std::uint64_t k) {
        const Rational v = eval.exact(values[k / n], values[k % n]);
        return std::array<std::uint64_t, 2>{residue(v, kDefaultPrimes[2]), residue(v, kDefaultPrimes[3])};
    };
    JoinStats join_stats;
    const auto classes = equal_value_classes(std::move(all), callbacks, threads, join_stats);
    if (join_stats.escalated_buckets) report.primes.assign(kDefaultPrimes.begin(), kDefaultPrimes.end());

    for (const auto& cls : classes) {
        std::vector<InputPair> members;
        for (auto k : cls) members.push_back({values[k / n], values[k % n]});
        emit_class(std::move(members), eval.exact(values[cls.front() / n], values[cls.front() % n]), report.collisions);
    }
    std::sort(report.collisions.begin(), report.collisions.end());

    report.stats.fingerprint_candidates = join_stats.fingerprint_candidates;
    report.stats.exact_confirms = join_stats.exact_confirms;
    report.stats.escalated_buckets = join_stats.escalated_buckets;
    report.stats.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

CollisionReport naive_collisions(const MultiPoly& f, const SearchSpace& space) {
    const auto started = std::chrono::steady_clock::now();
    require_xy(f);
    const std::vector<Rational> values = space_values(space);

    std::vector<InputPair> inputs;
    std::vector<Rational> images;
    for (const auto& x : values)
        for (const auto& y : values) {
            inputs.push_back({x, y});
            images.push_back(eval_at(f, {x, y, Rational(), Rational()}));
        }

    CollisionReport report;
    report.poly = f;
    report.space = space;
    report.stats.inputs_evaluated = inputs.size();
    for (std::size_t i = 0; i < inputs.size(); ++i)
        for (std::size_t j = i + 1; j < inputs.size(); ++j)
            if (images[i] == images[j]) {
                const bool ordered = inputs[i] < inputs[j];
                report.collisions.push_back({ordered ? inputs[i] : inputs[j], ordered ? inputs[j] : inputs[i], images[i]});
            }
    std::sort(report.collisions.begin(), report.collisions.end());
    report.stats.exact_confirms = report.collisions.size();
    report.stats.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace polyinj
