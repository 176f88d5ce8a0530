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

#include "polyinj/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyinj/error.hpp"
#include "polyinj/expr.hpp"
#include "polyinj/fingerprint.hpp"
#include "polyinj/json_io.hpp"

#ifndef POLYINJ_VERSION
#define POLYINJ_VERSION "0.0.0"
#endif

namespace polyinj::cli {

namespace {

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::io, "sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << bytes) || !f.flush()) throw Error(ErrorCode::io, "cannot write '" + path + "'");
}

/* Everything a run records about itself. */
struct Run {
    std::string subcommand;
    std::vector<std::string> argv;
    std::optional<std::uint64_t> rng_seed;
    std::vector<std::uint64_t> primes;
    Json inputs = Json::array();
    Json outputs = Json::array();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    std::string input(const std::string& path) {
        std::string bytes = read_file(path);
        inputs.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
        return bytes;
    }

    void write(const std::optional<std::string>& path, const std::string& bytes, std::ostream& out) {
        if (path)
            write_file(*path, bytes);
        else
            out << bytes;
        outputs.push_back({{"path", path ? Json(*path) : Json("<stdout>")}, {"sha256", sha256_hex(bytes)}});
    }

    Json manifest() const {
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return {{"subcommand", subcommand},
                {"argv", argv},
                {"rng_seed", rng_seed ? Json(*rng_seed) : Json(nullptr)},
                {"primes", primes},
                {"version", POLYINJ_VERSION},
                {"wall_time_s", wall},
                {"inputs", inputs},
                {"outputs", outputs}};
    }
};

/* Inline expression, or @path. */
MultiPoly load_poly(Run& run, const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return parse_poly(run.input(arg.substr(1)));
    return parse_poly(arg);
}

std::vector<std::string> split_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw Error(ErrorCode::parse, "expected 'x0,y0', got '" + text + "'");
    return {text.substr(0, comma), text.substr(comma + 1)};
}

Integer parse_integer(const std::string& text) {
    const Rational r = Rational::parse(text);
    if (!r.is_integer()) throw Error(ErrorCode::parse, "expected an integer, got '" + text + "'");
    return r.num();
}

std::uint64_t resolve_seed(Run& run, const std::optional<std::uint64_t>& seed, std::ostream& err) {
    if (seed) return *run.rng_seed = *seed;
    std::random_device rd;
    const std::uint64_t drawn = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    err << "polyinj: no --seed given, using --seed " << drawn << "\n";
    return *run.rng_seed = drawn;
}

std::vector<std::uint64_t> default_primes() { return {kDefaultPrimes[0], kDefaultPrimes[1]}; }

void error_json(std::ostream& err, std::string_view code, const std::string& message) {
    err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounded-height tools for polynomial injections Q x Q -> Q", "polyinj"};
    app.require_subcommand(1);
    app.set_version_flag("--version", POLYINJ_VERSION);

    std::optional<std::string> out_path, manifest_path;
    unsigned threads = 0;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "Write the JSON result here instead of stdout");
        sub->add_option("--manifest", manifest_path, "Run manifest path (default <out>.manifest.json, else stderr)");
    };

    // surface
    std::string form_text;
    std::uint64_t height = 0;
    auto* surface = app.add_subcommand("surface", "Points of F(x,y) = F(z,w) up to a height bound");
    surface->add_option("--form", form_text, "Binary form, inline or @file")->required();
    surface->add_option("--height", height, "Height bound H")->required();
    surface->add_option("--threads", threads, "Worker threads (0 = all cores)");
    common(surface);

    // build
    std::optional<std::uint64_t> seed;
    std::uint64_t max_twists = 3, max_draws = 64;
    std::optional<std::string> replay;
    auto* build = app.add_subcommand("build", "Construct a candidate injection and record every draw");
    auto* build_form = build->add_option("--form", form_text, "Binary form, inline or @file");
    build->add_option("--height", height, "Height bound H for all scans")->default_val(10);
    build->add_option("--seed", seed, "RNG seed");
    build->add_option("--max-twists", max_twists, "Twist budget")->default_val(3);
    build->add_option("--max-draws", max_draws, "Draw budget per random choice")->default_val(64);
    build->add_option("--threads", threads, "Worker threads (0 = all cores)");
    auto* build_replay = build->add_option("--replay", replay, "Re-run a recorded trace and require identical output");
    build_form->excludes(build_replay);
    common(build);

    // collide
    std::string poly_text, mode_text = "int";
    std::uint64_t shards = 16;
    std::optional<std::string> checkpoint;
    bool resume = false;
    std::optional<std::uint64_t> stop_after;
    auto* collide = app.add_subcommand("collide", "Exhaustive bounded-height collision search");
    collide->add_option("--poly", poly_text, "Polynomial in x, y, inline or @file")->required();
    collide->add_option("--mode", mode_text, "int or rat")->check(CLI::IsMember({"int", "rat"}));
    collide->add_option("--height", height, "Height bound H")->required();
    collide->add_option("--shards", shards, "Number of shards")->default_val(16);
    collide->add_option("--threads", threads, "Worker threads (0 = all cores)");
    collide->add_option("--checkpoint", checkpoint, "Checkpoint file");
    collide->add_flag("--resume", resume, "Skip shards recorded in the checkpoint");
    collide->add_option("--stop-after-shards", stop_after, "Stop after this many new shards (testing)");
    common(collide);

    // local
    bool real = false;
    std::optional<std::uint64_t> padic_p;
    unsigned precision = 0;
    std::string at_text;
    std::optional<double> tol;
    std::optional<std::string> delta_text;
    auto* local = app.add_subcommand("local", "Distinct nearby points with equal value over R or Z/p^k");
    local->add_option("--poly", poly_text, "Polynomial in x, y, inline or @file")->required();
    auto* real_flag = local->add_flag("--real", real, "Real solve");
    auto* padic_opt = local->add_option("--padic", padic_p, "Hensel lift for this prime");
    real_flag->excludes(padic_opt);
    local->add_option("--prec", precision, "p-adic precision k");
    local->add_option("--at", at_text, "Base point x0,y0")->required();
    local->add_option("--tol", tol, "Real residual tolerance");
    local->add_option("--delta", delta_text, "Perturbation of x");
    common(local);

    // ffield
    std::uint32_t ff_p = 2;
    unsigned ff_deg = 1;
    std::uint64_t trials = 1000;
    std::optional<std::string> ff_x, ff_y;
    auto* ffield = app.add_subcommand("ffield", "x^p + t y^p over F_p(t)");
    ffield->add_option("--p", ff_p, "Characteristic")->required();
    ffield->add_option("--deg", ff_deg, "Degree bound of numerators and denominators")->default_val(1);
    ffield->add_option("--trials", trials, "Number of random inputs")->default_val(1000);
    ffield->add_option("--seed", seed, "RNG seed");
    auto* x_opt = ffield->add_option("--x", ff_x, "Evaluate at x given as 'num;den' coefficients");
    auto* y_opt = ffield->add_option("--y", ff_y, "Evaluate at y given as 'num;den' coefficients");
    x_opt->needs(y_opt);
    y_opt->needs(x_opt);
    common(ffield);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Run run;
    run.subcommand = app.get_subcommands().front()->get_name();
    for (int i = 0; i < argc; ++i) run.argv.emplace_back(argv[i]);

    try {
        std::string result;
        if (surface->parsed()) {
            const BinaryForm form = BinaryForm::from_poly(load_poly(run, form_text));
            run.primes = default_primes();
            result = dump(to_json(scan_surface(form, height, {threads})));
        } else if (build->parsed()) {
            std::optional<std::string> recorded;
            BuildConfig config;
            std::optional<BinaryForm> form;
            if (replay) {
                recorded = run.input(*replay);
                Json trace;
                try {
                    trace = Json::parse(*recorded);
                } catch (const nlohmann::json::exception& e) {
                    throw Error(ErrorCode::parse, std::string("trace is not JSON: ") + e.what());
                }
                config = build_config_from_json(trace);
                form = form_from_json(trace.at("base_form"));
                run.rng_seed = config.rng_seed;
            } else {
                if (build_form->count() == 0) throw CLI::RequiredError("--form or --replay");
                form = BinaryForm::from_poly(load_poly(run, form_text));
                config.height_bound = height;
                config.max_twists = max_twists;
                config.max_draws = max_draws;
                config.rng_seed = resolve_seed(run, seed, err);
            }
            config.threads = threads;
            run.primes = default_primes();
            result = dump(to_json(build_injection(*form, config)));
            if (recorded && result != *recorded)
                throw Error(ErrorCode::domain, "replay diverged from the recorded trace");
        } else if (collide->parsed()) {
            const MultiPoly f = load_poly(run, poly_text);
            SearchOptions opts;
            opts.shards = shards;
            opts.threads = threads;
            if (checkpoint) opts.checkpoint = *checkpoint;
            opts.resume = resume;
            opts.stop_after_shards = stop_after;
            const CollisionReport report =
                find_collisions(f, SearchSpace{input_mode_from_string(mode_text), height}, opts);
            run.primes = report.primes;
            result = dump(to_json(report));
        } else if (local->parsed()) {
            const MultiPoly f = load_poly(run, poly_text);
            const auto at = split_pair(at_text);
            Json j;
            if (real) {
                RealOptions opts;
                if (tol) opts.tol = *tol;
                if (delta_text) opts.delta = Rational::parse(*delta_text);
                const RealPoint pt = real_collision(f, Rational::parse(at[0]), Rational::parse(at[1]), opts);
                j = to_json(pt);
                j["tol"] = opts.tol;
            } else if (padic_p) {
                if (precision == 0) throw CLI::RequiredError("--prec");
                std::optional<Integer> delta;
                if (delta_text) delta = parse_integer(*delta_text);
                j = to_json(padic_collision(f, *padic_p, precision, parse_integer(at[0]), parse_integer(at[1]), delta));
            } else {
                throw CLI::RequiredError("--real or --padic");
            }
            j["poly"] = to_json(f);
            j["base"] = Json::array({at[0], at[1]});
            result = dump(j);
        } else if (ffield->parsed()) {
            if (ff_x) {
                const ff::FpRatFun x = ff::from_text(ff_p, *ff_x), y = ff::from_text(ff_p, *ff_y);
                result = dump(Json{{"p", ff_p},
                                   {"x", ff::to_text(x)},
                                   {"y", ff::to_text(y)},
                                   {"value", ff::to_text(ff::eval_injection(x, y))}});
            } else {
                const std::uint64_t s = resolve_seed(run, seed, err);
                result = dump(to_json(ff::collision_search(ff_p, ff_deg, trials, s)));
            }
        }
        run.write(out_path, result, out);

        const std::string manifest = dump(run.manifest());
        if (manifest_path)
            write_file(*manifest_path, manifest);
        else if (out_path)
            write_file(*out_path + ".manifest.json", manifest);
        else
            err << manifest;
        return 0;
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << Json{{"error", "parse"}, {"message", e.what()}, {"offset", e.offset()}}.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        error_json(err, to_string(e.code()), e.what());
        return 1;
    } catch (const std::exception& e) {
        error_json(err, "internal", e.what());
        return 1;
    }
}

}  // namespace polyinj::cli
