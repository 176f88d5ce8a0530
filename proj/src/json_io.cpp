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

#include "polyinj/json_io.hpp"

#include "polyinj/error.hpp"

namespace polyinj {

namespace {

Json integer(const Integer& v) { return v.get_str(); }

Json rationals(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_json(v));
    return out;
}

Json pair(const InputPair& p) { return Json::array({to_json(p[0]), to_json(p[1])}); }

template <class T>
T field(const Json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, std::string("bad or missing field '") + key + "': " + e.what());
    }
}

Json stats(const SearchStats& s) {
    // wall time lives in the run manifest so reports stay byte-reproducible
    return {{"inputs_evaluated", s.inputs_evaluated},
            {"fingerprint_candidates", s.fingerprint_candidates},
            {"exact_confirms", s.exact_confirms},
            {"escalated_buckets", s.escalated_buckets}};
}

Json collisions(const std::vector<Collision>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(to_json(c));
    return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const MultiPoly& p) {
    Json vars = Json::array();
    for (Var v : p.vars()) vars.push_back(std::string(1, var_name(v)));
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exp = Json::array();
        for (Var v : p.vars()) exp.push_back(e[static_cast<std::size_t>(v)]);
        terms.push_back({{"exp", exp}, {"coef", to_json(c)}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

Json to_json(const BinaryForm& f) {
    return {{"expr", render(f.to_poly())}, {"degree", f.degree()}, {"coeffs", rationals(f.coeffs())}};
}

Json to_json(const ProjPoint& p) {
    Json out = Json::array();
    for (const auto& c : p.coords()) out.push_back(integer(c));
    return out;
}

Json to_json(const PointSet& s) {
    Json exceptional = Json::array();
    for (const auto& p : s.exceptional) exceptional.push_back(to_json(p));
    return {{"form", to_json(s.form)},
            {"height", s.height_bound},
            {"trivial_count", s.trivial.size()},
            {"exceptional", exceptional}};
}

Json to_json(const Collision& c) {
    return {{"first", pair(c.first)}, {"second", pair(c.second)}, {"value", to_json(c.value)}};
}

Json to_json(const CollisionReport& r) {
    return {{"poly", to_json(r.poly)},
            {"expr", render(r.poly)},
            {"space", {{"mode", std::string(to_string(r.space.mode))}, {"height", r.space.height_bound}}},
            {"collisions", collisions(r.collisions)},
            {"stats", stats(r.stats)},
            {"primes", r.primes},
            {"shards", r.shards},
            {"complete", r.complete},
            {"checkpoint", r.checkpoint ? Json(r.checkpoint->string()) : Json(nullptr)},
            {"disclaimer", std::string(kCollisionDisclaimer)}};
}

Json to_json(const Matrix2& m) {
    return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

Json to_json(const ConstructionTrace& t) {
    Json twists = Json::array();
    for (const auto& step : t.twists) {
        Json draws = Json::array();
        for (const auto& d : step.draws) draws.push_back({{"matrix", to_json(d.matrix)}, {"outcome", d.outcome}});
        Json checks = Json::array();
        for (const auto& c : step.preimage_checks)
            checks.push_back({{"point", to_json(c.point)}, {"has_rational_preimage", c.has_rational_preimage}});
        twists.push_back(
            {{"draws", draws}, {"matrix", to_json(step.matrix)}, {"preimage_checks", checks}, {"scan", to_json(step.scan)}});
    }
    Json shifts = Json::array();
    for (const auto& s : t.shift_draws)
        shifts.push_back({{"a", to_json(s.a)},
                          {"b", to_json(s.b)},
                          {"accepted", s.accepted},
                          {"hit_coordinates", rationals(s.hit_coordinates)}});
    return {{"base_form", to_json(t.base_form)},
            {"w", t.w},
            {"p", t.p},
            {"height_bound", t.height_bound},
            {"max_twists", t.max_twists},
            {"max_draws", t.max_draws},
            {"rng_seed", t.rng_seed},
            {"base_scan", to_json(t.base_scan)},
            {"twists", twists},
            {"final_form", to_json(t.final_form)},
            {"reduced", t.reduced},
            {"g_poly", to_json(t.g_poly)},
            {"g_exceptional", collisions(t.g_exceptional)},
            {"shift_draws", shifts},
            {"shift_admissible", t.shift_admissible},
            {"a", to_json(t.a)},
            {"b", to_json(t.b)},
            {"f_poly", to_json(t.f_poly)},
            {"f_total_degree", t.f_poly.total_degree()}};
}

Json to_json(const RealPoint& p) {
    return {{"kind", "real"},
            {"x", to_json(p.x)},
            {"y", p.y},
            {"y_exact", to_json(from_double(p.y))},
            {"residual", p.residual},
            {"target", to_json(p.target)},
            {"delta", to_json(p.delta)},
            {"newton_steps", p.newton_steps}};
}

Json to_json(const PadicApprox& a) {
    Json vals = Json::array();
    for (int v : a.iteration_valuations) vals.push_back(v == kInfiniteValuation ? Json(nullptr) : Json(v));
    return {{"kind", "padic"},
            {"p", integer(a.p)},
            {"precision", a.precision},
            {"x", integer(a.x)},
            {"y", integer(a.y)},
            {"delta", integer(a.delta)},
            {"seed", integer(a.seed)},
            {"target", to_json(a.target)},
            {"residual_valuation", a.residual_valuation == kInfiniteValuation ? Json(nullptr) : Json(a.residual_valuation)},
            {"iteration_valuations", vals},
            {"distinct_mod_pk", a.distinct_mod_pk}};
}

Json to_json(const ff::SearchReport& r) {
    return {{"p", r.p},
            {"degree_bound", r.degree_bound},
            {"trials", r.trials},
            {"seed", r.seed},
            {"distinct_inputs", r.distinct_inputs},
            {"distinct_values", r.distinct_values},
            {"pairwise_checks", r.pairwise_checks},
            {"collisions", r.collisions}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error(ErrorCode::parse, "rational must be a \"num/den\" string");
    return Rational::parse(j.get<std::string>());
}

MultiPoly poly_from_json(const Json& j) {
    std::vector<Var> vars;
    for (const auto& name : field<std::vector<std::string>>(j, "vars")) {
        const auto v = name.size() == 1 ? var_from_name(name[0]) : std::nullopt;
        if (!v) throw Error(ErrorCode::parse, "unknown variable '" + name + "'");
        vars.push_back(*v);
    }
    MultiPoly p(vars);
    if (p.vars() != vars) throw Error(ErrorCode::parse, "variables must be distinct and in canonical order");
    for (const auto& term : field<Json>(j, "terms")) {
        const auto exp = field<std::vector<std::uint32_t>>(term, "exp");
        if (exp.size() != vars.size()) throw Error(ErrorCode::parse, "exponent vector does not match vars");
        Exponents e{};
        for (std::size_t i = 0; i < vars.size(); ++i) e[static_cast<std::size_t>(vars[i])] = exp[i];
        p.add_term(e, rational_from_json(field<Json>(term, "coef")));
    }
    return p;
}

BinaryForm form_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : field<Json>(j, "coeffs")) coeffs.push_back(rational_from_json(c));
    return BinaryForm(std::move(coeffs));
}

BuildConfig build_config_from_json(const Json& trace) {
    BuildConfig c;
    c.height_bound = field<std::uint64_t>(trace, "height_bound");
    c.max_twists = field<std::uint64_t>(trace, "max_twists");
    c.rng_seed = field<std::uint64_t>(trace, "rng_seed");
    c.w = field<std::uint64_t>(trace, "w");
    c.max_draws = field<std::uint64_t>(trace, "max_draws");
    return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polyinj
