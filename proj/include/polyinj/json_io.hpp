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

#ifndef POLYINJ_JSON_IO_HPP
#define POLYINJ_JSON_IO_HPP

#include <json.hpp>

#include "polyinj/binary_form.hpp"
#include "polyinj/collide.hpp"
#include "polyinj/ffield.hpp"
#include "polyinj/local.hpp"
#include "polyinj/pipeline.hpp"
#include "polyinj/poly.hpp"
#include "polyinj/surface.hpp"

namespace polyinj {

using Json = nlohmann::ordered_json;

/* "num/den" */
Json to_json(const Rational& r);
Json to_json(const MultiPoly& p);
Json to_json(const BinaryForm& f);
Json to_json(const ProjPoint& p);
Json to_json(const PointSet& s);
Json to_json(const Collision& c);
Json to_json(const CollisionReport& r);
Json to_json(const Matrix2& m);
Json to_json(const ConstructionTrace& t);
Json to_json(const RealPoint& p);
Json to_json(const PadicApprox& a);
Json to_json(const ff::SearchReport& r);

/* Inverses used for replay and round-trip tests. All throw ErrorCode::parse on malformed input. */
Rational rational_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j);
BinaryForm form_from_json(const Json& j);
BuildConfig build_config_from_json(const Json& trace);

/* Two-space indented dump with a trailing newline. */
std::string dump(const Json& j);

}  // namespace polyinj

#endif
