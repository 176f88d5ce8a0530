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

#ifndef POLYINJ_ERROR_HPP
#define POLYINJ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyinj {

enum class ErrorCode {
    domain,
    arity,
    unmapped_variable,
    zero_polynomial,
    singular_matrix,
    precondition,
    no_collision_found,
    hensel_inapplicable,
    checkpoint,
    parse,
    io,
};

std::string_view to_string(ErrorCode code) noexcept;

/* Every failure the library reports on purpose is an Error; anything else
   escaping the library is a bug. */
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

class ParseError : public Error {
   public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::parse, what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

}  // namespace polyinj

#endif
