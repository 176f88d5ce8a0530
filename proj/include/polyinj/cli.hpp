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

#ifndef POLYINJ_CLI_HPP
#define POLYINJ_CLI_HPP

#include <ostream>

namespace polyinj::cli {

/*
 * Runs one subcommand. Returns 0 on success, 1 on a domain error (a JSON
 * object {"error", "message"} is written to `err`), 2 on a usage error.
 */
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyinj::cli

#endif
