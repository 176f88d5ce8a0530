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

#ifndef POLYINJ_PARALLEL_HPP
#define POLYINJ_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace polyinj {

/* 0 means "available parallelism". */
unsigned resolve_threads(unsigned requested) noexcept;

/*
 * Runs fn(0) .. fn(count-1) on up to `threads` workers pulling indices from a
 * shared counter. The first exception thrown by any task is rethrown after
 * all workers stop; remaining indices are not started once one has failed.
 */
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace polyinj

#endif
