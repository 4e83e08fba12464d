// Copyright 2026 The rees-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REES_PARALLEL_HPP_
#define REES_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace rees {

// Worker count: REES_LAB_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned default_worker_count();

// Calls body(i) for i in [0, count) on up to `workers` threads. Exceptions
// thrown by body are rethrown on the calling thread (the one from the lowest
// index wins).
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace rees

#endif  // REES_PARALLEL_HPP_
