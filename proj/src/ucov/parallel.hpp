/*
  Copyright (c) 2026 ucov developers

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

#ifndef UCOV_PARALLEL_HPP
#define UCOV_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace ucov {

// Worker count: explicit override, else the UCOV_THREADS environment
// variable, else hardware concurrency.
int thread_count();

// Override the worker count for this process. 0 restores automatic
// resolution.
void set_thread_count(int n);

// Runs fn(i) for every i in [0, n). Each index is handled exactly once
// and results written to per-index slots are identical at any thread
// count; only wall time changes. fn must not touch another index's slot.
void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& fn);

}  // namespace ucov

#endif
