// Copyright 2026 The Orlicz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <functional>

namespace orlicz {

/// Worker count: ORLICZ_NUM_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() threads. Each
/// index is visited exactly once; callers write results into per-index
/// slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace orlicz
