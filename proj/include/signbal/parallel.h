// Copyright 2026 The Signbal Authors. All Rights Reserved.
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

#ifndef SIGNBAL_PARALLEL_H_
#define SIGNBAL_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace signbal {

// Worker count: SIGNBAL_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
std::size_t ThreadCount();

// Runs fn(i) for every i in [0, count). Tasks must write only to their own
// output slot. If any task throws, the exception from the lowest failing
// index is rethrown after all workers finish.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace signbal

#endif  // SIGNBAL_PARALLEL_H_
