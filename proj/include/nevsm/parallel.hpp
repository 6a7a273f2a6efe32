// Copyright 2026 The nevsm Authors.
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

#ifndef NEVSM_PARALLEL_HPP_
#define NEVSM_PARALLEL_HPP_

namespace nevsm::parallel {

// Worker cap for the OpenMP kernels. 1 routes every kernel through its
// serial reference implementation; 0 restores the OpenMP default.
// Results are bit-identical for every setting.
void set_thread_count(int threads);
int thread_count();

// True when kernels should take the OpenMP path.
inline bool enabled() { return thread_count() > 1; }

// Sets the worker cap for the lifetime of the object.
class ScopedThreadCount {
 public:
  explicit ScopedThreadCount(int threads);
  ~ScopedThreadCount();
  ScopedThreadCount(const ScopedThreadCount&) = delete;
  ScopedThreadCount& operator=(const ScopedThreadCount&) = delete;

 private:
  int saved_;
};

}  // namespace nevsm::parallel

#endif  // NEVSM_PARALLEL_HPP_
