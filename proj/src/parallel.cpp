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

#include "nevsm/parallel.hpp"

#include <atomic>

#include <omp.h>

namespace nevsm::parallel {

namespace {
std::atomic<int> g_threads{0};
}  // namespace

void set_thread_count(int threads) {
  g_threads = threads < 0 ? 0 : threads;
  omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
}

int thread_count() {
  const int t = g_threads.load();
  return t > 0 ? t : omp_get_max_threads();
}

ScopedThreadCount::ScopedThreadCount(int threads) : saved_(g_threads.load()) {
  set_thread_count(threads);
}

ScopedThreadCount::~ScopedThreadCount() { set_thread_count(saved_); }

}  // namespace nevsm::parallel
