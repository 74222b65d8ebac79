// Copyright 2026 The lesionsym Authors
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

#include <atomic>
#include <string>

#include "lesionsym/error.hpp"
#include "lesionsym/kernels.hpp"

namespace lesionsym::kernels {

// Defined in the per-ISA translation units; each returns nullptr when the
// backend is not compiled in or the CPU lacks the feature.
const KernelOps* avx2_ops();
const KernelOps* neon_ops();

namespace {

std::atomic<const KernelOps*> g_active{nullptr};

const KernelOps* default_backend() {
  if (const KernelOps* ops = avx2_ops()) return ops;
  if (const KernelOps* ops = neon_ops()) return ops;
  return &scalar_ops();
}

}  // namespace

std::vector<const KernelOps*> available_backends() {
  std::vector<const KernelOps*> out{&scalar_ops()};
  if (const KernelOps* ops = avx2_ops()) out.push_back(ops);
  if (const KernelOps* ops = neon_ops()) out.push_back(ops);
  return out;
}

const KernelOps& active_ops() {
  const KernelOps* ops = g_active.load(std::memory_order_acquire);
  if (!ops) {
    ops = default_backend();
    g_active.store(ops, std::memory_order_release);
  }
  return *ops;
}

void set_active_backend(std::string_view name) {
  if (name == "auto") {
    g_active.store(default_backend(), std::memory_order_release);
    return;
  }
  for (const KernelOps* ops : available_backends()) {
    if (ops->name == name) {
      g_active.store(ops, std::memory_order_release);
      return;
    }
  }
  fail(Errc::InvalidArgument, "unknown or unavailable kernel backend '" + std::string(name) + "'");
}

}  // namespace lesionsym::kernels
