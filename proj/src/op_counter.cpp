/*
 * Copyright 2026 The eccs Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "eccs/op_counter.hpp"

namespace eccs {

namespace {
thread_local ScopedOpCounter* t_active = nullptr;
}  // namespace

ScopedOpCounter::ScopedOpCounter() : previous_(t_active) { t_active = this; }

ScopedOpCounter::~ScopedOpCounter() { t_active = previous_; }

OpCounts* active_op_counts() { return t_active ? &t_active->counts_ : nullptr; }

}  // namespace eccs
