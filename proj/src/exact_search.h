// Copyright 2026 The tlayer Authors
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

#pragma once

#include <vector>

#include "tlayer/circuit.h"

namespace tlayer::exact_search {

// Reduces `columns` in place to the fewest columns reachable by merging
// arbitrary pairs, appending the merges to `log` with indices relative to
// `columns`. No size check; callers cap the input.
void minimize(std::vector<Column>& columns, MergeLog& log);

}  // namespace tlayer::exact_search
