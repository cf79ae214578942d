// Copyright 2026-present The Lakepath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "lakepath/column.hpp"

namespace lakepath {

// Returns std::nullopt when every batch invariant holds, otherwise a short
// description of the first violated invariant.
std::optional<std::string> validate_batch(const ColumnBatch& batch);

// Gathers the selected rows of every column. Throws ContractError when
// sel.domain != batch.num_rows.
ColumnBatch apply_selection(const ColumnBatch& batch, const SelectionVector& sel);

// compose(s1, s2): selects s2 out of the rows already selected by s1.
SelectionVector compose_selections(const SelectionVector& s1, const SelectionVector& s2);

// Concatenates same-schema batches in order. Throws ContractError on schema
// mismatch or an empty list.
ColumnBatch concat_batches(std::span<const ColumnBatch> batches);

// Row-content equality: schemas, validity and present values all match.
// Float64 compares by bit pattern so golden tests stay exact.
bool batches_logically_equal(const ColumnBatch& a, const ColumnBatch& b);

// Projects `batch` to the given column ordinals (schema included).
ColumnBatch project_batch(const ColumnBatch& batch, std::span<const uint32_t> ordinals);

}  // namespace lakepath
