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

// utf8 zone-map entries are bounded: min is truncated, max is truncated and
// rounded up at the cut so the stored interval still covers every value.
inline constexpr size_t kZoneMapUtf8Limit = 64;

struct ColumnStats {
    std::optional<Value> min;  // absent iff every value in the zone is null
    std::optional<Value> max;
    uint64_t null_count = 0;
};

struct ZoneMap {
    std::vector<ColumnStats> columns;
    uint64_t row_count = 0;
};

ZoneMap compute_zone_map(const ColumnBatch& batch);

// Combines two maps over disjoint row ranges of the same schema; absent
// bounds are neutral.
ZoneMap merge_zone_maps(const ZoneMap& a, const ZoneMap& b);

// Lower bound: at most kZoneMapUtf8Limit leading bytes.
std::string truncate_utf8_min(std::string_view s);
// Upper bound: truncate then round the last byte up; falls back to the full
// string when every byte is 0xFF (rounding impossible).
std::string truncate_utf8_max(std::string_view s);

}  // namespace lakepath
