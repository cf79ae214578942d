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

#include "lakepath/zone_map.hpp"

namespace lakepath {

std::string truncate_utf8_min(std::string_view s) {
    return std::string(s.substr(0, kZoneMapUtf8Limit));
}

std::string truncate_utf8_max(std::string_view s) {
    if (s.size() <= kZoneMapUtf8Limit) return std::string(s);
    std::string prefix(s.substr(0, kZoneMapUtf8Limit));
    for (size_t i = prefix.size(); i-- > 0;) {
        if (static_cast<uint8_t>(prefix[i]) != 0xFF) {
            prefix[i] = static_cast<char>(static_cast<uint8_t>(prefix[i]) + 1);
            prefix.resize(i + 1);
            return prefix;
        }
    }
    return std::string(s);
}

namespace {

ColumnStats column_stats(const Column& col) {
    ColumnStats stats;
    bool seen = false;
    Value min_v, max_v;
    for (size_t i = 0; i < col.length; ++i) {
        if (!col.is_valid(i)) {
            ++stats.null_count;
            continue;
        }
        Value v = col.value_at(i);
        if (!seen) {
            min_v = v;
            max_v = v;
            seen = true;
            continue;
        }
        if (compare_values(col.dtype, v, min_v) < 0) min_v = v;
        if (compare_values(col.dtype, v, max_v) > 0) max_v = v;
    }
    if (seen) {
        if (col.dtype == DataType::utf8) {
            stats.min = truncate_utf8_min(std::get<std::string>(min_v));
            stats.max = truncate_utf8_max(std::get<std::string>(max_v));
        } else {
            stats.min = std::move(min_v);
            stats.max = std::move(max_v);
        }
    }
    return stats;
}

}  // namespace

ZoneMap compute_zone_map(const ColumnBatch& batch) {
    ZoneMap zm;
    zm.row_count = batch.num_rows;
    zm.columns.reserve(batch.columns.size());
    for (const auto& col : batch.columns) zm.columns.push_back(column_stats(col));
    return zm;
}

ZoneMap merge_zone_maps(const ZoneMap& a, const ZoneMap& b) {
    if (a.columns.size() != b.columns.size()) {
        throw ContractError("merge_zone_maps: column count mismatch");
    }
    ZoneMap out;
    out.row_count = a.row_count + b.row_count;
    out.columns.resize(a.columns.size());
    for (size_t i = 0; i < a.columns.size(); ++i) {
        const ColumnStats& sa = a.columns[i];
        const ColumnStats& sb = b.columns[i];
        ColumnStats& dst = out.columns[i];
        dst.null_count = sa.null_count + sb.null_count;
        // Merged bounds need no re-truncation: inputs are already bounded and
        // picking either side preserves coverage. Ordering only needs the
        // variant's own type, recovered from its index.
        auto dtype_of = [](const Value& v) {
            switch (v.index()) {
            case 0:
                return DataType::boolean;
            case 1:
                return DataType::int32;
            case 2:
                return DataType::int64;
            case 3:
                return DataType::float64;
            default:
                return DataType::utf8;
            }
        };
        auto pick = [&](const std::optional<Value>& x, const std::optional<Value>& y,
                        int dir) -> std::optional<Value> {
            if (!x) return y;
            if (!y) return x;
            return compare_values(dtype_of(*x), *x, *y) * dir <= 0 ? x : y;
        };
        dst.min = pick(sa.min, sb.min, 1);
        dst.max = pick(sa.max, sb.max, -1);
    }
    return out;
}

}  // namespace lakepath
