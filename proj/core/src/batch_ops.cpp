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

#include "lakepath/batch_ops.hpp"

#include <unordered_set>

#include <fmt/format.h>

namespace lakepath {

std::optional<std::string> validate_batch(const ColumnBatch& batch) {
    if (batch.schema.num_fields() == 0) return "empty schema";
    {
        std::unordered_set<std::string_view> names;
        for (const auto& f : batch.schema.fields()) {
            if (!names.insert(f.name).second) return fmt::format("duplicate field name '{}'", f.name);
        }
    }
    if (batch.columns.size() != batch.schema.num_fields()) return "column count mismatch";
    for (size_t i = 0; i < batch.columns.size(); ++i) {
        const Column& col = batch.columns[i];
        const Field& field = batch.schema.field(i);
        auto tag = [&](const char* what) {
            return fmt::format("column '{}': {}", field.name, what);
        };
        if (col.dtype != field.dtype) return tag("dtype mismatch");
        if (col.length != batch.num_rows) return tag("column length mismatch");
        if (col.validity.size() != bitmap_bytes(col.length)) return tag("validity size mismatch");
        if (col.dtype == DataType::utf8) {
            if (col.offsets.size() != size_t(col.length) + 1) return tag("offsets length mismatch");
            if (!col.offsets.empty() && col.offsets.front() != 0) return tag("offsets must start at 0");
            for (size_t j = 0; j + 1 < col.offsets.size(); ++j) {
                if (col.offsets[j] > col.offsets[j + 1]) return tag("non-monotonic offsets");
            }
            if (!col.offsets.empty() && col.offsets.back() != col.data.size()) {
                return tag("offsets end mismatch");
            }
        } else {
            if (!col.offsets.empty()) return tag("unexpected offsets buffer");
            if (col.data.size() != size_t(col.length) * fixed_width(col.dtype)) {
                return tag("data size mismatch");
            }
        }
        if (!field.nullable && col.length > 0 && col.null_count() > 0) {
            return tag("null in non-nullable column");
        }
    }
    return std::nullopt;
}

namespace {

Column gather_column(const Column& src, std::span<const uint32_t> indices) {
    Column out;
    out.dtype = src.dtype;
    out.length = static_cast<uint32_t>(indices.size());
    out.validity.assign(bitmap_bytes(indices.size()), 0);
    for (size_t i = 0; i < indices.size(); ++i) {
        if (src.is_valid(indices[i])) set_bit(out.validity, i);
    }
    if (src.dtype == DataType::utf8) {
        out.offsets.reserve(indices.size() + 1);
        out.offsets.push_back(0);
        size_t total = 0;
        for (uint32_t idx : indices) total += src.offsets[idx + 1] - src.offsets[idx];
        out.data.reserve(total);
        for (uint32_t idx : indices) {
            auto sv = src.utf8_at(idx);
            out.data.insert(out.data.end(), sv.begin(), sv.end());
            out.offsets.push_back(static_cast<uint32_t>(out.data.size()));
        }
        return out;
    }
    const size_t width = fixed_width(src.dtype);
    out.data.resize(indices.size() * width);
    switch (width) {
    case 1:
        for (size_t i = 0; i < indices.size(); ++i) out.data[i] = src.data[indices[i]];
        break;
    case 4: {
        auto in = src.values<uint32_t>();
        auto dst = out.values_mut<uint32_t>();
        for (size_t i = 0; i < indices.size(); ++i) dst[i] = in[indices[i]];
        break;
    }
    case 8: {
        auto in = src.values<uint64_t>();
        auto dst = out.values_mut<uint64_t>();
        for (size_t i = 0; i < indices.size(); ++i) dst[i] = in[indices[i]];
        break;
    }
    default:
        throw ContractError("gather: invalid width");
    }
    // Keep null placeholders zeroed for bytewise-stable buffers.
    for (size_t i = 0; i < indices.size(); ++i) {
        if (!get_bit(out.validity, i)) {
            std::memset(out.data.data() + i * width, 0, width);
        }
    }
    return out;
}

}  // namespace

ColumnBatch apply_selection(const ColumnBatch& batch, const SelectionVector& sel) {
    if (sel.domain != batch.num_rows) {
        throw ContractError(fmt::format("apply_selection: domain {} != batch rows {}", sel.domain,
                                        batch.num_rows));
    }
    ColumnBatch out;
    out.schema = batch.schema;
    out.num_rows = static_cast<uint32_t>(sel.indices.size());
    out.columns.reserve(batch.columns.size());
    for (const auto& col : batch.columns) {
        out.columns.push_back(gather_column(col, sel.indices));
    }
    return out;
}

SelectionVector compose_selections(const SelectionVector& s1, const SelectionVector& s2) {
    if (s2.domain != s1.indices.size()) {
        throw ContractError("compose_selections: s2 domain must equal s1 length");
    }
    SelectionVector out;
    out.domain = s1.domain;
    out.indices.reserve(s2.indices.size());
    for (uint32_t i : s2.indices) out.indices.push_back(s1.indices[i]);
    return out;
}

ColumnBatch concat_batches(std::span<const ColumnBatch> batches) {
    if (batches.empty()) throw ContractError("concat_batches: empty list");
    const Schema& schema = batches.front().schema;
    for (const auto& b : batches) {
        if (!(b.schema == schema)) throw ContractError("concat_batches: schema mismatch");
    }
    uint64_t total = 0;
    for (const auto& b : batches) total += b.num_rows;

    ColumnBatch out;
    out.schema = schema;
    out.num_rows = static_cast<uint32_t>(total);
    for (size_t c = 0; c < schema.num_fields(); ++c) {
        const DataType dtype = schema.field(c).dtype;
        Column col;
        col.dtype = dtype;
        col.length = out.num_rows;
        col.validity.assign(bitmap_bytes(total), 0);
        size_t row = 0;
        if (dtype == DataType::utf8) col.offsets.push_back(0);
        for (const auto& b : batches) {
            const Column& src = b.columns[c];
            for (size_t i = 0; i < src.length; ++i, ++row) {
                if (src.is_valid(i)) set_bit(col.validity, row);
            }
            if (dtype == DataType::utf8) {
                const uint32_t base = static_cast<uint32_t>(col.data.size());
                col.data.insert(col.data.end(), src.data.begin(), src.data.end());
                for (size_t i = 1; i < src.offsets.size(); ++i) {
                    col.offsets.push_back(base + src.offsets[i]);
                }
            } else {
                col.data.insert(col.data.end(), src.data.begin(), src.data.end());
            }
        }
        out.columns.push_back(std::move(col));
    }
    return out;
}

bool batches_logically_equal(const ColumnBatch& a, const ColumnBatch& b) {
    if (!(a.schema == b.schema) || a.num_rows != b.num_rows) return false;
    for (size_t c = 0; c < a.columns.size(); ++c) {
        const Column& ca = a.columns[c];
        const Column& cb = b.columns[c];
        for (size_t i = 0; i < a.num_rows; ++i) {
            if (ca.is_valid(i) != cb.is_valid(i)) return false;
            if (ca.is_valid(i) && !cells_equal(ca, i, cb, i)) return false;
        }
    }
    return true;
}

ColumnBatch project_batch(const ColumnBatch& batch, std::span<const uint32_t> ordinals) {
    std::vector<Field> fields;
    ColumnBatch out;
    out.num_rows = batch.num_rows;
    for (uint32_t o : ordinals) {
        if (o >= batch.columns.size()) throw ContractError("project_batch: ordinal out of range");
        fields.push_back(batch.schema.field(o));
        out.columns.push_back(batch.columns[o]);
    }
    out.schema = Schema(std::move(fields));
    return out;
}

}  // namespace lakepath
