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

#include "lakepath/column.hpp"

#include <bit>

namespace lakepath {

uint64_t count_set_bits(std::span<const uint8_t> bm, size_t bits) {
    uint64_t total = 0;
    size_t full = bits / 8;
    for (size_t i = 0; i < full; ++i) total += std::popcount(bm[i]);
    if (bits % 8 != 0) {
        uint8_t mask = uint8_t((1u << (bits % 8)) - 1);
        total += std::popcount(uint8_t(bm[full] & mask));
    }
    return total;
}

Value Column::value_at(size_t i) const {
    switch (dtype) {
    case DataType::boolean:
        return data[i] != 0;
    case DataType::int32:
    case DataType::date32:
        return values<int32_t>()[i];
    case DataType::int64:
        return values<int64_t>()[i];
    case DataType::float64:
        return values<double>()[i];
    case DataType::utf8:
        return std::string(utf8_at(i));
    }
    throw ContractError("value_at: invalid dtype");
}

bool cells_equal(const Column& a, size_t ia, const Column& b, size_t ib) {
    switch (a.dtype) {
    case DataType::boolean:
        return (a.data[ia] != 0) == (b.data[ib] != 0);
    case DataType::int32:
    case DataType::date32:
        return a.values<int32_t>()[ia] == b.values<int32_t>()[ib];
    case DataType::int64:
        return a.values<int64_t>()[ia] == b.values<int64_t>()[ib];
    case DataType::float64:
        return a.values<double>()[ia] == b.values<double>()[ib];
    case DataType::utf8:
        return a.utf8_at(ia) == b.utf8_at(ib);
    }
    return false;
}

SelectionVector SelectionVector::identity(uint32_t n) {
    SelectionVector sel;
    sel.domain = n;
    sel.indices.resize(n);
    for (uint32_t i = 0; i < n; ++i) sel.indices[i] = i;
    return sel;
}

ColumnBuilder::ColumnBuilder(DataType dtype, size_t capacity_hint) : dtype_(dtype) {
    if (dtype == DataType::utf8) {
        offsets_.push_back(0);
        if (capacity_hint > 0) offsets_.reserve(capacity_hint + 1);
    } else if (capacity_hint > 0) {
        data_.reserve(capacity_hint * fixed_width(dtype));
    }
    if (capacity_hint > 0) validity_.reserve(bitmap_bytes(capacity_hint));
}

void ColumnBuilder::append_fixed(const void* bytes, size_t width) {
    size_t old = data_.size();
    data_.resize(old + width);
    std::memcpy(data_.data() + old, bytes, width);
}

void ColumnBuilder::append_null() {
    if (validity_.size() < bitmap_bytes(length_ + 1)) validity_.push_back(0);
    // placeholder stays zero / empty
    if (dtype_ == DataType::utf8) {
        offsets_.push_back(offsets_.back());
    } else {
        data_.resize(data_.size() + fixed_width(dtype_), 0);
    }
    ++length_;
}

#define LAKEPATH_APPEND_PROLOGUE()                                      \
    if (validity_.size() < bitmap_bytes(length_ + 1)) validity_.push_back(0); \
    set_bit(validity_, length_);                                        \
    ++length_;

void ColumnBuilder::append_bool(bool v) {
    LAKEPATH_APPEND_PROLOGUE();
    data_.push_back(v ? 1 : 0);
}

void ColumnBuilder::append_int32(int32_t v) {
    LAKEPATH_APPEND_PROLOGUE();
    append_fixed(&v, sizeof(v));
}

void ColumnBuilder::append_int64(int64_t v) {
    LAKEPATH_APPEND_PROLOGUE();
    append_fixed(&v, sizeof(v));
}

void ColumnBuilder::append_float64(double v) {
    LAKEPATH_APPEND_PROLOGUE();
    append_fixed(&v, sizeof(v));
}

void ColumnBuilder::append_utf8(std::string_view v) {
    LAKEPATH_APPEND_PROLOGUE();
    data_.insert(data_.end(), v.begin(), v.end());
    offsets_.push_back(static_cast<uint32_t>(data_.size()));
}

#undef LAKEPATH_APPEND_PROLOGUE

void ColumnBuilder::append_value(const Value& v) {
    switch (dtype_) {
    case DataType::boolean:
        append_bool(std::get<bool>(v));
        return;
    case DataType::int32:
    case DataType::date32:
        append_int32(std::get<int32_t>(v));
        return;
    case DataType::int64:
        append_int64(std::get<int64_t>(v));
        return;
    case DataType::float64:
        append_float64(std::get<double>(v));
        return;
    case DataType::utf8:
        append_utf8(std::get<std::string>(v));
        return;
    }
    throw ContractError("append_value: invalid dtype");
}

void ColumnBuilder::append_from(const Column& src, size_t i) {
    if (!src.is_valid(i)) {
        append_null();
        return;
    }
    switch (dtype_) {
    case DataType::boolean:
        append_bool(src.data[i] != 0);
        return;
    case DataType::int32:
    case DataType::date32:
        append_int32(src.values<int32_t>()[i]);
        return;
    case DataType::int64:
        append_int64(src.values<int64_t>()[i]);
        return;
    case DataType::float64:
        append_float64(src.values<double>()[i]);
        return;
    case DataType::utf8:
        append_utf8(src.utf8_at(i));
        return;
    }
}

Column ColumnBuilder::finish() {
    Column col;
    col.dtype = dtype_;
    col.length = length_;
    col.validity = std::move(validity_);
    col.data = std::move(data_);
    col.offsets = std::move(offsets_);
    if (dtype_ != DataType::utf8) col.offsets.clear();
    validity_.clear();
    data_.clear();
    offsets_.clear();
    if (dtype_ == DataType::utf8) offsets_.push_back(0);
    length_ = 0;
    return col;
}

Column make_column(DataType dtype, const std::vector<std::optional<Value>>& values) {
    ColumnBuilder builder(dtype, values.size());
    for (const auto& v : values) {
        if (v.has_value()) {
            builder.append_value(*v);
        } else {
            builder.append_null();
        }
    }
    return builder.finish();
}

ColumnBatch make_batch(const Schema& schema,
                       const std::vector<std::vector<std::optional<Value>>>& column_values) {
    if (schema.num_fields() != column_values.size()) {
        throw ContractError("make_batch: column count mismatch");
    }
    ColumnBatch batch;
    batch.schema = schema;
    batch.num_rows = column_values.empty() ? 0 : static_cast<uint32_t>(column_values[0].size());
    for (size_t i = 0; i < column_values.size(); ++i) {
        batch.columns.push_back(make_column(schema.field(i).dtype, column_values[i]));
    }
    return batch;
}

}  // namespace lakepath
