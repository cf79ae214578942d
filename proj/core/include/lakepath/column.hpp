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

#include <cstring>
#include <span>
#include <string_view>

#include "lakepath/error.hpp"
#include "lakepath/types.hpp"

namespace lakepath {

// LSB-first bitmaps, bit set = value present.
inline size_t bitmap_bytes(size_t bits) { return (bits + 7) / 8; }
inline bool get_bit(std::span<const uint8_t> bm, size_t i) { return (bm[i >> 3] >> (i & 7)) & 1; }
inline void set_bit(std::span<uint8_t> bm, size_t i) { bm[i >> 3] |= uint8_t(1u << (i & 7)); }
inline void clear_bit(std::span<uint8_t> bm, size_t i) { bm[i >> 3] &= uint8_t(~(1u << (i & 7))); }
uint64_t count_set_bits(std::span<const uint8_t> bm, size_t bits);

// One decoded column. Buffers are plain vectors so that malformed instances
// can be constructed and fed to validate_batch; every producer in this
// library emits validated columns with zeroed placeholders at null slots.
//
// Fixed-width types store `length * fixed_width(dtype)` bytes in `data`,
// little-endian. utf8 stores `length + 1` offsets plus the byte payload in
// `data`.
struct Column {
    DataType dtype = DataType::int64;
    uint32_t length = 0;
    std::vector<uint8_t> validity;
    std::vector<uint8_t> data;
    std::vector<uint32_t> offsets;

    size_t size() const { return length; }

    bool is_valid(size_t i) const { return get_bit(validity, i); }
    uint64_t null_count() const { return length - count_set_bits(validity, length); }

    template <typename T>
    std::span<const T> values() const {
        return {reinterpret_cast<const T*>(data.data()), data.size() / sizeof(T)};
    }
    template <typename T>
    std::span<T> values_mut() {
        return {reinterpret_cast<T*>(data.data()), data.size() / sizeof(T)};
    }

    std::string_view utf8_at(size_t i) const {
        return {reinterpret_cast<const char*>(data.data()) + offsets[i], offsets[i + 1] - offsets[i]};
    }

    // Present value at row i (caller checks validity first).
    Value value_at(size_t i) const;

    // Approximate heap footprint, used for join budget accounting.
    uint64_t byte_size() const {
        return validity.size() + data.size() + offsets.size() * sizeof(uint32_t);
    }
};

// Compares the cell values (not validity) of two columns of the same dtype.
bool cells_equal(const Column& a, size_t ia, const Column& b, size_t ib);

struct ColumnBatch {
    Schema schema;
    std::vector<Column> columns;
    uint32_t num_rows = 0;

    uint64_t byte_size() const {
        uint64_t total = 0;
        for (const auto& c : columns) total += c.byte_size();
        return total;
    }
};

// Strictly increasing row positions into a batch of `domain` rows.
struct SelectionVector {
    std::vector<uint32_t> indices;
    uint32_t domain = 0;

    static SelectionVector identity(uint32_t n);
    size_t size() const { return indices.size(); }
};

// Incremental column construction; null slots get zero/empty placeholders.
class ColumnBuilder {
public:
    explicit ColumnBuilder(DataType dtype, size_t capacity_hint = 0);

    DataType dtype() const { return dtype_; }
    size_t size() const { return length_; }

    void append_null();
    void append_bool(bool v);
    void append_int32(int32_t v);  // int32 and date32
    void append_int64(int64_t v);
    void append_float64(double v);
    void append_utf8(std::string_view v);
    void append_value(const Value& v);
    // Copies row i of `src` (same dtype), validity included.
    void append_from(const Column& src, size_t i);

    Column finish();

private:
    void append_fixed(const void* bytes, size_t width);

    DataType dtype_;
    uint32_t length_ = 0;
    std::vector<uint8_t> validity_;
    std::vector<uint8_t> data_;
    std::vector<uint32_t> offsets_;
};

// Batch construction helpers used across tests and the data generator.
Column make_column(DataType dtype, const std::vector<std::optional<Value>>& values);
ColumnBatch make_batch(const Schema& schema,
                       const std::vector<std::vector<std::optional<Value>>>& column_values);

}  // namespace lakepath
