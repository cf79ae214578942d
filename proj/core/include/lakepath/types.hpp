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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lakepath {

// The closed set of column types. The numeric values are stable: they appear
// in file footers, batch frames and serialized plans.
enum class DataType : uint8_t {
    boolean = 1,
    int32 = 2,
    int64 = 3,
    float64 = 4,
    date32 = 5,  // days since 1970-01-01 UTC
    utf8 = 6,
};

const char* to_string(DataType dtype);
std::optional<DataType> data_type_from_string(std::string_view name);

constexpr bool is_fixed_width(DataType dtype) { return dtype != DataType::utf8; }

constexpr uint32_t fixed_width(DataType dtype) {
    switch (dtype) {
    case DataType::boolean:
        return 1;
    case DataType::int32:
    case DataType::date32:
        return 4;
    case DataType::int64:
    case DataType::float64:
        return 8;
    default:
        return 0;
    }
}

constexpr bool is_numeric(DataType dtype) {
    return dtype == DataType::int32 || dtype == DataType::int64 || dtype == DataType::float64;
}

// A single typed scalar. date32 values are carried as int32_t; the data type
// is always known from context.
using Value = std::variant<bool, int32_t, int64_t, double, std::string>;

// Total order in the column's native dtype; utf8 compares bytewise.
int compare_values(DataType dtype, const Value& a, const Value& b);

std::string value_to_string(DataType dtype, const Value& v);

// ISO-8601 yyyy-mm-dd <-> days since epoch.
std::optional<int32_t> date32_from_iso(std::string_view text);
std::string iso_from_date32(int32_t days);

struct Field {
    std::string name;
    DataType dtype = DataType::int64;
    bool nullable = true;

    bool operator==(const Field&) const = default;
};

// Ordered, uniquely named field list. The validating constructor throws
// ContractError on duplicates or an empty list; the default instance is only
// a staging placeholder for deserializers.
class Schema {
public:
    Schema() = default;
    explicit Schema(std::vector<Field> fields);

    const std::vector<Field>& fields() const { return fields_; }
    const Field& field(size_t i) const { return fields_[i]; }
    size_t num_fields() const { return fields_.size(); }
    std::optional<uint32_t> index_of(std::string_view name) const;

    bool operator==(const Schema&) const = default;

private:
    std::vector<Field> fields_;
};

}  // namespace lakepath
