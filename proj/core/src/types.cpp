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

#include "lakepath/types.hpp"

#include <charconv>
#include <unordered_set>

#include <fmt/format.h>

#include "lakepath/error.hpp"

namespace lakepath {

const char* to_string(ErrorCategory category) {
    switch (category) {
    case ErrorCategory::decode:
        return "DecodeError";
    case ErrorCategory::plan:
        return "PlanError";
    case ErrorCategory::fetch:
        return "FetchError";
    case ErrorCategory::protocol:
        return "ProtocolError";
    case ErrorCategory::client:
        return "ClientError";
    }
    return "Error";
}

const char* to_string(DataType dtype) {
    switch (dtype) {
    case DataType::boolean:
        return "bool";
    case DataType::int32:
        return "int32";
    case DataType::int64:
        return "int64";
    case DataType::float64:
        return "float64";
    case DataType::date32:
        return "date32";
    case DataType::utf8:
        return "utf8";
    }
    return "invalid";
}

std::optional<DataType> data_type_from_string(std::string_view name) {
    if (name == "bool") return DataType::boolean;
    if (name == "int32") return DataType::int32;
    if (name == "int64") return DataType::int64;
    if (name == "float64") return DataType::float64;
    if (name == "date32") return DataType::date32;
    if (name == "utf8") return DataType::utf8;
    return std::nullopt;
}

namespace {

template <typename T>
int cmp(T a, T b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

}  // namespace

int compare_values(DataType dtype, const Value& a, const Value& b) {
    switch (dtype) {
    case DataType::boolean:
        return cmp<int>(std::get<bool>(a) ? 1 : 0, std::get<bool>(b) ? 1 : 0);
    case DataType::int32:
    case DataType::date32:
        return cmp(std::get<int32_t>(a), std::get<int32_t>(b));
    case DataType::int64:
        return cmp(std::get<int64_t>(a), std::get<int64_t>(b));
    case DataType::float64:
        return cmp(std::get<double>(a), std::get<double>(b));
    case DataType::utf8:
        return cmp<std::string_view>(std::get<std::string>(a), std::get<std::string>(b));
    }
    throw ContractError("compare_values: invalid dtype");
}

std::string value_to_string(DataType dtype, const Value& v) {
    switch (dtype) {
    case DataType::boolean:
        return std::get<bool>(v) ? "true" : "false";
    case DataType::int32:
        return fmt::format("{}", std::get<int32_t>(v));
    case DataType::date32:
        return iso_from_date32(std::get<int32_t>(v));
    case DataType::int64:
        return fmt::format("{}", std::get<int64_t>(v));
    case DataType::float64:
        return fmt::format("{}", std::get<double>(v));
    case DataType::utf8:
        return std::get<std::string>(v);
    }
    return {};
}

// Civil-date conversion (Gregorian, proleptic). Days are relative to
// 1970-01-01.
static int64_t days_from_civil(int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

static void civil_from_days(int64_t z, int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

std::optional<int32_t> date32_from_iso(std::string_view text) {
    // Strict yyyy-mm-dd.
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto parse_part = [&](size_t off, size_t len, int& out) {
        auto [ptr, ec] = std::from_chars(text.data() + off, text.data() + off + len, out);
        return ec == std::errc() && ptr == text.data() + off + len;
    };
    int y = 0, m = 0, d = 0;
    if (!parse_part(0, 4, y) || !parse_part(5, 2, m) || !parse_part(8, 2, d)) return std::nullopt;
    if (m < 1 || m > 12 || d < 1 || d > 31) return std::nullopt;
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (d > kDays[m - 1] + (m == 2 && leap ? 1 : 0)) return std::nullopt;
    return static_cast<int32_t>(days_from_civil(y, static_cast<unsigned>(m), static_cast<unsigned>(d)));
}

std::string iso_from_date32(int32_t days) {
    int64_t y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    return fmt::format("{:04}-{:02}-{:02}", y, m, d);
}

Schema::Schema(std::vector<Field> fields) : fields_(std::move(fields)) {
    if (fields_.empty()) {
        throw ContractError("schema must have at least one field");
    }
    std::unordered_set<std::string_view> names;
    for (const auto& f : fields_) {
        if (!names.insert(f.name).second) {
            throw ContractError("duplicate field name: " + f.name);
        }
    }
}

std::optional<uint32_t> Schema::index_of(std::string_view name) const {
    for (size_t i = 0; i < fields_.size(); ++i) {
        if (fields_[i].name == name) return static_cast<uint32_t>(i);
    }
    return std::nullopt;
}

}  // namespace lakepath
