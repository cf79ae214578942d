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

#include "lakepath/bit_stream.hpp"

namespace lakepath {

[[noreturn]] void ByteReader::fail(const std::string& message) const {
    switch (category_) {
    case ErrorCategory::decode:
        throw DecodeError(code_, message);
    case ErrorCategory::protocol:
        throw ProtocolError(message, code_);
    case ErrorCategory::fetch:
        throw FetchError(code_, message);
    case ErrorCategory::plan:
        throw PlanError(code_, message);
    case ErrorCategory::client:
        throw ClientError(code_, message);
    }
    throw Error(category_, code_, message);
}

}  // namespace lakepath
