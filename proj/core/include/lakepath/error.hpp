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
#include <stdexcept>
#include <string>
#include <utility>

namespace lakepath {

// Error categories that cross the wire (Error frames carry the numeric value).
enum class ErrorCategory : uint8_t {
    decode = 1,
    plan = 2,
    fetch = 3,
    protocol = 4,
    client = 5,
};

const char* to_string(ErrorCategory category);

// Base for all recoverable runtime failures. `code` is a stable short slug
// (e.g. "truncated-page") suitable for matching in tests and clients.
class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string code, const std::string& message)
        : std::runtime_error(std::string(to_string(category)) + "(" + code + "): " + message),
          category_(category),
          code_(std::move(code)) {}

    ErrorCategory category() const { return category_; }
    const std::string& code() const { return code_; }

private:
    ErrorCategory category_;
    std::string code_;
};

class DecodeError : public Error {
public:
    DecodeError(std::string code, const std::string& message)
        : Error(ErrorCategory::decode, std::move(code), message) {}
};

class PlanError : public Error {
public:
    PlanError(std::string code, const std::string& message)
        : Error(ErrorCategory::plan, std::move(code), message) {}
};

// Expression evaluation failures (e.g. integer overflow). Reported under the
// plan category on the wire.
class EvalError : public Error {
public:
    EvalError(std::string code, const std::string& message)
        : Error(ErrorCategory::plan, std::move(code), message) {}
};

class FetchError : public Error {
public:
    FetchError(std::string code, const std::string& message)
        : Error(ErrorCategory::fetch, std::move(code), message) {}
};

class ProtocolError : public Error {
public:
    explicit ProtocolError(const std::string& message, std::string code = "protocol")
        : Error(ErrorCategory::protocol, std::move(code), message) {}
};

class ClientError : public Error {
public:
    ClientError(std::string code, const std::string& message)
        : Error(ErrorCategory::client, std::move(code), message) {}
};

// Violated API precondition; callers are expected to never trigger these.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& message) : std::logic_error(message) {}
};

}  // namespace lakepath
