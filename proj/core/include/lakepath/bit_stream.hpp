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
#include <string>
#include <vector>

#include "lakepath/error.hpp"

namespace lakepath {

// Bounds-checked little-endian cursor shared by the footer parser, page
// decoders and the wire protocol. The error code raised on underrun is set
// per consumer (e.g. "corrupt-metadata" vs "truncated-page").
class ByteReader {
public:
    ByteReader(std::span<const uint8_t> bytes, ErrorCategory category, std::string underrun_code)
        : bytes_(bytes), category_(category), code_(std::move(underrun_code)) {}

    size_t position() const { return pos_; }
    size_t remaining() const { return bytes_.size() - pos_; }
    bool exhausted() const { return pos_ == bytes_.size(); }

    std::span<const uint8_t> read_bytes(size_t n) {
        require(n);
        auto out = bytes_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    uint8_t read_u8() { return read_le<uint8_t>(); }
    uint16_t read_u16() { return read_le<uint16_t>(); }
    uint32_t read_u32() { return read_le<uint32_t>(); }
    uint64_t read_u64() { return read_le<uint64_t>(); }

    std::string read_string16() {
        const uint16_t n = read_u16();
        auto bytes = read_bytes(n);
        return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
    }

    // LEB128, at most 5 bytes (u32 domain).
    uint32_t read_varint() {
        uint32_t result = 0;
        for (int shift = 0; shift < 35; shift += 7) {
            const uint8_t byte = read_u8();
            result |= uint32_t(byte & 0x7F) << shift;
            if ((byte & 0x80) == 0) return result;
        }
        fail("varint too long");
    }

    [[noreturn]] void fail(const std::string& message) const;

private:
    template <typename T>
    T read_le() {
        require(sizeof(T));
        T v;
        std::memcpy(&v, bytes_.data() + pos_, sizeof(T));
        pos_ += sizeof(T);
        return v;
    }

    void require(size_t n) const {
        if (remaining() < n) fail("unexpected end of input");
    }

    std::span<const uint8_t> bytes_;
    size_t pos_ = 0;
    ErrorCategory category_;
    std::string code_;
};

class ByteWriter {
public:
    ByteWriter() = default;
    explicit ByteWriter(std::vector<uint8_t> initial) : out_(std::move(initial)) {}

    size_t size() const { return out_.size(); }
    std::vector<uint8_t> take() { return std::move(out_); }
    const std::vector<uint8_t>& bytes() const { return out_; }

    void put_u8(uint8_t v) { out_.push_back(v); }
    void put_u16(uint16_t v) { put_le(v); }
    void put_u32(uint32_t v) { put_le(v); }
    void put_u64(uint64_t v) { put_le(v); }

    void put_bytes(std::span<const uint8_t> bytes) {
        out_.insert(out_.end(), bytes.begin(), bytes.end());
    }
    void put_bytes(const void* data, size_t n) {
        const auto* p = static_cast<const uint8_t*>(data);
        out_.insert(out_.end(), p, p + n);
    }

    void put_string16(std::string_view s) {
        if (s.size() > UINT16_MAX) throw ContractError("string too long for u16 length prefix");
        put_u16(static_cast<uint16_t>(s.size()));
        put_bytes(s.data(), s.size());
    }

    void put_varint(uint32_t v) {
        while (v >= 0x80) {
            put_u8(uint8_t(v) | 0x80);
            v >>= 7;
        }
        put_u8(uint8_t(v));
    }

    // Patches a previously written u32 at `pos` (length back-fills).
    void patch_u32(size_t pos, uint32_t v) { std::memcpy(out_.data() + pos, &v, sizeof(v)); }

private:
    template <typename T>
    void put_le(T v) {
        const size_t old = out_.size();
        out_.resize(old + sizeof(T));
        std::memcpy(out_.data() + old, &v, sizeof(T));
    }

    std::vector<uint8_t> out_;
};

// Reads fixed-width values packed LSB-first at `bit_width` bits.
class BitReader {
public:
    BitReader(std::span<const uint8_t> bytes, uint32_t bit_width)
        : bytes_(bytes), bit_width_(bit_width) {}

    bool read(uint32_t& out) {
        if (bit_width_ == 0) {
            out = 0;
            return true;
        }
        const size_t end_bit = bit_pos_ + bit_width_;
        if (end_bit > bytes_.size() * 8) return false;
        uint64_t word = 0;
        const size_t first_byte = bit_pos_ >> 3;
        const size_t nbytes = ((end_bit + 7) >> 3) - first_byte;
        std::memcpy(&word, bytes_.data() + first_byte, nbytes);
        out = static_cast<uint32_t>((word >> (bit_pos_ & 7)) & mask());
        bit_pos_ = end_bit;
        return true;
    }

    size_t bytes_consumed() const { return (bit_pos_ + 7) / 8; }

private:
    uint64_t mask() const { return bit_width_ == 32 ? ~uint64_t(0) >> 32 : (uint64_t(1) << bit_width_) - 1; }

    std::span<const uint8_t> bytes_;
    uint32_t bit_width_;
    size_t bit_pos_ = 0;
};

class BitWriter {
public:
    explicit BitWriter(uint32_t bit_width) : bit_width_(bit_width) {}

    void write(uint32_t v) {
        if (bit_width_ == 0) return;
        buffer_ |= uint64_t(v) << filled_;
        filled_ += bit_width_;
        while (filled_ >= 8) {
            out_.push_back(static_cast<uint8_t>(buffer_));
            buffer_ >>= 8;
            filled_ -= 8;
        }
    }

    std::vector<uint8_t> finish() {
        if (filled_ > 0) {
            out_.push_back(static_cast<uint8_t>(buffer_));
            buffer_ = 0;
            filled_ = 0;
        }
        return std::move(out_);
    }

private:
    uint32_t bit_width_;
    uint64_t buffer_ = 0;
    uint32_t filled_ = 0;
    std::vector<uint8_t> out_;
};

}  // namespace lakepath
