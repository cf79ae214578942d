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
#include <mutex>
#include <vector>

namespace lakepath {

// Scratch-buffer recycler shared by all decoders. Buffers keep their
// capacity across uses so steady-state decoding stops allocating.
class BufferPool {
public:
    static BufferPool& instance();

    std::vector<uint8_t> acquire(size_t size_hint);
    void release(std::vector<uint8_t> buffer);

    size_t pooled_buffers() const;

private:
    mutable std::mutex mutex_;
    std::vector<std::vector<uint8_t>> free_;
    static constexpr size_t kMaxPooled = 64;
};

// RAII lease on a pooled buffer.
class PooledBuffer {
public:
    explicit PooledBuffer(size_t size_hint, BufferPool& pool = BufferPool::instance())
        : pool_(&pool), buffer_(pool.acquire(size_hint)) {}
    ~PooledBuffer() {
        if (pool_) pool_->release(std::move(buffer_));
    }
    PooledBuffer(const PooledBuffer&) = delete;
    PooledBuffer& operator=(const PooledBuffer&) = delete;

    std::vector<uint8_t>& get() { return buffer_; }

private:
    BufferPool* pool_;
    std::vector<uint8_t> buffer_;
};

}  // namespace lakepath
