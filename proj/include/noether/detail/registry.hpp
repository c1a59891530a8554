// Copyright 2026 The Noether Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "noether/errors.hpp"

namespace noether::detail {

/// Append-only table of immutable records with content-keyed interning.
/// Records never move once inserted, so references stay valid for the
/// lifetime of the registry. Interning the same key twice yields the same
/// index even under concurrent construction.
template <class T>
class Registry {
 public:
  using Key = std::vector<std::uint32_t>;

  Registry() = default;
  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

  template <class Make>
  std::uint32_t intern(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(key); it != index_.end()) return it->second;
    }
    // Built outside the lock: construction may intern into other registries.
    auto record = std::make_unique<const T>(make());
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(records_.size());
    records_.push_back(std::move(record));
    index_.emplace(key, id);
    return id;
  }

  const T& at(std::uint32_t id, const char* what) const {
    std::shared_lock lock(mutex_);
    if (id >= records_.size()) {
      throw DomainError(std::string("unknown ") + what + " handle #" +
                        std::to_string(id));
    }
    return *records_[id];
  }

  bool contains(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return id < records_.size();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<std::unique_ptr<const T>> records_;
  std::map<Key, std::uint32_t> index_;
};

/// Order, meet and join tables of a finite bounded lattice.
struct LatticeTables {
  std::uint32_t size = 0;
  std::vector<char> leq;             // size x size
  std::vector<std::uint32_t> meet;   // size x size
  std::vector<std::uint32_t> join;   // size x size
  std::uint32_t bottom = 0;
  std::uint32_t top = 0;

  bool le(std::uint32_t a, std::uint32_t b) const { return leq[a * size + b]; }
  std::uint32_t m(std::uint32_t a, std::uint32_t b) const {
    return meet[a * size + b];
  }
  std::uint32_t j(std::uint32_t a, std::uint32_t b) const {
    return join[a * size + b];
  }
};

}  // namespace noether::detail
