#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace k3lm::detail {

/// Memo table shared by concurrent readers. Inserts are idempotent: every
/// writer computes the same value for a key, so the first insert wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace k3lm::detail
