#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace weyld::detail {

// Thread-safe compute-once cache. The producer runs without the lock held,
// so it may recurse into the same cache; two threads racing on a missing key
// both compute and the first insertion wins (values are pure functions of
// the key, so the loser's result is identical).
template <class Key, class Value>
class Memo {
 public:
  template <class Producer>
  Value get_or_compute(const Key& key, Producer&& produce) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = std::forward<Producer>(produce)();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace weyld::detail
