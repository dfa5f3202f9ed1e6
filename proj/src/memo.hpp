#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace hopftrees::detail {

// Thread-safe memo for pure basis-level functions.
template <class K, class V>
class Memo {
 public:
  template <class F>
  V get(const K& k, F&& compute) {
    {
      std::lock_guard lock(mu_);
      if (auto it = map_.find(k); it != map_.end()) return it->second;
    }
    V v = compute();
    std::lock_guard lock(mu_);
    return map_.emplace(k, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<K, V> map_;
};

}  // namespace hopftrees::detail
