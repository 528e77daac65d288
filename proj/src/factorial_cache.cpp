#include "sixj/factorial_cache.hpp"

#include <algorithm>

namespace sixj {

FactorialCache& FactorialCache::shared() {
  static FactorialCache cache;
  return cache;
}

FactorialCache::FactorialCache() : table_(std::make_shared<const Table>(Table{Integer(1)})) {}

std::shared_ptr<const FactorialCache::Table> FactorialCache::upto(std::size_t n) {
  std::lock_guard lock(mutex_);
  if (table_->size() > n) return table_;

  const std::size_t target = std::max(n + 1, 2 * table_->size());
  auto grown = std::make_shared<Table>(*table_);
  grown->reserve(target);
  while (grown->size() < target) {
    grown->push_back(grown->back() * static_cast<unsigned long>(grown->size()));
  }
  table_ = std::move(grown);
  return table_;
}

std::size_t FactorialCache::size() const {
  std::lock_guard lock(mutex_);
  return table_->size();
}

}  // namespace sixj
