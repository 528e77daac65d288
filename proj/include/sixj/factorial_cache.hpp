#pragma once

#include "sixj/real.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

namespace sixj {

/// Process-wide table of exact factorials 0!, 1!, ..., grown by doubling.
///
/// Readers receive an immutable snapshot; extension builds a new vector and
/// publishes it under a mutex, so snapshots already handed out stay valid
/// and unchanged while other threads grow the table.
class FactorialCache {
 public:
  using Table = std::vector<Integer>;

  static FactorialCache& shared();

  /// Snapshot holding at least n! (size() > n).
  std::shared_ptr<const Table> upto(std::size_t n);

  std::size_t size() const;

 private:
  FactorialCache();

  mutable std::mutex mutex_;
  std::shared_ptr<const Table> table_;
};

}  // namespace sixj
