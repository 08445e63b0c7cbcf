#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "wesym/code.hpp"

namespace wesym {

// FNV-1a 64 over q, n, k and the RREF generator rows; equal codes share a key.
std::uint64_t code_key(const LinearCode& code);

// Weight enumerators memoized in memory and, with a directory, on disk as
// <key>.wen files holding n followed by A_0..A_n, one per line.
class EnumeratorCache {
 public:
  explicit EnumeratorCache(std::optional<std::filesystem::path> dir = std::nullopt);

  std::optional<WeightEnumerator> lookup(const LinearCode& code);
  void store(const LinearCode& code, const WeightEnumerator& w);
  // lookup, else weight_enumerator_smart and store.
  WeightEnumerator get(const LinearCode& code, const EnumerationOptions& opts = {});

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  std::filesystem::path file_for(std::uint64_t key) const;

  std::optional<std::filesystem::path> dir_;
  std::unordered_map<std::uint64_t, WeightEnumerator> memo_;
  std::mutex mu_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace wesym
