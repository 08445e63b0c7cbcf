#include "wesym/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wesym/error.hpp"

namespace wesym {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

}  // namespace

std::uint64_t code_key(const LinearCode& code) {
  std::uint64_t h = kFnvOffset;
  mix(h, code.F().q());
  mix(h, code.n());
  mix(h, code.k());
  std::vector<Row> rows = code.gen();
  row_reduce(code.F(), rows);
  for (const auto& r : rows) {
    for (Elem e : r) mix(h, e);
  }
  return h;
}

EnumeratorCache::EnumeratorCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::filesystem::path EnumeratorCache::file_for(std::uint64_t key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.wen", static_cast<unsigned long long>(key));
  return *dir_ / name;
}

std::optional<WeightEnumerator> EnumeratorCache::lookup(const LinearCode& code) {
  const std::uint64_t key = code_key(code);
  std::lock_guard lock(mu_);
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  if (dir_) {
    std::ifstream in(file_for(key));
    std::size_t n = 0;
    if (in >> n && n == code.n()) {
      WeightEnumerator w;
      w.coeffs.resize(n + 1);
      bool ok = true;
      for (auto& c : w.coeffs) ok = ok && static_cast<bool>(in >> c);
      if (ok) {
        w.q = code.F().q();
        w.k = code.k();
        memo_.emplace(key, w);
        ++hits_;
        return w;
      }
    }
  }
  ++misses_;
  return std::nullopt;
}

void EnumeratorCache::store(const LinearCode& code, const WeightEnumerator& w) {
  const std::uint64_t key = code_key(code);
  std::lock_guard lock(mu_);
  memo_[key] = w;
  if (!dir_) return;
  // Write then rename so concurrent readers never see a partial file.
  const auto path = file_for(key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << w.degree() << '\n';
    for (const auto& c : w.coeffs) out << c.get_str() << '\n';
    if (!out) throw Error(Errc::InvalidArgument, "cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

WeightEnumerator EnumeratorCache::get(const LinearCode& code, const EnumerationOptions& opts) {
  if (auto w = lookup(code)) return *w;
  WeightEnumerator w = weight_enumerator_smart(code, opts);
  store(code, w);
  return w;
}

}  // namespace wesym
