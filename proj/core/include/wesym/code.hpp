#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "wesym/gf.hpp"

namespace wesym {

using Row = std::vector<Elem>;

// Linear [n,k] code over a finite field given by a full-rank generator
// matrix. k == 0 is the zero code.
class LinearCode {
 public:
  // Rejects ragged rows (RaggedRows) and dependent rows (RankDeficient).
  LinearCode(FieldPtr field, std::size_t n, std::vector<Row> gen, std::string name = {});

  const FieldPtr& field() const noexcept { return field_; }
  const Field& F() const noexcept { return *field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return gen_.size(); }
  const std::vector<Row>& gen() const noexcept { return gen_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Row> gen_;
  std::string name_;
};

// A_0..A_n of sum A_i x^(n-i) y^i.
struct WeightEnumerator {
  std::vector<mpz_class> coeffs;
  std::optional<unsigned> q;  // provenance, present for enumerated codes
  std::optional<std::size_t> k;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const WeightEnumerator& o) const { return coeffs == o.coeffs; }
};

WeightEnumerator make_enumerator(std::vector<long long> coeffs);

// --- linear algebra -------------------------------------------------------

// Reduced row echelon form; zero rows dropped. Returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& F, std::vector<Row>& rows);
std::size_t rank(const Field& F, std::vector<Row> rows);

// --- construction ---------------------------------------------------------

LinearCode code_from_matrix(FieldPtr field, std::vector<Row> rows, std::string name = {});
LinearCode zero_code(FieldPtr field, std::size_t n);
LinearCode full_space(FieldPtr field, std::size_t n);
LinearCode repetition(FieldPtr field, std::size_t n);

inline constexpr std::uint64_t kDefaultLengthCap = 1u << 20;

LinearCode reed_muller(FieldPtr field, unsigned r, unsigned m,
                       std::uint64_t length_cap = kDefaultLengthCap);
LinearCode projective_reed_muller(FieldPtr field, unsigned r, unsigned m,
                                  std::uint64_t length_cap = kDefaultLengthCap);

// hamming8, golay24, golay12_ternary, X1..X5. Throws UnknownName.
LinearCode named_code(std::string_view name);
std::vector<std::string> named_code_keys();

LinearCode dual(const LinearCode& code);
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

// --- enumeration ----------------------------------------------------------

enum class Kernel { Auto, Generic };

struct EnumerationOptions {
  std::uint64_t budget = std::uint64_t{1} << 32;
  unsigned threads = 0;  // 0: hardware concurrency
  unsigned ranges = 0;   // 0: derived from threads
  Kernel kernel = Kernel::Auto;
};

// Exhaustive enumeration in q-ary Gray order. Throws TooLarge if q^k > budget.
WeightEnumerator weight_enumerator(const LinearCode& code, const EnumerationOptions& opts = {});

// Enumerates the smaller of the code and its dual, using MacWilliams for the
// latter. Throws TooLarge if neither fits.
WeightEnumerator weight_enumerator_smart(const LinearCode& code,
                                         const EnumerationOptions& opts = {});

// Number of codewords, saturating at UINT64_MAX.
std::uint64_t codeword_count(unsigned q, std::size_t k) noexcept;

WeightEnumerator macwilliams(const WeightEnumerator& w, unsigned q, std::size_t k);
WeightEnumerator macwilliams(const WeightEnumerator& w);

// gcd of the nonzero weights that occur; 0 for x^n.
std::size_t divisibility(const WeightEnumerator& w);

// --- io -------------------------------------------------------------------

// "q k n" then k rows of n element indices.
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const LinearCode& code);

}  // namespace wesym
