#ifndef SGW_SCI_HPP
#define SGW_SCI_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgw/cyclic.hpp"
#include "sgw/rational.hpp"
#include "sgw/word.hpp"

namespace sgw {

/// A linear functional on shift-invariant combinations of words with n
/// letters, stored by its value on each cyclic class. Keys are the canonical
/// text of the least member of the class; absent keys mean value zero. The
/// stored number is the value on any single representative word, so the value
/// on the class sum is that number times the class size.
class Functional {
 public:
  Functional() = default;
  explicit Functional(std::size_t order) : order_(order) {}

  std::size_t order() const { return order_; }
  const std::map<std::string, Rational>& values() const& { return values_; }
  std::map<std::string, Rational> values() && { return std::move(values_); }

  void add(const std::string& class_key, const Rational& v);
  Rational value_on_class_key(const std::string& class_key) const;
  Rational value_on_word(const SignedWord& w) const;
  Rational value_on_vector(const WordVector& v) const;

  Functional& operator+=(const Functional& o);
  Functional scaled(const Rational& c) const;
  bool is_zero() const { return values_.empty(); }
  bool operator==(const Functional&) const = default;

 private:
  std::size_t order_ = 0;
  std::map<std::string, Rational> values_;
};

/// Class key of a word: canonical text of the least member of its orbit.
std::string class_key(const SignedWord& w);

/// Counts, for every size-n subset of gamma's names, which class the
/// restricted subword lands in. The result applied to a word u with n letters
/// equals the number of subsets whose restriction is isomorphic to u.
Functional sci(std::size_t n, const SignedWord& gamma);

/// sci extended linearly to a combination of words, each with at least n
/// letters.
Functional sci_linear(std::size_t n, const WordVector& v);

/// Writes a shift-invariant combination of n-letter words in the basis of
/// normalized class sums and records the coefficients as a functional.
/// Throws validation_error if v is not shift invariant or not homogeneous of
/// size n.
Functional iota(std::size_t n, const WordVector& v);

/// Inverse of iota: the combination sum_c F(c) * (class sum of c) / |c|.
WordVector iota_inv(const Functional& f);

/// sci_l applied to the combination iota_inv(sci_k(gamma)). Requires l <= k.
Functional compose_sci(std::size_t l, std::size_t k, const SignedWord& gamma);

/// The scalar compose_sci(l,k,gamma) / sci(l,gamma) is predicted to be the
/// binomial coefficient C(n-l, k-l) where n is gamma's letter count. One row
/// per corpus word compares the measured ratio against that and against the
/// closed form (n-k+1)! / ((n-l-1)! (k-l)!).
struct AuditRow {
  std::string label;
  std::size_t n = 0;
  Rational measured_lambda;
  std::optional<Rational> paper_coefficient;
  Rational oracle_coefficient;
  bool proportional = false;
  std::vector<std::string> failures;
};

struct AuditReport {
  std::size_t l = 0;
  std::size_t k = 0;
  std::vector<AuditRow> rows;
  std::vector<std::string> skipped;  // labels of words with fewer than k letters
  bool all_proportional = true;
};

struct CorpusWord {
  std::string label;
  SignedWord word;
};

AuditReport relation_audit(std::size_t l, std::size_t k,
                           const std::vector<CorpusWord>& corpus,
                           unsigned workers = 1);

}  // namespace sgw

#endif
