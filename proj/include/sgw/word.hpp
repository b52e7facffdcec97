#ifndef SGW_WORD_HPP
#define SGW_WORD_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgw {

/// Raised when word text cannot be tokenized.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when well-formed input violates a structural invariant.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One occurrence of a letter.  Barred letters carry sign -1.
struct Letter {
  std::uint32_t name = 0;
  std::int8_t sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Signed double-occurrence word: each name appears exactly twice and both
/// occurrences carry the same sign.  The empty word is valid.
class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<Letter> letters);  // validates, throws validation_error

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::size_t letter_count() const { return letters_.size() / 2; }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const SignedWord&, const SignedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Deterministic total order: shorter first, then name sequence, then signs
/// with +1 before -1.  On canonical words this is the enumeration order.
struct WordLess {
  bool operator()(const SignedWord& a, const SignedWord& b) const;
};

/// "a".."z" for names 1..26, decimal text above that.
std::string name_text(std::uint32_t name);
/// Inverse of name_text; also accepts single letters case-insensitively.
std::uint32_t name_from_text(const std::string& text);

/// Accepts compact form ("aBaB": lowercase +1, uppercase -1) and token form
/// ("1+ 2- 1+ 2-", whitespace separated, names are identifiers or integers).
SignedWord parse_word(std::string_view text);

/// Compact form when every name fits in a..z, token form otherwise.
/// parse_word(format_word(w)) == w.
std::string format_word(const SignedWord& w);

std::ostream& operator<<(std::ostream& os, const SignedWord& w);

/// Relabels names 1, 2, 3, ... by first occurrence; signs unchanged.
SignedWord canonical_form(const SignedWord& w);

/// Sign-preserving renaming exists between u and w.
bool are_isomorphic(const SignedWord& u, const SignedWord& w);

/// 1 when isomorphic, 0 otherwise.
int indicator(const SignedWord& u, const SignedWord& w);

/// Distinct names, ascending.
std::vector<std::uint32_t> name_list(const SignedWord& w);

/// Subsequence of the occurrences whose name lies in `names` (sorted).
SignedWord restrict_to_names(const SignedWord& w, const std::vector<std::uint32_t>& names);

/// Calls fn once per k-subset of `names`, subsets in lexicographic order.
void for_each_name_subset(const std::vector<std::uint32_t>& names, std::size_t k,
                          const std::function<void(const std::vector<std::uint32_t>&)>& fn);

/// Canonical forms of the C(n, k) restrictions of w, in subset order.
std::vector<SignedWord> subwords_of_size(const SignedWord& w, std::size_t k);

/// Number of k-subsets of w's names whose restriction is isomorphic to u,
/// with k the letter count of u.
unsigned long long pairing(const SignedWord& u, const SignedWord& w);

/// Streams every isomorphism class of words with n names exactly once, in
/// canonical form, ordered by (occurrence pattern, sign vector).
class WordEnumerator {
 public:
  explicit WordEnumerator(std::size_t n);
  std::optional<SignedWord> next();

 private:
  SignedWord build() const;
  void advance();

  std::size_t n_;
  bool done_ = false;
  std::vector<std::size_t> partner_choice_;  // mixed-radix pattern counter
  unsigned long long sign_bits_ = 0;
};

/// Materialized enumeration, for small n.
std::vector<SignedWord> all_words(std::size_t n);

}  // namespace sgw

#endif
