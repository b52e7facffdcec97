#ifndef SGW_CYCLIC_HPP
#define SGW_CYCLIC_HPP

#include <map>
#include <optional>
#include <vector>

#include "sgw/rational.hpp"
#include "sgw/word.hpp"

namespace sgw {

/// Finitely supported rational combination of canonical words.  Keys are
/// always canonical; zero coefficients are dropped.
class WordVector {
 public:
  using Map = std::map<SignedWord, Rational, WordLess>;

  WordVector() = default;

  void add(const SignedWord& w, const Rational& coeff);
  Rational coeff(const SignedWord& w) const;
  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  WordVector& operator+=(const WordVector& o);
  friend WordVector operator+(WordVector a, const WordVector& b) { return a += b; }
  WordVector scaled(const Rational& c) const;

  /// Common word length when every key agrees, nullopt for mixed lengths.
  std::optional<std::size_t> homogeneous_size() const;

  friend bool operator==(const WordVector&, const WordVector&) = default;

 private:
  Map entries_;
};

/// One shift orbit of isomorphism classes; members canonical and sorted.
class CyclicClass {
 public:
  explicit CyclicClass(std::vector<SignedWord> members);

  const std::vector<SignedWord>& members() const& { return members_; }
  std::vector<SignedWord> members() && { return std::move(members_); }
  std::size_t size() const { return members_.size(); }
  const SignedWord& least() const& { return members_.front(); }
  SignedWord least() && { return std::move(members_.front()); }
  bool contains(const SignedWord& w) const;

  friend bool operator==(const CyclicClass&, const CyclicClass&) = default;

 private:
  std::vector<SignedWord> members_;
};

/// Rotates the word left by one occurrence and negates the sign of the
/// rotated letter (both of its occurrences).  No relabeling.
SignedWord nu_shift_concrete(const SignedWord& w);

/// k-fold concrete shift; k == size() is the identity.
SignedWord nu_power_concrete(const SignedWord& w, std::size_t k);

/// Canonical form of the concrete shift.
SignedWord nu_shift(const SignedWord& w);

/// Shift orbit of w's isomorphism class.
CyclicClass orbit(const SignedWord& w);

/// Sum of the orbit members with coefficient 1.
WordVector class_sum(const SignedWord& w);

/// Linear extension of class_sum.
WordVector class_sum(const WordVector& v);

/// class_sum(w) scaled by 1 / orbit size.
WordVector normalized_class(const SignedWord& w);

/// All shift orbits of words with n names, ordered by least member.
std::vector<CyclicClass> enumerate_classes(std::size_t n);

/// Applies the shift to each key, linearly.
WordVector nu_linear(const WordVector& v);

bool is_nu_invariant(const WordVector& v);

}  // namespace sgw

#endif
