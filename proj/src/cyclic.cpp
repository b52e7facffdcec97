#include "sgw/cyclic.hpp"

#include <algorithm>
#include <set>

namespace sgw {

void WordVector::add(const SignedWord& w, const Rational& coeff) {
  if (coeff.is_zero()) return;
  SignedWord key = canonical_form(w);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) entries_.erase(it);
}

Rational WordVector::coeff(const SignedWord& w) const {
  auto it = entries_.find(canonical_form(w));
  return it == entries_.end() ? Rational(0) : it->second;
}

WordVector& WordVector::operator+=(const WordVector& o) {
  for (const auto& [w, c] : o.entries_) add(w, c);
  return *this;
}

WordVector WordVector::scaled(const Rational& c) const {
  WordVector out;
  if (c.is_zero()) return out;
  for (const auto& [w, v] : entries_) out.entries_.emplace(w, v * c);
  return out;
}

std::optional<std::size_t> WordVector::homogeneous_size() const {
  std::optional<std::size_t> len;
  for (const auto& [w, c] : entries_) {
    if (!len) len = w.size();
    else if (*len != w.size()) return std::nullopt;
  }
  return len;
}

CyclicClass::CyclicClass(std::vector<SignedWord> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), WordLess{});
}

bool CyclicClass::contains(const SignedWord& w) const {
  return std::binary_search(members_.begin(), members_.end(), canonical_form(w), WordLess{});
}

SignedWord nu_shift_concrete(const SignedWord& w) {
  if (w.empty()) return w;
  const auto& seq = w.letters();
  Letter moved = seq.front();
  std::vector<Letter> out(seq.begin() + 1, seq.end());
  out.push_back(moved);
  for (Letter& l : out) {
    if (l.name == moved.name) l.sign = static_cast<std::int8_t>(-l.sign);
  }
  return SignedWord(std::move(out));
}

SignedWord nu_power_concrete(const SignedWord& w, std::size_t k) {
  SignedWord out = w;
  for (std::size_t i = 0; i < k; ++i) out = nu_shift_concrete(out);
  return out;
}

SignedWord nu_shift(const SignedWord& w) {
  return canonical_form(nu_shift_concrete(w));
}

CyclicClass orbit(const SignedWord& w) {
  const SignedWord start = canonical_form(w);
  std::vector<SignedWord> members;
  SignedWord cur = start;
  do {
    members.push_back(cur);
    cur = nu_shift(cur);
  } while (!(cur == start));
  return CyclicClass(std::move(members));
}

WordVector class_sum(const SignedWord& w) {
  WordVector out;
  const CyclicClass cls = orbit(w);
  for (const SignedWord& m : cls.members()) out.add(m, 1);
  return out;
}

WordVector class_sum(const WordVector& v) {
  WordVector out;
  for (const auto& [w, c] : v.entries()) out += class_sum(w).scaled(c);
  return out;
}

WordVector normalized_class(const SignedWord& w) {
  CyclicClass c = orbit(w);
  WordVector out;
  Rational coeff(1, static_cast<long long>(c.size()));
  for (const SignedWord& m : c.members()) out.add(m, coeff);
  return out;
}

std::vector<CyclicClass> enumerate_classes(std::size_t n) {
  std::vector<CyclicClass> out;
  std::set<SignedWord, WordLess> seen;
  WordEnumerator en(n);
  while (auto w = en.next()) {
    if (seen.contains(*w)) continue;
    CyclicClass c = orbit(*w);
    for (const SignedWord& m : c.members()) seen.insert(m);
    out.push_back(std::move(c));
  }
  return out;
}

WordVector nu_linear(const WordVector& v) {
  WordVector out;
  for (const auto& [w, c] : v.entries()) out.add(nu_shift(w), c);
  return out;
}

bool is_nu_invariant(const WordVector& v) {
  return nu_linear(v) == v;
}

}  // namespace sgw
