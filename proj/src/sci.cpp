#include "sgw/sci.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "sgw/parallel.hpp"

namespace sgw {

void Functional::add(const std::string& class_key, const Rational& v) {
  if (v.is_zero()) return;
  auto it = values_.find(class_key);
  if (it == values_.end()) {
    values_.emplace(class_key, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) values_.erase(it);
}

Rational Functional::value_on_class_key(const std::string& class_key) const {
  auto it = values_.find(class_key);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational Functional::value_on_word(const SignedWord& w) const {
  if (w.letter_count() != order_)
    throw validation_error("functional of order " + std::to_string(order_) +
                           " applied to a word with " + std::to_string(w.letter_count()) +
                           " letters");
  return value_on_class_key(class_key(w));
}

Rational Functional::value_on_vector(const WordVector& v) const {
  Rational out(0);
  for (const auto& [w, c] : v.entries()) out += c * value_on_word(w);
  return out;
}

Functional& Functional::operator+=(const Functional& o) {
  if (order_ != o.order_) throw std::logic_error("adding functionals of different orders");
  for (const auto& [k, v] : o.values_) add(k, v);
  return *this;
}

Functional Functional::scaled(const Rational& c) const {
  Functional out(order_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : values_) out.values_.emplace(k, v * c);
  return out;
}

std::string class_key(const SignedWord& w) {
  return format_word(orbit(w).least());
}

Functional sci(std::size_t n, const SignedWord& gamma) {
  Functional out(n);
  const std::vector<std::uint32_t> names = name_list(gamma);
  if (n > names.size()) return out;
  std::unordered_map<std::string, std::string> key_cache;
  for_each_name_subset(names, n, [&](const std::vector<std::uint32_t>& subset) {
    const SignedWord sub = canonical_form(restrict_to_names(gamma, subset));
    const std::string text = format_word(sub);
    auto it = key_cache.find(text);
    if (it == key_cache.end()) it = key_cache.emplace(text, class_key(sub)).first;
    out.add(it->second, 1);
  });
  return out;
}

Functional sci_linear(std::size_t n, const WordVector& v) {
  Functional out(n);
  for (const auto& [w, c] : v.entries()) out += sci(n, w).scaled(c);
  return out;
}

Functional iota(std::size_t n, const WordVector& v) {
  Functional out(n);
  if (v.entries().empty()) return out;
  const auto len = v.homogeneous_size();
  if (!len || *len != 2 * n)
    throw validation_error("combination is not homogeneous with " + std::to_string(n) +
                           " letters per word");
  std::map<SignedWord, Rational, WordLess> pending(v.entries().begin(), v.entries().end());
  while (!pending.empty()) {
    const auto [w, c] = *pending.begin();
    const CyclicClass cls = orbit(w);
    for (const SignedWord& m : cls.members()) {
      auto it = pending.find(m);
      const Rational mc = it == pending.end() ? Rational(0) : it->second;
      if (!(mc == c))
        throw validation_error("combination is not shift invariant: members of the class of " +
                               format_word(cls.least()) + " carry unequal coefficients");
      if (it != pending.end()) pending.erase(it);
    }
    out.add(format_word(cls.least()), c * Rational(static_cast<long long>(cls.size())));
  }
  return out;
}

WordVector iota_inv(const Functional& f) {
  WordVector out;
  for (const auto& [key, val] : f.values()) {
    const CyclicClass cls = orbit(parse_word(key));
    const Rational share = val / Rational(static_cast<long long>(cls.size()));
    for (const SignedWord& m : cls.members()) out.add(m, share);
  }
  return out;
}

Functional compose_sci(std::size_t l, std::size_t k, const SignedWord& gamma) {
  if (l > k)
    throw validation_error("composed order " + std::to_string(l) +
                           " exceeds inner order " + std::to_string(k));
  return sci_linear(l, iota_inv(sci(k, gamma)));
}

AuditReport relation_audit(std::size_t l, std::size_t k,
                           const std::vector<CorpusWord>& corpus, unsigned workers) {
  if (l > k)
    throw validation_error("composed order " + std::to_string(l) +
                           " exceeds inner order " + std::to_string(k));
  AuditReport rep;
  rep.l = l;
  rep.k = k;
  std::vector<const CorpusWord*> eligible;
  for (const CorpusWord& cw : corpus) {
    if (cw.word.letter_count() < k)
      rep.skipped.push_back(cw.label);
    else
      eligible.push_back(&cw);
  }
  rep.rows.resize(eligible.size());
  parallel_for(eligible.size(), workers, [&](std::size_t i) {
    const CorpusWord& cw = *eligible[i];
    AuditRow row;
    row.label = cw.label;
    row.n = cw.word.letter_count();
    const std::size_t n = row.n;

    const Functional lhs = compose_sci(l, k, cw.word);
    const Functional rhs = sci(l, cw.word);
    // rhs counts subsets of an n-letter word with l <= n, so it is never zero
    // here and its first entry pins the candidate ratio.
    const auto& [key0, val0] = *rhs.values().begin();
    const Rational lambda = lhs.value_on_class_key(key0) / val0;
    const Functional expect = rhs.scaled(lambda);
    row.measured_lambda = lambda;
    row.proportional = lhs == expect;
    if (!row.proportional) {
      std::set<std::string> keys;
      for (const auto& [kk, vv] : lhs.values()) keys.insert(kk);
      for (const auto& [kk, vv] : expect.values()) keys.insert(kk);
      for (const std::string& kk : keys) {
        const Rational a = lhs.value_on_class_key(kk);
        const Rational b = expect.value_on_class_key(kk);
        if (!(a == b))
          row.failures.push_back("class " + (kk.empty() ? std::string("(empty)") : kk) +
                                 ": got " + a.str() + ", expected " + b.str());
      }
    }
    row.oracle_coefficient =
        Rational::binomial(static_cast<unsigned>(n - l), static_cast<unsigned>(k - l));
    if (l < n)
      row.paper_coefficient =
          Rational::factorial(static_cast<unsigned>(n - k + 1)) /
          (Rational::factorial(static_cast<unsigned>(n - l - 1)) *
           Rational::factorial(static_cast<unsigned>(k - l)));
    rep.rows[i] = std::move(row);
  });
  for (const AuditRow& r : rep.rows)
    if (!r.proportional) rep.all_proportional = false;
  return rep;
}

}  // namespace sgw
