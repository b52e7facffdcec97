#include "sgw/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace sgw {

SignedWord::SignedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::unordered_map<std::uint32_t, std::pair<int, std::int8_t>> seen;  // count, sign
  seen.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (l.name == 0) throw validation_error("letter names must be positive");
    if (l.sign != 1 && l.sign != -1) throw validation_error("letter signs must be +1 or -1");
    auto [it, fresh] = seen.try_emplace(l.name, 0, l.sign);
    if (!fresh && it->second.second != l.sign)
      throw validation_error("letter " + name_text(l.name) + " has inconsistent signs");
    ++it->second.first;
  }
  for (const auto& [name, count_sign] : seen) {
    if (count_sign.first != 2)
      throw validation_error("letter " + name_text(name) + " occurs " +
                             std::to_string(count_sign.first) + " time(s), expected 2");
  }
}

bool WordLess::operator()(const SignedWord& a, const SignedWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i].name != lb[i].name) return la[i].name < lb[i].name;
  }
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i].sign != lb[i].sign) return la[i].sign > lb[i].sign;  // +1 sorts first
  }
  return false;
}

std::string name_text(std::uint32_t name) {
  if (name >= 1 && name <= 26) return std::string(1, static_cast<char>('a' + name - 1));
  return std::to_string(name);
}

std::uint32_t name_from_text(const std::string& text) {
  if (text.size() == 1 && std::isalpha(static_cast<unsigned char>(text[0])))
    return static_cast<std::uint32_t>(std::tolower(static_cast<unsigned char>(text[0])) - 'a' + 1);
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    unsigned long long v = 0;
    for (char c : text) {
      v = v * 10 + static_cast<unsigned long long>(c - '0');
      if (v > 0xffffffffull) throw parse_error("letter name '" + text + "' out of range");
    }
    if (v == 0) throw parse_error("letter names must be positive");
    return static_cast<std::uint32_t>(v);
  }
  throw parse_error("malformed letter name '" + text + "'");
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalnum(c); });
}

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

SignedWord parse_token_form(std::string_view text) {
  struct Token {
    std::string stem;  // lowercased
    std::int8_t sign;
    bool numeric;
    std::uint32_t value = 0;  // for numeric or single-letter stems
  };
  std::vector<Token> tokens;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::uint32_t max_numeric = 0;
  while (in >> raw) {
    if (raw.size() < 2) throw parse_error("malformed token '" + raw + "'");
    char sign_ch = raw.back();
    if (sign_ch != '+' && sign_ch != '-') throw parse_error("malformed token '" + raw + "'");
    std::string stem = raw.substr(0, raw.size() - 1);
    Token t;
    t.sign = sign_ch == '+' ? std::int8_t{1} : std::int8_t{-1};
    if (std::all_of(stem.begin(), stem.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      t.numeric = true;
      t.value = name_from_text(stem);
      max_numeric = std::max(max_numeric, t.value);
      t.stem = stem;
    } else if (is_identifier(stem)) {
      t.numeric = false;
      t.stem = lowercase(stem);
      if (t.stem.size() == 1) t.value = name_from_text(t.stem);
    } else {
      throw parse_error("malformed token '" + raw + "'");
    }
    tokens.push_back(std::move(t));
  }
  // Multi-character identifiers get fresh names above both a..z and any
  // explicit numeric name, assigned by first occurrence.
  std::unordered_map<std::string, std::uint32_t> assigned;
  std::uint32_t next_fresh = std::max<std::uint32_t>(26, max_numeric) + 1;
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (const Token& t : tokens) {
    std::uint32_t name;
    if (t.numeric || t.stem.size() == 1) {
      name = t.value;
    } else {
      auto [it, fresh] = assigned.try_emplace(t.stem, next_fresh);
      if (fresh) ++next_fresh;
      name = it->second;
    }
    letters.push_back({name, t.sign});
  }
  return SignedWord(std::move(letters));
}

}  // namespace

SignedWord parse_word(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return SignedWord{};
  bool compact = std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isalpha(c);
  });
  if (!compact) return parse_token_form(text);
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    auto uc = static_cast<unsigned char>(c);
    std::uint32_t name = static_cast<std::uint32_t>(std::tolower(uc) - 'a' + 1);
    letters.push_back({name, std::isupper(uc) ? std::int8_t{-1} : std::int8_t{1}});
  }
  return SignedWord(std::move(letters));
}

std::string format_word(const SignedWord& w) {
  bool compact = std::all_of(w.letters().begin(), w.letters().end(),
                             [](const Letter& l) { return l.name <= 26; });
  std::string out;
  if (compact) {
    for (const Letter& l : w.letters()) {
      char c = static_cast<char>('a' + l.name - 1);
      out.push_back(l.sign < 0 ? static_cast<char>(std::toupper(c)) : c);
    }
    return out;
  }
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    out += name_text(l.name);
    out.push_back(l.sign < 0 ? '-' : '+');
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SignedWord& w) {
  return os << format_word(w);
}

SignedWord canonical_form(const SignedWord& w) {
  std::unordered_map<std::uint32_t, std::uint32_t> rename;
  rename.reserve(w.letter_count());
  std::uint32_t next = 1;
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (const Letter& l : w.letters()) {
    auto [it, fresh] = rename.try_emplace(l.name, next);
    if (fresh) ++next;
    letters.push_back({it->second, l.sign});
  }
  return SignedWord(std::move(letters));
}

bool are_isomorphic(const SignedWord& u, const SignedWord& w) {
  return canonical_form(u) == canonical_form(w);
}

int indicator(const SignedWord& u, const SignedWord& w) {
  return are_isomorphic(u, w) ? 1 : 0;
}

std::vector<std::uint32_t> name_list(const SignedWord& w) {
  std::vector<std::uint32_t> names;
  names.reserve(w.letter_count());
  for (const Letter& l : w.letters()) names.push_back(l.name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

SignedWord restrict_to_names(const SignedWord& w, const std::vector<std::uint32_t>& names) {
  std::vector<Letter> letters;
  letters.reserve(2 * names.size());
  for (const Letter& l : w.letters()) {
    if (std::binary_search(names.begin(), names.end(), l.name)) letters.push_back(l);
  }
  return SignedWord(std::move(letters));
}

void for_each_name_subset(const std::vector<std::uint32_t>& names, std::size_t k,
                          const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  const std::size_t n = names.size();
  if (k > n) return;
  if (k == 0) {
    fn({});
    return;
  }
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::uint32_t> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = names[idx[i]];
    fn(subset);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

std::vector<SignedWord> subwords_of_size(const SignedWord& w, std::size_t k) {
  std::vector<SignedWord> out;
  for_each_name_subset(name_list(w), k, [&](const std::vector<std::uint32_t>& subset) {
    out.push_back(canonical_form(restrict_to_names(w, subset)));
  });
  return out;
}

unsigned long long pairing(const SignedWord& u, const SignedWord& w) {
  const std::size_t k = u.letter_count();
  const auto names = name_list(w);
  if (k > names.size()) return 0;
  const SignedWord cu = canonical_form(u);
  unsigned long long count = 0;
  for_each_name_subset(names, k, [&](const std::vector<std::uint32_t>& subset) {
    if (canonical_form(restrict_to_names(w, subset)) == cu) ++count;
  });
  return count;
}

WordEnumerator::WordEnumerator(std::size_t n) : n_(n), partner_choice_(n, 0) {}

std::optional<SignedWord> WordEnumerator::next() {
  if (done_) return std::nullopt;
  SignedWord out = build();
  advance();
  return out;
}

SignedWord WordEnumerator::build() const {
  std::vector<Letter> letters(2 * n_);
  std::vector<std::size_t> free_pos(2 * n_);
  std::iota(free_pos.begin(), free_pos.end(), 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t p = free_pos[0];
    std::size_t q = free_pos[1 + partner_choice_[i]];
    std::int8_t sign = (sign_bits_ >> (n_ - 1 - i)) & 1 ? std::int8_t{-1} : std::int8_t{1};
    Letter l{static_cast<std::uint32_t>(i + 1), sign};
    letters[p] = l;
    letters[q] = l;
    free_pos.erase(std::find(free_pos.begin(), free_pos.end(), q));
    free_pos.erase(free_pos.begin());
  }
  return SignedWord(std::move(letters));
}

void WordEnumerator::advance() {
  if (n_ == 0) {
    done_ = true;
    return;
  }
  if (++sign_bits_ < (1ull << n_)) return;
  sign_bits_ = 0;
  std::size_t i = n_;
  while (i > 0) {
    --i;
    std::size_t radix = 2 * (n_ - i) - 1;  // partner choices left at step i
    if (partner_choice_[i] + 1 < radix) {
      ++partner_choice_[i];
      std::fill(partner_choice_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                partner_choice_.end(), 0);
      return;
    }
  }
  done_ = true;
}

std::vector<SignedWord> all_words(std::size_t n) {
  std::vector<SignedWord> out;
  WordEnumerator en(n);
  while (auto w = en.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace sgw
