#include "sgw/singular.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <stdexcept>

#include "sgw/parallel.hpp"

namespace sgw {
namespace {

// A pattern is a list of adjacent two-letter blocks; groups name the letter
// roles of each block and signs give the required sign per role. Each role
// occurs in exactly two blocks, matching the two occurrences of its letter.
struct CaseSpec {
  SingularKind kind;
  std::vector<std::array<std::size_t, 2>> groups;
  std::vector<std::int8_t> signs;
};

const CaseSpec& case_spec(CaseId id) {
  static const std::array<CaseSpec, 12> table = {{
      {SingularKind::direct_tangency, {{{0, 1}}, {{0, 1}}}, {-1, +1}},
      {SingularKind::direct_tangency, {{{0, 1}}, {{0, 1}}}, {+1, -1}},
      {SingularKind::inverse_tangency, {{{0, 1}}, {{1, 0}}}, {-1, +1}},
      {SingularKind::inverse_tangency, {{{0, 1}}, {{1, 0}}}, {+1, -1}},
      {SingularKind::triple, {{{0, 1}}, {{2, 1}}, {{2, 0}}}, {+1, +1, +1}},
      {SingularKind::triple, {{{0, 1}}, {{0, 2}}, {{2, 1}}}, {-1, +1, +1}},
      {SingularKind::triple, {{{0, 1}}, {{2, 0}}, {{1, 2}}}, {+1, -1, +1}},
      {SingularKind::triple, {{{0, 1}}, {{1, 2}}, {{0, 2}}}, {+1, +1, -1}},
      {SingularKind::triple, {{{0, 1}}, {{2, 1}}, {{2, 0}}}, {-1, -1, -1}},
      {SingularKind::triple, {{{0, 1}}, {{0, 2}}, {{2, 1}}}, {+1, -1, -1}},
      {SingularKind::triple, {{{0, 1}}, {{2, 0}}, {{1, 2}}}, {-1, +1, -1}},
      {SingularKind::triple, {{{0, 1}}, {{1, 2}}, {{0, 2}}}, {-1, -1, +1}},
  }};
  return table[static_cast<std::size_t>(id)];
}

std::string join_diags(const std::vector<std::string>& diags) {
  std::string out;
  for (const std::string& d : diags) {
    if (!out.empty()) out += "; ";
    out += d;
  }
  return out;
}

struct MatchedPoint {
  std::vector<std::size_t> group_starts;
};

// Locates every point's pattern blocks in the base word, consuming each
// letter's two occurrences left to right. Returns diagnostics; when empty and
// out is non-null, out receives one match per point.
std::vector<std::string> match_points(const SingularCurve& c, std::vector<MatchedPoint>* out) {
  std::vector<std::string> diags;
  const auto& seq = c.base.letters();
  std::map<std::uint32_t, std::vector<std::size_t>> occ;
  for (std::size_t i = 0; i < seq.size(); ++i) occ[seq[i].name].push_back(i);

  std::map<std::uint32_t, std::size_t> owner;
  std::vector<MatchedPoint> matched(c.points.size());

  for (std::size_t pi = 0; pi < c.points.size(); ++pi) {
    const SingularPoint& pt = c.points[pi];
    const CaseSpec& cs = case_spec(pt.case_id);
    const std::string who = "point " + std::to_string(pi) + " (" + case_name(pt.case_id) + ")";
    if (pt.letters.size() != cs.signs.size()) {
      diags.push_back(who + ": expects " + std::to_string(cs.signs.size()) + " letters, got " +
                      std::to_string(pt.letters.size()));
      continue;
    }
    bool ok = true;
    for (std::size_t r = 0; r < pt.letters.size(); ++r) {
      const std::uint32_t name = pt.letters[r];
      for (std::size_t r2 = r + 1; r2 < pt.letters.size(); ++r2)
        if (pt.letters[r2] == name) {
          diags.push_back(who + ": letter " + name_text(name) + " listed twice");
          ok = false;
        }
      const auto it = occ.find(name);
      if (it == occ.end()) {
        diags.push_back(who + ": letter " + name_text(name) + " does not occur in the base word");
        ok = false;
        continue;
      }
      const auto [oit, fresh] = owner.emplace(name, pi);
      if (!fresh && oit->second != pi) {
        diags.push_back(who + ": letter " + name_text(name) + " already used by point " +
                        std::to_string(oit->second));
        ok = false;
      }
      if (seq[it->second.front()].sign != cs.signs[r]) {
        diags.push_back(who + ": letter " + name_text(name) + " has sign " +
                        std::string(seq[it->second.front()].sign > 0 ? "+1" : "-1") +
                        ", pattern requires " + std::string(cs.signs[r] > 0 ? "+1" : "-1"));
        ok = false;
      }
    }
    if (!ok) continue;

    std::vector<std::size_t> used(pt.letters.size(), 0);
    std::vector<std::size_t> starts;
    std::size_t prev_start = 0;
    for (const auto& g : cs.groups) {
      const std::size_t a = occ[pt.letters[g[0]]][used[g[0]]++];
      const std::size_t b = occ[pt.letters[g[1]]][used[g[1]]++];
      if (b != a + 1) {
        diags.push_back(who + ": expected " + name_text(pt.letters[g[1]]) +
                        " immediately after " + name_text(pt.letters[g[0]]) + " at position " +
                        std::to_string(a));
        ok = false;
        break;
      }
      if (!starts.empty() && a <= prev_start) {
        diags.push_back(who + ": pattern blocks out of order at position " + std::to_string(a));
        ok = false;
        break;
      }
      prev_start = a;
      starts.push_back(a);
    }
    if (ok) matched[pi].group_starts = std::move(starts);
  }
  if (diags.empty() && out) *out = std::move(matched);
  return diags;
}

SignedWord apply_resolution(const SingularCurve& c, const std::vector<MatchedPoint>& matched,
                            const std::vector<std::int8_t>& signs) {
  std::vector<Letter> seq = c.base.letters();
  std::vector<bool> drop(seq.size(), false);
  for (std::size_t pi = 0; pi < c.points.size(); ++pi) {
    if (signs[pi] > 0) continue;
    if (c.points[pi].kind() == SingularKind::triple) {
      for (const std::size_t s : matched[pi].group_starts) std::swap(seq[s], seq[s + 1]);
    } else {
      for (const std::size_t s : matched[pi].group_starts) drop[s] = drop[s + 1] = true;
    }
  }
  std::vector<Letter> kept;
  kept.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!drop[i]) kept.push_back(seq[i]);
  return canonical_form(SignedWord(std::move(kept)));
}

std::vector<MatchedPoint> match_or_throw(const SingularCurve& c) {
  std::vector<MatchedPoint> matched;
  const auto diags = match_points(c, &matched);
  if (!diags.empty()) throw validation_error(join_diags(diags));
  return matched;
}

constexpr std::size_t max_points = 20;

}  // namespace

SingularKind case_kind(CaseId id) { return case_spec(id).kind; }

std::string case_name(CaseId id) {
  static const std::array<const char*, 12> names = {"D1", "D2", "I1", "I2", "T1", "T2",
                                                    "T3", "T4", "T5", "T6", "T7", "T8"};
  return names[static_cast<std::size_t>(id)];
}

CaseId case_from_name(const std::string& name) {
  std::string up = name;
  for (char& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (std::size_t i = 0; i < 12; ++i)
    if (up == case_name(static_cast<CaseId>(i))) return static_cast<CaseId>(i);
  throw parse_error("unknown singular case: " + name);
}

std::string kind_name(SingularKind kind) {
  switch (kind) {
    case SingularKind::direct_tangency: return "direct";
    case SingularKind::inverse_tangency: return "inverse";
    case SingularKind::triple: return "triple";
  }
  throw std::logic_error("unhandled singular kind");
}

SingularKind kind_from_name(const std::string& name) {
  if (name == "direct") return SingularKind::direct_tangency;
  if (name == "inverse") return SingularKind::inverse_tangency;
  if (name == "triple") return SingularKind::triple;
  throw parse_error("unknown singular kind: " + name);
}

int ResolutionVector::sign_product() const {
  int p = 1;
  for (const std::int8_t s : signs) p *= s;
  return p;
}

std::vector<std::string> validate_singular(const SingularCurve& c) {
  return match_points(c, nullptr);
}

std::vector<std::pair<std::size_t, std::size_t>> point_slot_pairs(const SingularCurve& c) {
  const std::vector<MatchedPoint> matched = match_or_throw(c);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const MatchedPoint& m : matched)
    for (const std::size_t s : m.group_starts) out.emplace_back(s, s + 1);
  return out;
}

SignedWord resolve(const SingularCurve& c, const ResolutionVector& sigma) {
  const std::vector<MatchedPoint> matched = match_or_throw(c);
  if (sigma.signs.size() != c.points.size())
    throw validation_error("sign vector has " + std::to_string(sigma.signs.size()) +
                           " entries for " + std::to_string(c.points.size()) + " points");
  for (const std::int8_t s : sigma.signs)
    if (s != 1 && s != -1) throw validation_error("resolution signs must be +1 or -1");
  return apply_resolution(c, matched, sigma.signs);
}

std::vector<std::pair<ResolutionVector, SignedWord>> resolve_all(const SingularCurve& c) {
  const std::vector<MatchedPoint> matched = match_or_throw(c);
  const std::size_t m = c.points.size();
  if (m > max_points)
    throw validation_error("too many singular points: " + std::to_string(m) + " (limit " +
                           std::to_string(max_points) + ")");
  std::vector<std::pair<ResolutionVector, SignedWord>> out;
  out.reserve(std::size_t{1} << m);
  for (std::size_t counter = 0; counter < (std::size_t{1} << m); ++counter) {
    ResolutionVector rv;
    rv.signs.resize(m);
    for (std::size_t i = 0; i < m; ++i)
      rv.signs[i] = ((counter >> (m - 1 - i)) & 1) ? std::int8_t{-1} : std::int8_t{1};
    SignedWord w = apply_resolution(c, matched, rv.signs);
    out.emplace_back(std::move(rv), std::move(w));
  }
  return out;
}

Functional expanded_invariant(std::size_t n, const SingularCurve& c, unsigned workers) {
  const std::vector<MatchedPoint> matched = match_or_throw(c);
  const std::size_t m = c.points.size();
  if (m > max_points)
    throw validation_error("too many singular points: " + std::to_string(m) + " (limit " +
                           std::to_string(max_points) + ")");
  const std::size_t total = std::size_t{1} << m;
  std::vector<Functional> parts(total);
  std::vector<long long> weights(total);
  parallel_for(total, workers, [&](std::size_t counter) {
    std::vector<std::int8_t> signs(m);
    long long weight = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const bool negative = (counter >> (m - 1 - i)) & 1;
      signs[i] = negative ? std::int8_t{-1} : std::int8_t{1};
      if (negative) weight = -weight;
    }
    parts[counter] = sci(n, apply_resolution(c, matched, signs));
    weights[counter] = weight;
  });
  Functional out(n);
  for (std::size_t i = 0; i < total; ++i) out += parts[i].scaled(weights[i]);
  return out;
}

bool finite_type_check(std::size_t n, const SingularCurve& c, unsigned workers) {
  return expanded_invariant(n, c, workers).is_zero();
}

SingularCurve insert_singularity(const SignedWord& w, CaseId case_id,
                                 const std::vector<std::size_t>& positions) {
  return insert_singularity(SingularCurve{w, {}}, case_id, positions);
}

SingularCurve insert_singularity(const SingularCurve& c, CaseId case_id,
                                 const std::vector<std::size_t>& positions) {
  const CaseSpec& cs = case_spec(case_id);
  if (positions.size() != cs.groups.size())
    throw validation_error("case " + case_name(case_id) + " takes " +
                           std::to_string(cs.groups.size()) + " insertion positions, got " +
                           std::to_string(positions.size()));
  const auto& seq = c.base.letters();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] > seq.size())
      throw validation_error("insertion position " + std::to_string(positions[i]) +
                             " is past the end of the word");
    if (i > 0 && positions[i] < positions[i - 1])
      throw validation_error("insertion positions must be ascending");
  }
  std::uint32_t next = 1;
  for (const Letter& l : seq) next = std::max(next, l.name + 1);
  SingularPoint pt;
  pt.case_id = case_id;
  for (std::size_t r = 0; r < cs.signs.size(); ++r)
    pt.letters.push_back(next + static_cast<std::uint32_t>(r));

  std::vector<Letter> out;
  out.reserve(seq.size() + 2 * cs.groups.size());
  std::size_t g = 0;
  for (std::size_t p = 0; p <= seq.size(); ++p) {
    while (g < positions.size() && positions[g] == p) {
      for (const std::size_t role : cs.groups[g]) out.push_back(Letter{pt.letters[role], cs.signs[role]});
      ++g;
    }
    if (p < seq.size()) out.push_back(seq[p]);
  }
  SingularCurve result{SignedWord(std::move(out)), c.points};
  result.points.push_back(std::move(pt));
  const auto diags = validate_singular(result);
  if (!diags.empty()) throw validation_error(join_diags(diags));
  return result;
}

}  // namespace sgw
