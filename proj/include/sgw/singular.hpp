#ifndef SGW_SINGULAR_HPP
#define SGW_SINGULAR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sgw/sci.hpp"
#include "sgw/word.hpp"

namespace sgw {

enum class SingularKind { direct_tangency, inverse_tangency, triple };

enum class CaseId { D1, D2, I1, I2, T1, T2, T3, T4, T5, T6, T7, T8 };

SingularKind case_kind(CaseId id);
std::string case_name(CaseId id);
CaseId case_from_name(const std::string& name);  // throws parse_error
std::string kind_name(SingularKind kind);
SingularKind kind_from_name(const std::string& name);  // throws parse_error

/// A self-tangency (2 letters) or triple point (3 letters) marked on the base
/// word by the letters that realize its pattern.
struct SingularPoint {
  CaseId case_id = CaseId::D1;
  std::vector<std::uint32_t> letters;

  SingularKind kind() const { return case_kind(case_id); }
  bool operator==(const SingularPoint&) const = default;
};

/// Base word = the all-positive resolution; each point's letters must realize
/// the declared case pattern inside it, with pairwise disjoint letter sets.
struct SingularCurve {
  SignedWord base;
  std::vector<SingularPoint> points;

  bool operator==(const SingularCurve&) const = default;
};

/// One choice of +1/-1 per singular point.
struct ResolutionVector {
  std::vector<std::int8_t> signs;

  int sign_product() const;
  bool operator==(const ResolutionVector&) const = default;
};

/// Empty result means the curve is well formed; otherwise one message per
/// problem, identifying the offending point and the expected pattern.
std::vector<std::string> validate_singular(const SingularCurve& c);

/// The (slot, slot+1) pairs of base-word positions glued by some point's
/// pattern. Insertions between glued slots would break the pattern.
std::vector<std::pair<std::size_t, std::size_t>> point_slot_pairs(const SingularCurve& c);

/// Rewrites the base word: points with sign +1 are left alone; sign -1 deletes
/// a tangency's four slots or applies a triple point's three transpositions.
/// Result is canonical. Throws validation_error on an invalid curve or a sign
/// vector of the wrong length.
SignedWord resolve(const SingularCurve& c, const ResolutionVector& sigma);

/// All 2^m resolutions, sign vectors enumerated as a binary counter with the
/// first point most significant and +1 as bit 0.
std::vector<std::pair<ResolutionVector, SignedWord>> resolve_all(const SingularCurve& c);

/// Signed sum over all resolutions: sum_sigma sign_product(sigma) * sci(n, resolve(c, sigma)).
Functional expanded_invariant(std::size_t n, const SingularCurve& c, unsigned workers = 1);

/// True iff the expanded invariant of order n vanishes.
bool finite_type_check(std::size_t n, const SingularCurve& c, unsigned workers = 1);

/// Weaves a freshly named instance of the case pattern into the word, one
/// adjacent pattern block per insertion position (positions ascending, given
/// in original-word slots, each at most the word length). The returned curve
/// validates; positions that break an existing pattern throw validation_error.
SingularCurve insert_singularity(const SignedWord& w, CaseId case_id,
                                 const std::vector<std::size_t>& positions);
SingularCurve insert_singularity(const SingularCurve& c, CaseId case_id,
                                 const std::vector<std::size_t>& positions);

}  // namespace sgw

#endif
