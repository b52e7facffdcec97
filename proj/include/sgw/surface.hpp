#ifndef SGW_SURFACE_HPP
#define SGW_SURFACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgw/rational.hpp"
#include "sgw/sci.hpp"
#include "sgw/word.hpp"

namespace sgw {

/// One end of one ribbon-graph edge. Edge t runs from the letter at slot t to
/// the letter at slot t+1 (mod word length); the outgoing dart at slot t
/// belongs to edge t, the incoming one to edge t-1.
struct Dart {
  std::size_t slot = 0;
  bool outgoing = true;

  bool operator==(const Dart&) const = default;
};

std::size_t dart_edge(const Dart& d, std::size_t word_length);
/// "<edge>+" for an outgoing dart, "<edge>-" for an incoming one.
std::string dart_label(const Dart& d, std::size_t word_length);

/// Counts for the closed oriented surface carrying the curve: one 4-valent
/// vertex per letter, 2n edges, faces from boundary tracing. The empty word
/// is a circle on the sphere: no vertices, two faces.
struct SurfaceData {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long long euler = 0;
  std::size_t genus = 0;
  std::vector<std::vector<Dart>> face_list;  // numbered in trace order
};

SurfaceData surface_data(const SignedWord& w);
std::size_t genus(const SignedWord& w);
bool is_planar(const SignedWord& w);

/// Winding number of the plane curve obtained by putting face `outer` at
/// infinity. Independent of which dart of the face anchors the computation
/// (checked internally). Throws validation_error on a non-planar word or an
/// unknown face id.
long long rotation_number(const SignedWord& w, std::size_t outer);

struct PlaneCurveData {
  SignedWord word;
  std::optional<std::size_t> outer_face;
  long long rotation = 0;
};

PlaneCurveData plane_curve_from_face(const SignedWord& w, std::size_t outer);
PlaneCurveData plane_curve_with_rotation(const SignedWord& w, long long rotation);

/// Residuals of the two linear relations tying externally supplied values of
/// the classical plane-curve invariants (jplus, jminus, st) to order-1 and
/// order-2 curve counts plus the rotation number; both are zero when the
/// relations hold.
std::pair<Rational, Rational> arnold_check(const PlaneCurveData& p, const Rational& jplus,
                                           const Rational& jminus, const Rational& st);

}  // namespace sgw

#endif
