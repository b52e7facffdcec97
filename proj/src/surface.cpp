#include "sgw/surface.hpp"

#include <map>
#include <stdexcept>

#include "sgw/cyclic.hpp"

namespace sgw {
namespace {

// Dart ids: slot * 2 for the outgoing dart, slot * 2 + 1 for the incoming one.
std::size_t out_id(std::size_t slot) { return slot * 2; }
std::size_t in_id(std::size_t slot) { return slot * 2 + 1; }

Dart dart_of(std::size_t id) { return Dart{id / 2, id % 2 == 0}; }

// Edge involution: the two darts of edge t sit at slots t (outgoing) and
// t+1 (incoming).
std::size_t alpha(std::size_t id, std::size_t len) {
  const Dart d = dart_of(id);
  return d.outgoing ? in_id((d.slot + 1) % len) : out_id((d.slot + len - 1) % len);
}

}  // namespace

std::size_t dart_edge(const Dart& d, std::size_t word_length) {
  return d.outgoing ? d.slot : (d.slot + word_length - 1) % word_length;
}

std::string dart_label(const Dart& d, std::size_t word_length) {
  return std::to_string(dart_edge(d, word_length)) + (d.outgoing ? "+" : "-");
}

SurfaceData surface_data(const SignedWord& w) {
  SurfaceData out;
  if (w.empty()) {
    out.faces = 2;
    out.euler = 2;
    out.face_list = {{}, {}};
    return out;
  }
  const auto& seq = w.letters();
  const std::size_t len = seq.size();

  std::map<std::uint32_t, std::vector<std::size_t>> slots;
  for (std::size_t i = 0; i < len; ++i) slots[seq[i].name].push_back(i);

  // Counterclockwise rotation of the four darts around each vertex; the
  // letter's sign picks between the two crossing frames.
  std::vector<std::size_t> sigma(2 * len);
  for (const auto& [name, pos] : slots) {
    const std::size_t a = pos[0];
    const std::size_t b = pos[1];
    if (seq[a].sign < 0) {
      sigma[in_id(a)] = in_id(b);
      sigma[in_id(b)] = out_id(a);
      sigma[out_id(a)] = out_id(b);
      sigma[out_id(b)] = in_id(a);
    } else {
      sigma[in_id(a)] = out_id(b);
      sigma[out_id(b)] = out_id(a);
      sigma[out_id(a)] = in_id(b);
      sigma[in_id(b)] = in_id(a);
    }
  }

  std::vector<bool> seen(2 * len, false);
  for (std::size_t start = 0; start < 2 * len; ++start) {
    if (seen[start]) continue;
    std::vector<Dart> face;
    std::size_t cur = start;
    do {
      seen[cur] = true;
      face.push_back(dart_of(cur));
      cur = sigma[alpha(cur, len)];
    } while (cur != start);
    out.face_list.push_back(std::move(face));
  }

  out.vertices = w.letter_count();
  out.edges = len;
  out.faces = out.face_list.size();
  out.euler = static_cast<long long>(out.vertices) - static_cast<long long>(out.edges) +
              static_cast<long long>(out.faces);
  if (out.euler > 2 || (2 - out.euler) % 2 != 0)
    throw std::logic_error("face tracing produced an impossible Euler characteristic");
  out.genus = static_cast<std::size_t>((2 - out.euler) / 2);
  return out;
}

std::size_t genus(const SignedWord& w) { return surface_data(w).genus; }

bool is_planar(const SignedWord& w) { return genus(w) == 0; }

long long rotation_number(const SignedWord& w, std::size_t outer) {
  const SurfaceData s = surface_data(w);
  if (s.genus != 0)
    throw validation_error("word has genus " + std::to_string(s.genus) +
                           "; rotation number needs a planar word");
  if (outer >= s.faces)
    throw validation_error("face " + std::to_string(outer) + " does not exist (faces 0.." +
                           std::to_string(s.faces - 1) + ")");
  if (w.empty()) return outer == 1 ? 1 : -1;

  const std::size_t len = w.size();
  std::optional<long long> result;
  for (const Dart& d : s.face_list[outer]) {
    // Rebase so the word starts just past the chosen edge, then sum the
    // frame signs; the side of the base edge the outer face lies on
    // contributes the final +-1.
    const std::size_t t = dart_edge(d, len);
    const SignedWord rebased = nu_power_concrete(w, (t + 1) % len);
    long long sign_total = 0;
    for (const Letter& l : rebased.letters()) sign_total += l.sign;
    const long long eps = -sign_total / 2;
    const long long delta = d.outgoing ? -1 : +1;
    const long long i = eps + delta;
    if (result && *result != i)
      throw std::logic_error("rotation number depends on the choice of base edge");
    result = i;
  }
  return *result;
}

PlaneCurveData plane_curve_from_face(const SignedWord& w, std::size_t outer) {
  PlaneCurveData p;
  p.word = canonical_form(w);
  p.outer_face = outer;
  p.rotation = rotation_number(w, outer);
  return p;
}

PlaneCurveData plane_curve_with_rotation(const SignedWord& w, long long rotation) {
  if (!is_planar(w)) throw validation_error("word is not planar");
  PlaneCurveData p;
  p.word = canonical_form(w);
  p.rotation = rotation;
  return p;
}

std::pair<Rational, Rational> arnold_check(const PlaneCurveData& p, const Rational& jplus,
                                           const Rational& jminus, const Rational& st) {
  if (!is_planar(p.word)) throw validation_error("word is not planar");
  const Functional f1 = sci(1, p.word);
  const Functional f2 = sci(2, p.word);
  const Rational first = (jplus - jminus) - f1.value_on_class_key(class_key(parse_word("aa")));
  const Rational combo = f2.value_on_class_key(class_key(parse_word("aabb"))) -
                         f2.value_on_class_key(class_key(parse_word("aaBB"))) +
                         f2.value_on_class_key(class_key(parse_word("AABB")));
  const Rational rot_sq = Rational(p.rotation) * Rational(p.rotation);
  const Rational second =
      (jminus + Rational(6) * st) - (Rational(-2) * combo + rot_sq - Rational(1));
  return {first, second};
}

}  // namespace sgw
