#ifndef SGW_JSON_IO_HPP
#define SGW_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sgw/cyclic.hpp"
#include "sgw/sci.hpp"
#include "sgw/singular.hpp"
#include "sgw/surface.hpp"
#include "sgw/word.hpp"

namespace sgw {

using ordered_json = nlohmann::ordered_json;

/// {"order": n, "values": {"<class key>": "p/q", ...}}, keys in word order.
ordered_json functional_json(const Functional& f);
Functional functional_from_json(const ordered_json& j);

/// Sorted member words as an array of strings.
ordered_json class_json(const CyclicClass& c);

/// {"vertices", "edges", "faces", "euler", "genus", "face_edges": [["0+", ...], ...]}
ordered_json surface_json(const SurfaceData& s);

/// {"base": "<word>", "points": [{"kind", "case", "letters": ["a", ...]}, ...]}
ordered_json singular_curve_json(const SingularCurve& c);
SingularCurve singular_curve_from_json(const ordered_json& j);

/// Array of per-word rows.
ordered_json audit_json(const AuditReport& r);

struct Corpus {
  std::vector<CorpusWord> words;
  std::vector<std::pair<std::string, SingularCurve>> curves;
};

/// Text corpora hold one word per line ("word" or "label: word"; '#' starts a
/// comment). JSON corpora are an array of entries (word strings, {label, word}
/// objects, or singular-curve objects) or {"words": [...], "curves": [...]}.
/// Labels must be unique across the whole corpus; unlabeled entries get w1,
/// w2, ... and c1, c2, ...
Corpus parse_corpus(const std::string& text);

}  // namespace sgw

#endif
