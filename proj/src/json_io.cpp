#include "sgw/json_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sgw {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

ordered_json functional_json(const Functional& f) {
  std::vector<std::string> keys;
  keys.reserve(f.values().size());
  for (const auto& [k, v] : f.values()) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
    return WordLess{}(parse_word(a), parse_word(b));
  });
  ordered_json values = ordered_json::object();
  for (const std::string& k : keys) values[k] = f.values().at(k).str();
  return ordered_json{{"order", f.order()}, {"values", std::move(values)}};
}

Functional functional_from_json(const ordered_json& j) {
  try {
    if (!j.is_object() || !j.contains("order") || !j.contains("values"))
      throw parse_error("functional JSON needs \"order\" and \"values\"");
    Functional f(j.at("order").get<std::size_t>());
    for (const auto& [k, v] : j.at("values").items())
      f.add(class_key(parse_word(k)), Rational::parse(v.get<std::string>()));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("functional JSON: ") + e.what());
  }
}

ordered_json class_json(const CyclicClass& c) {
  ordered_json out = ordered_json::array();
  for (const SignedWord& m : c.members()) out.push_back(format_word(m));
  return out;
}

ordered_json surface_json(const SurfaceData& s) {
  ordered_json faces = ordered_json::array();
  for (const auto& face : s.face_list) {
    ordered_json f = ordered_json::array();
    for (const Dart& d : face) f.push_back(dart_label(d, s.edges));
    faces.push_back(std::move(f));
  }
  return ordered_json{{"vertices", s.vertices}, {"edges", s.edges},
                      {"faces", s.faces},       {"euler", s.euler},
                      {"genus", s.genus},       {"face_edges", std::move(faces)}};
}

ordered_json singular_curve_json(const SingularCurve& c) {
  ordered_json points = ordered_json::array();
  for (const SingularPoint& p : c.points) {
    ordered_json letters = ordered_json::array();
    for (const std::uint32_t name : p.letters) letters.push_back(name_text(name));
    points.push_back(ordered_json{{"kind", kind_name(p.kind())},
                                  {"case", case_name(p.case_id)},
                                  {"letters", std::move(letters)}});
  }
  return ordered_json{{"base", format_word(c.base)}, {"points", std::move(points)}};
}

SingularCurve singular_curve_from_json(const ordered_json& j) {
  try {
    if (!j.is_object() || !j.contains("base"))
      throw parse_error("singular curve JSON needs \"base\" and \"points\"");
    SingularCurve c;
    c.base = parse_word(j.at("base").get<std::string>());
    for (const auto& pj : j.value("points", ordered_json::array())) {
      if (!pj.is_object() || !pj.contains("case") || !pj.contains("letters"))
        throw parse_error("singular point JSON needs \"case\" and \"letters\"");
      SingularPoint p;
      p.case_id = case_from_name(pj.at("case").get<std::string>());
      if (pj.contains("kind")) {
        const SingularKind k = kind_from_name(pj.at("kind").get<std::string>());
        if (k != case_kind(p.case_id))
          throw parse_error("kind \"" + kind_name(k) + "\" does not match case " +
                            case_name(p.case_id));
      }
      for (const auto& lj : pj.at("letters")) p.letters.push_back(name_from_text(lj.get<std::string>()));
      c.points.push_back(std::move(p));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("singular curve JSON: ") + e.what());
  }
}

ordered_json audit_json(const AuditReport& r) {
  ordered_json rows = ordered_json::array();
  for (const AuditRow& row : r.rows) {
    ordered_json o{{"label", row.label},
                   {"l", r.l},
                   {"k", r.k},
                   {"n", row.n},
                   {"measured_lambda", row.measured_lambda.str()},
                   {"paper_coefficient", row.paper_coefficient
                                             ? ordered_json(row.paper_coefficient->str())
                                             : ordered_json(nullptr)},
                   {"oracle_coefficient", row.oracle_coefficient.str()},
                   {"proportional", row.proportional}};
    if (!row.failures.empty()) o["failures"] = row.failures;
    rows.push_back(std::move(o));
  }
  return rows;
}

Corpus parse_corpus(const std::string& text) {
  Corpus corpus;
  std::set<std::string> labels;
  const auto add_word = [&](std::string label, SignedWord w) {
    if (label.empty()) throw parse_error("empty corpus label");
    if (!labels.insert(label).second) throw validation_error("duplicate corpus label: " + label);
    corpus.words.push_back(CorpusWord{std::move(label), std::move(w)});
  };
  const auto add_curve = [&](std::string label, SingularCurve c) {
    if (label.empty()) throw parse_error("empty corpus label");
    if (!labels.insert(label).second) throw validation_error("duplicate corpus label: " + label);
    const auto diags = validate_singular(c);
    if (!diags.empty()) throw validation_error("curve " + label + ": " + join(diags));
    corpus.curves.emplace_back(std::move(label), std::move(c));
  };

  const auto first = text.find_first_not_of(" \t\r\n");
  const bool looks_json = first != std::string::npos && (text[first] == '[' || text[first] == '{');

  if (looks_json) {
    ordered_json j;
    try {
      j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(std::string("corpus JSON: ") + e.what());
    }
    std::size_t auto_w = 0;
    std::size_t auto_c = 0;
    const auto handle_entry = [&](const ordered_json& e) {
      try {
        if (e.is_string()) {
          add_word("w" + std::to_string(++auto_w), parse_word(e.get<std::string>()));
        } else if (e.is_object() && e.contains("base")) {
          SingularCurve c = singular_curve_from_json(e);
          std::string label = e.contains("label") ? e.at("label").get<std::string>()
                                                  : "c" + std::to_string(++auto_c);
          add_curve(std::move(label), std::move(c));
        } else if (e.is_object() && e.contains("word")) {
          std::string label = e.contains("label") ? e.at("label").get<std::string>()
                                                  : "w" + std::to_string(++auto_w);
          add_word(std::move(label), parse_word(e.at("word").get<std::string>()));
        } else {
          throw parse_error(
              "corpus entry must be a word string, a {label, word} object, or a "
              "singular-curve object");
        }
      } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("corpus JSON entry: ") + ex.what());
      }
    };
    if (j.is_array()) {
      for (const auto& e : j) handle_entry(e);
    } else if (j.is_object()) {
      for (const auto& e : j.value("words", ordered_json::array())) handle_entry(e);
      for (const auto& e : j.value("curves", ordered_json::array())) handle_entry(e);
    } else {
      throw parse_error("corpus JSON must be an array or an object");
    }
    return corpus;
  }

  std::istringstream in(text);
  std::string line;
  std::size_t auto_w = 0;
  while (std::getline(in, line)) {
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    ++auto_w;
    const auto colon = body.find(':');
    if (colon == std::string::npos) {
      add_word("w" + std::to_string(auto_w), parse_word(body));
    } else {
      add_word(trim(body.substr(0, colon)), parse_word(body.substr(colon + 1)));
    }
  }
  return corpus;
}

}  // namespace sgw
