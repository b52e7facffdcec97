#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgw/cyclic.hpp"
#include "sgw/json_io.hpp"
#include "sgw/sci.hpp"
#include "sgw/singular.hpp"
#include "sgw/surface.hpp"
#include "sgw/word.hpp"

namespace {

using namespace sgw;

struct Options {
  bool json_flag = false;
  bool text_flag = false;
  unsigned parallel = 1;

  bool json() const {
    if (json_flag) return true;
    if (text_flag) return false;
    const char* env = std::getenv("SGW_OUTPUT");
    return env != nullptr && std::string(env) == "json";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SingularCurve load_curve(const std::string& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  SingularCurve c = singular_curve_from_json(j);
  const auto diags = validate_singular(c);
  if (!diags.empty()) {
    std::string msg = path;
    for (const std::string& d : diags) msg += "; " + d;
    throw validation_error(msg);
  }
  return c;
}

ResolutionVector sigma_from_string(const std::string& s) {
  ResolutionVector rv;
  for (const char ch : s) {
    if (ch == '+')
      rv.signs.push_back(1);
    else if (ch == '-')
      rv.signs.push_back(-1);
    else
      throw parse_error("sigma must be a string of '+' and '-' characters");
  }
  return rv;
}

std::vector<std::string> keys_in_word_order(const Functional& f) {
  std::vector<std::string> keys;
  keys.reserve(f.values().size());
  for (const auto& [k, v] : f.values()) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
    return WordLess{}(parse_word(a), parse_word(b));
  });
  return keys;
}

void print_functional(const Functional& f, bool json) {
  if (json) {
    std::cout << functional_json(f).dump(2) << "\n";
    return;
  }
  if (f.is_zero()) {
    std::cout << "0\n";
    return;
  }
  for (const std::string& k : keys_in_word_order(f))
    std::cout << (k.empty() ? "(empty)" : k) << " = " << f.values().at(k).str() << "\n";
}

std::string sigma_text(const ResolutionVector& rv) {
  std::string s;
  for (const std::int8_t v : rv.signs) s += v > 0 ? '+' : '-';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  int exit_code = 0;

  CLI::App app{"signed Gauss word toolkit"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json_flag, "machine-readable output (default when SGW_OUTPUT=json)");
  app.add_flag("--text", opt.text_flag, "plain-text output (overrides SGW_OUTPUT)");
  app.add_option("--parallel", opt.parallel, "worker threads for fan-out work")
      ->check(CLI::PositiveNumber);

  // ---- word -------------------------------------------------------------
  auto* word = app.add_subcommand("word", "parse, canonicalize and compare words");
  word->require_subcommand(1);
  word->fallthrough();
  {
    auto* c = word->add_subcommand("canon", "print the canonical form");
    c->fallthrough();
    auto text = std::make_shared<std::string>();
    c->add_option("word", *text, "signed word")->required();
    c->callback([&, text] {
      const SignedWord w = canonical_form(parse_word(*text));
      if (opt.json())
        std::cout << ordered_json{{"word", format_word(w)}}.dump(2) << "\n";
      else
        std::cout << format_word(w) << "\n";
    });
  }
  {
    auto* c = word->add_subcommand("iso", "test two words for isomorphism");
    c->fallthrough();
    auto u = std::make_shared<std::string>();
    auto w = std::make_shared<std::string>();
    c->add_option("u", *u, "first word")->required();
    c->add_option("w", *w, "second word")->required();
    c->callback([&, u, w] {
      const bool iso = are_isomorphic(parse_word(*u), parse_word(*w));
      if (opt.json())
        std::cout << ordered_json{{"isomorphic", iso}}.dump(2) << "\n";
      else
        std::cout << (iso ? "true" : "false") << "\n";
    });
  }
  {
    auto* c = word->add_subcommand("pair", "count subwords of w isomorphic to u");
    c->fallthrough();
    auto u = std::make_shared<std::string>();
    auto w = std::make_shared<std::string>();
    c->add_option("u", *u, "pattern word")->required();
    c->add_option("w", *w, "host word")->required();
    c->callback([&, u, w] {
      const unsigned long long value = pairing(parse_word(*u), parse_word(*w));
      if (opt.json())
        std::cout << ordered_json{{"pairing", value}}.dump(2) << "\n";
      else
        std::cout << value << "\n";
    });
  }
  {
    auto* c = word->add_subcommand("subwords", "list canonical k-letter restrictions");
    c->fallthrough();
    auto text = std::make_shared<std::string>();
    auto k = std::make_shared<std::size_t>(0);
    c->add_option("word", *text, "signed word")->required();
    c->add_option("-k,--size", *k, "letters per subword")->required();
    c->callback([&, text, k] {
      const std::vector<SignedWord> subs = subwords_of_size(parse_word(*text), *k);
      if (opt.json()) {
        ordered_json arr = ordered_json::array();
        for (const SignedWord& s : subs) arr.push_back(format_word(s));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const SignedWord& s : subs) std::cout << format_word(s) << "\n";
      }
    });
  }
  {
    auto* c = word->add_subcommand("enum", "enumerate canonical words (or shift classes)");
    c->fallthrough();
    auto n = std::make_shared<std::size_t>(0);
    auto classes = std::make_shared<bool>(false);
    c->add_option("-n,--letters", *n, "number of letters")->required();
    c->add_flag("--classes", *classes, "group into shift classes");
    c->callback([&, n, classes] {
      if (*classes) {
        const std::vector<CyclicClass> cls = enumerate_classes(*n);
        if (opt.json()) {
          ordered_json arr = ordered_json::array();
          for (const CyclicClass& cc : cls) arr.push_back(class_json(cc));
          std::cout << arr.dump(2) << "\n";
        } else {
          for (const CyclicClass& cc : cls) {
            bool first = true;
            for (const SignedWord& m : cc.members()) {
              std::cout << (first ? "" : " ") << format_word(m);
              first = false;
            }
            std::cout << "\n";
          }
        }
        return;
      }
      const std::vector<SignedWord> words = all_words(*n);
      if (opt.json()) {
        ordered_json arr = ordered_json::array();
        for (const SignedWord& w : words) arr.push_back(format_word(w));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const SignedWord& w : words) std::cout << format_word(w) << "\n";
      }
    });
  }

  // ---- sci --------------------------------------------------------------
  auto* sci_cmd = app.add_subcommand("sci", "order-n curve counting functionals");
  sci_cmd->require_subcommand(1);
  sci_cmd->fallthrough();
  {
    auto* c = sci_cmd->add_subcommand("compute", "functional counting n-letter restrictions");
    c->fallthrough();
    auto text = std::make_shared<std::string>();
    auto n = std::make_shared<std::size_t>(0);
    c->add_option("word", *text, "signed word")->required();
    c->add_option("-n,--order", *n, "subword size")->required();
    c->callback([&, text, n] { print_functional(sci(*n, parse_word(*text)), opt.json()); });
  }
  {
    auto* c = sci_cmd->add_subcommand("audit", "measure the composition-relation ratio on a corpus");
    c->fallthrough();
    auto l = std::make_shared<std::size_t>(0);
    auto k = std::make_shared<std::size_t>(0);
    auto path = std::make_shared<std::string>();
    c->add_option("-l", *l, "composed order")->required();
    c->add_option("-k", *k, "inner order")->required();
    c->add_option("--corpus", *path, "corpus file (text lines or JSON)")->required();
    c->callback([&, l, k, path] {
      const Corpus corpus = parse_corpus(read_file(*path));
      const AuditReport rep = relation_audit(*l, *k, corpus.words, opt.parallel);
      if (!rep.skipped.empty()) {
        std::cerr << "note: skipped " << rep.skipped.size() << " word(s) with fewer than "
                  << *k << " letters:";
        for (const std::string& s : rep.skipped) std::cerr << " " << s;
        std::cerr << "\n";
      }
      if (opt.json()) {
        std::cout << audit_json(rep).dump(2) << "\n";
        return;
      }
      for (const AuditRow& row : rep.rows) {
        std::cout << row.label << ": n=" << row.n << " lambda=" << row.measured_lambda.str()
                  << " oracle=" << row.oracle_coefficient.str() << " paper="
                  << (row.paper_coefficient ? row.paper_coefficient->str() : std::string("-"))
                  << " proportional=" << (row.proportional ? "yes" : "no") << "\n";
        for (const std::string& f : row.failures) std::cout << "  " << f << "\n";
      }
      std::cout << "all proportional: " << (rep.all_proportional ? "yes" : "no") << "\n";
    });
  }

  // ---- singular ---------------------------------------------------------
  auto* sing = app.add_subcommand("singular", "singular curves and their resolutions");
  sing->require_subcommand(1);
  sing->fallthrough();
  {
    auto* c = sing->add_subcommand("resolve", "rewrite the base word for one sign choice");
    c->fallthrough();
    auto path = std::make_shared<std::string>();
    auto sigma = std::make_shared<std::string>();
    auto all = std::make_shared<bool>(false);
    c->add_option("file", *path, "singular-curve JSON file")->required();
    c->add_option("--sigma", *sigma, "one '+' or '-' per point (default all '+')");
    c->add_flag("--all", *all, "print every resolution");
    c->callback([&, path, sigma, all] {
      const SingularCurve curve = load_curve(*path);
      if (*all) {
        const auto rows = resolve_all(curve);
        if (opt.json()) {
          ordered_json arr = ordered_json::array();
          for (const auto& [rv, w] : rows)
            arr.push_back(ordered_json{{"sigma", sigma_text(rv)},
                                       {"sign", rv.sign_product()},
                                       {"word", format_word(w)}});
          std::cout << arr.dump(2) << "\n";
        } else {
          for (const auto& [rv, w] : rows)
            std::cout << sigma_text(rv) << " " << (rv.sign_product() > 0 ? "+1" : "-1") << " "
                      << format_word(w) << "\n";
        }
        return;
      }
      ResolutionVector rv = sigma->empty()
                                ? ResolutionVector{std::vector<std::int8_t>(curve.points.size(), 1)}
                                : sigma_from_string(*sigma);
      const SignedWord w = resolve(curve, rv);
      if (opt.json())
        std::cout << ordered_json{{"word", format_word(w)}}.dump(2) << "\n";
      else
        std::cout << format_word(w) << "\n";
    });
  }
  {
    auto* c = sing->add_subcommand("expand", "signed sum of functionals over all resolutions");
    c->fallthrough();
    auto path = std::make_shared<std::string>();
    auto n = std::make_shared<std::size_t>(0);
    c->add_option("file", *path, "singular-curve JSON file")->required();
    c->add_option("-n,--order", *n, "functional order")->required();
    c->callback([&, path, n] {
      print_functional(expanded_invariant(*n, load_curve(*path), opt.parallel), opt.json());
    });
  }
  {
    auto* c = sing->add_subcommand("ftcheck", "exit 0 if the expanded invariant vanishes, 3 if not");
    c->fallthrough();
    auto path = std::make_shared<std::string>();
    auto n = std::make_shared<std::size_t>(0);
    c->add_option("file", *path, "singular-curve JSON file")->required();
    c->add_option("-n,--order", *n, "functional order")->required();
    c->callback([&, path, n] {
      const Functional f = expanded_invariant(*n, load_curve(*path), opt.parallel);
      print_functional(f, opt.json());
      if (!f.is_zero()) exit_code = 3;
    });
  }

  // ---- surface ----------------------------------------------------------
  auto* surf = app.add_subcommand("surface", "the carrier surface of a word");
  surf->require_subcommand(1);
  surf->fallthrough();
  {
    auto* c = surf->add_subcommand("genus", "genus of the carrier surface");
    c->fallthrough();
    auto text = std::make_shared<std::string>();
    c->add_option("word", *text, "signed word")->required();
    c->callback([&, text] {
      const std::size_t g = genus(parse_word(*text));
      if (opt.json())
        std::cout << ordered_json{{"genus", g}}.dump(2) << "\n";
      else
        std::cout << g << "\n";
    });
  }
  {
    auto* c = surf->add_subcommand("faces", "face-traced cell structure");
    c->fallthrough();
    auto text = std::make_shared<std::string>();
    c->add_option("word", *text, "signed word")->required();
    c->callback([&, text] {
      const SurfaceData s = surface_data(parse_word(*text));
      if (opt.json()) {
        std::cout << surface_json(s).dump(2) << "\n";
        return;
      }
      std::cout << "vertices: " << s.vertices << "\nedges: " << s.edges
                << "\nfaces: " << s.faces << "\neuler: " << s.euler << "\ngenus: " << s.genus
                << "\n";
      for (std::size_t i = 0; i < s.face_list.size(); ++i) {
        std::cout << "face " << i << ":";
        for (const Dart& d : s.face_list[i]) std::cout << " " << dart_label(d, s.edges);
        std::cout << "\n";
      }
    });
  }
  {
    auto* c = surf->add_subcommand("rot", "rotation number with the given face outside");
    c->fallthrough();
    auto text = std::make_shared<std::string>();
    auto outer = std::make_shared<std::size_t>(0);
    c->add_option("word", *text, "planar signed word")->required();
    c->add_option("--outer", *outer, "face id placed at infinity")->required();
    c->callback([&, text, outer] {
      const long long r = rotation_number(parse_word(*text), *outer);
      if (opt.json())
        std::cout << ordered_json{{"rotation", r}}.dump(2) << "\n";
      else
        std::cout << r << "\n";
    });
  }

  // ---- arnold -----------------------------------------------------------
  auto* arnold = app.add_subcommand("arnold", "classical plane-curve invariant relations");
  arnold->require_subcommand(1);
  arnold->fallthrough();
  {
    auto* c = arnold->add_subcommand("check", "residuals of the two linear relations");
    c->fallthrough();
    auto text = std::make_shared<std::string>();
    auto rot = std::make_shared<long long>(0);
    auto jplus = std::make_shared<std::string>("0");
    auto jminus = std::make_shared<std::string>("0");
    auto st = std::make_shared<std::string>("0");
    c->add_option("word", *text, "planar signed word")->required();
    c->add_option("--rot", *rot, "rotation number")->required();
    c->add_option("--jplus", *jplus, "J+ value (integer or p/q)")->required();
    c->add_option("--jminus", *jminus, "J- value (integer or p/q)")->required();
    c->add_option("--st", *st, "strangeness value (integer or p/q)")->required();
    c->callback([&, text, rot, jplus, jminus, st] {
      const PlaneCurveData p = plane_curve_with_rotation(parse_word(*text), *rot);
      const auto [r1, r2] = arnold_check(p, Rational::parse(*jplus), Rational::parse(*jminus),
                                         Rational::parse(*st));
      if (opt.json())
        std::cout << ordered_json{{"residuals", {r1.str(), r2.str()}}}.dump(2) << "\n";
      else
        std::cout << "residuals: " << r1.str() << " " << r2.str() << "\n";
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return exit_code;
}
