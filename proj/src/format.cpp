#include "gpd/format.hpp"

#include <cctype>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "gpd/standard.hpp"

namespace gpd {

namespace {

struct Token {
  std::string text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++number;
    Line line;
    line.number = number;
    for (std::size_t i = pos; i < eol;) {
      if (text[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < eol && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '#')
        ++i;
      line.tokens.push_back(Token{text.substr(start, i - start),
                                  static_cast<int>(start - pos) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void fail_at(const std::string& msg, const Line& line, int column) {
  throw ParseError(msg, line.number, column);
}

int want_int(const Line& line, std::size_t index) {
  if (index >= line.tokens.size())
    fail_at("expected integer", line,
            line.tokens.empty() ? 1 : line.tokens.back().column);
  const Token& t = line.tokens[index];
  try {
    std::size_t used = 0;
    int value = std::stoi(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    fail_at("expected integer, got '" + t.text + "'", line, t.column);
  }
}

const std::string& want_word(const Line& line, std::size_t index,
                             const char* what) {
  if (index >= line.tokens.size())
    fail_at(std::string("expected ") + what, line,
            line.tokens.empty() ? 1 : line.tokens.back().column);
  return line.tokens[index].text;
}

void want_literal(const Line& line, std::size_t index, const char* literal) {
  const std::string& got = want_word(line, index, literal);
  if (got != literal)
    fail_at(std::string("expected '") + literal + "', got '" + got + "'", line,
            line.tokens[index].column);
}

void want_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count)
    fail_at("expected " + std::to_string(count) + " fields on this line", line,
            line.tokens[0].column);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  Document run() {
    while (index_ < lines_.size()) {
      const Line& line = lines_[index_];
      const std::string& head = line.tokens[0].text;
      if (head == "groupoid")
        parse_groupoid_block();
      else if (head == "std")
        parse_std_line();
      else if (head == "functor")
        parse_functor_block();
      else if (head == "fraction")
        parse_fraction_block();
      else
        fail_at("unknown directive '" + head + "'", line,
                line.tokens[0].column);
    }
    return std::move(doc_);
  }

 private:
  const Line& next_block_line(const Line& opener) {
    if (index_ >= lines_.size())
      fail_at("unterminated block (missing 'end')", opener,
              opener.tokens[0].column);
    return lines_[index_];
  }

  std::string take_fresh_name(const Line& line, std::size_t index) {
    const std::string& name = want_word(line, index, "name");
    if (doc_.find_groupoid(name) || doc_.find_functor(name) ||
        doc_.find_fraction(name))
      fail_at("duplicate name '" + name + "'", line,
              line.tokens[index].column);
    return name;
  }

  GroupoidPtr want_groupoid(const Line& line, std::size_t index) {
    const std::string& name = want_word(line, index, "groupoid name");
    const GroupoidPtr* g = doc_.find_groupoid(name);
    if (!g)
      fail_at("unknown groupoid '" + name + "'", line,
              line.tokens[index].column);
    return *g;
  }

  const Functor& want_functor(const Line& line, std::size_t index) {
    const std::string& name = want_word(line, index, "functor name");
    const Functor* f = doc_.find_functor(name);
    if (!f)
      fail_at("unknown functor '" + name + "'", line,
              line.tokens[index].column);
    return *f;
  }

  void parse_groupoid_block() {
    const Line opener = lines_[index_++];
    want_arity(opener, 2);
    std::string name = take_fresh_name(opener, 1);

    int num_objects = -1;
    std::map<int, ArrowEnds> arrows;
    std::map<int, int> units, inverses;
    std::map<std::pair<int, int>, int> comps;

    for (;;) {
      const Line& line = next_block_line(opener);
      const std::string& head = line.tokens[0].text;
      if (head == "end") {
        want_arity(line, 1);
        ++index_;
        break;
      }
      ++index_;
      if (head == "objects") {
        want_arity(line, 2);
        num_objects = want_int(line, 1);
        if (num_objects < 0)
          fail_at("objects count must be non-negative", line,
                  line.tokens[1].column);
      } else if (head == "arrow") {
        want_arity(line, 4);
        int id = want_int(line, 1);
        if (arrows.count(id))
          fail_at("duplicate arrow id " + std::to_string(id), line,
                  line.tokens[1].column);
        arrows[id] = ArrowEnds{want_int(line, 2), want_int(line, 3)};
      } else if (head == "unit") {
        want_arity(line, 3);
        int obj = want_int(line, 1);
        if (units.count(obj))
          fail_at("duplicate unit for object " + std::to_string(obj), line,
                  line.tokens[1].column);
        units[obj] = want_int(line, 2);
      } else if (head == "inv") {
        want_arity(line, 3);
        int a = want_int(line, 1), b = want_int(line, 2);
        auto it = inverses.find(a);
        if (it != inverses.end() && it->second != b)
          fail_at("conflicting inv entry for arrow " + std::to_string(a), line,
                  line.tokens[1].column);
        inverses[a] = b;
      } else if (head == "comp") {
        want_arity(line, 4);
        int a = want_int(line, 1), b = want_int(line, 2), c = want_int(line, 3);
        auto key = std::make_pair(a, b);
        auto it = comps.find(key);
        if (it != comps.end() && it->second != c)
          fail_at("conflicting comp entry for pair (" + std::to_string(a) +
                      ", " + std::to_string(b) + ")",
                  line, line.tokens[1].column);
        comps[key] = c;
      } else {
        fail_at("unknown groupoid field '" + head + "'", line,
                line.tokens[0].column);
      }
    }

    if (num_objects < 0)
      fail_at("groupoid block needs an 'objects' line", opener,
              opener.tokens[0].column);
    const int m = static_cast<int>(arrows.size());
    std::vector<ArrowEnds> ends(static_cast<std::size_t>(m));
    for (const auto& [id, e] : arrows) {
      if (id < 0 || id >= m)
        throw ValidationError("groupoid " + name + ": arrow ids must be dense 0.." +
                              std::to_string(m - 1));
      ends[static_cast<std::size_t>(id)] = e;
    }
    std::vector<int> unit_vec(static_cast<std::size_t>(num_objects), -1);
    for (const auto& [obj, a] : units) {
      if (obj < 0 || obj >= num_objects)
        throw ValidationError("groupoid " + name + ": unit names object " +
                              std::to_string(obj) + " out of range");
      unit_vec[static_cast<std::size_t>(obj)] = a;
    }
    for (int x = 0; x < num_objects; ++x)
      if (unit_vec[static_cast<std::size_t>(x)] < 0)
        throw ValidationError("groupoid " + name + ": unit missing for object " +
                              std::to_string(x));
    std::vector<int> inv_vec(static_cast<std::size_t>(m), -1);
    for (const auto& [a, b] : inverses) {
      if (a < 0 || a >= m)
        throw ValidationError("groupoid " + name + ": inv names arrow " +
                              std::to_string(a) + " out of range");
      inv_vec[static_cast<std::size_t>(a)] = b;
    }
    for (int a = 0; a < m; ++a)
      if (inv_vec[static_cast<std::size_t>(a)] < 0)
        throw ValidationError("groupoid " + name + ": inv missing for arrow " +
                              std::to_string(a));
    std::vector<int> comp(static_cast<std::size_t>(m) * static_cast<std::size_t>(m),
                          -1);
    for (const auto& [key, c] : comps) {
      const auto [a, b] = key;
      if (a < 0 || a >= m || b < 0 || b >= m)
        throw ValidationError("groupoid " + name + ": comp names an arrow out of range");
      comp[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) +
           static_cast<std::size_t>(b)] = c;
    }
    GroupoidPtr g = share(FiniteGroupoid(num_objects, std::move(ends),
                                         std::move(unit_vec), std::move(inv_vec),
                                         std::move(comp)));
    ValidationReport report = validate_groupoid(*g);
    if (!report.ok())
      throw ValidationError("groupoid " + name + ": " + report.violations.front());
    doc_.groupoids.emplace_back(std::move(name), std::move(g));
  }

  std::vector<int> tail_ints(const Line& line, std::size_t from) {
    std::vector<int> out;
    for (std::size_t i = from; i < line.tokens.size(); ++i)
      out.push_back(want_int(line, i));
    return out;
  }

  void parse_std_line() {
    const Line& line = lines_[index_++];
    std::string name = take_fresh_name(line, 1);
    want_literal(line, 2, "=");
    const std::string& form = want_word(line, 3, "construction");
    std::optional<FiniteGroupoid> built;
    if (form == "null") {
      want_arity(line, 5);
      built = null_groupoid(want_int(line, 4));
    } else if (form == "pair") {
      want_arity(line, 5);
      built = pair_groupoid(want_int(line, 4));
    } else if (form == "cyclic") {
      want_arity(line, 5);
      built = cyclic_group(want_int(line, 4));
    } else if (form == "sym3") {
      want_arity(line, 4);
      built = symmetric_group_3();
    } else if (form == "equivrel") {
      int k = want_int(line, 4);
      std::vector<int> blocks = tail_ints(line, 5);
      if (static_cast<int>(blocks.size()) != k)
        fail_at("equivrel needs one block id per object", line,
                line.tokens[4].column);
      built = equivalence_relation(k, blocks);
    } else if (form == "action") {
      want_literal(line, 4, "cyclic");
      int k = want_int(line, 5);
      want_literal(line, 6, "on");
      int m = want_int(line, 7);
      std::vector<int> image = tail_ints(line, 8);
      if (static_cast<int>(image.size()) != m)
        fail_at("action needs one generator image per point", line,
                line.tokens[7].column);
      built = action_groupoid(cyclic_group(k), m, cyclic_action(k, image));
    } else if (form == "union") {
      want_arity(line, 6);
      built = disjoint_union(*want_groupoid(line, 4), *want_groupoid(line, 5));
    } else if (form == "product") {
      want_arity(line, 6);
      built = direct_product(*want_groupoid(line, 4), *want_groupoid(line, 5));
    } else if (form == "induce") {
      GroupoidPtr parent = want_groupoid(line, 4);
      want_literal(line, 5, "along");
      std::vector<int> image = tail_ints(line, 6);
      const int n = static_cast<int>(image.size());
      SetMap u(n, parent->num_objects(), std::move(image));
      doc_.groupoids.emplace_back(std::move(name),
                                  induce(parent, u).groupoid);
      return;
    } else {
      fail_at("unknown construction '" + form + "'", line,
              line.tokens[3].column);
    }
    doc_.groupoids.emplace_back(std::move(name), share(std::move(*built)));
  }

  void parse_functor_block() {
    const Line opener = lines_[index_++];
    want_arity(opener, 6);
    std::string name = take_fresh_name(opener, 1);
    want_literal(opener, 2, ":");
    GroupoidPtr dom = want_groupoid(opener, 3);
    want_literal(opener, 4, "->");
    GroupoidPtr cod = want_groupoid(opener, 5);

    std::vector<int> obj(static_cast<std::size_t>(dom->num_objects()), -1);
    std::vector<int> arr(static_cast<std::size_t>(dom->num_arrows()), -1);
    for (;;) {
      const Line& line = next_block_line(opener);
      const std::string& head = line.tokens[0].text;
      if (head == "end") {
        want_arity(line, 1);
        ++index_;
        break;
      }
      ++index_;
      if (head == "obj") {
        want_arity(line, 3);
        int x = want_int(line, 1);
        if (x < 0 || x >= dom->num_objects())
          fail_at("object " + std::to_string(x) + " out of range", line,
                  line.tokens[1].column);
        obj[static_cast<std::size_t>(x)] = want_int(line, 2);
      } else if (head == "arr") {
        want_arity(line, 3);
        int a = want_int(line, 1);
        if (a < 0 || a >= dom->num_arrows())
          fail_at("arrow " + std::to_string(a) + " out of range", line,
                  line.tokens[1].column);
        arr[static_cast<std::size_t>(a)] = want_int(line, 2);
      } else {
        fail_at("unknown functor field '" + head + "'", line,
                line.tokens[0].column);
      }
    }
    for (int x = 0; x < dom->num_objects(); ++x)
      if (obj[static_cast<std::size_t>(x)] < 0)
        throw ValidationError("functor " + name + ": object " +
                              std::to_string(x) + " has no image");
    for (int a = 0; a < dom->num_arrows(); ++a)
      if (arr[static_cast<std::size_t>(a)] < 0)
        throw ValidationError("functor " + name + ": arrow " +
                              std::to_string(a) + " has no image");
    Functor f(std::move(dom), std::move(cod), std::move(obj), std::move(arr));
    ValidationReport report = validate_functor(f);
    if (!report.ok())
      throw ValidationError("functor " + name + ": " + report.violations.front());
    doc_.functors.emplace_back(std::move(name), std::move(f));
  }

  void parse_fraction_block() {
    const Line opener = lines_[index_++];
    want_arity(opener, 8);
    std::string name = take_fresh_name(opener, 1);
    want_literal(opener, 2, ":");
    GroupoidPtr source = want_groupoid(opener, 3);
    want_literal(opener, 4, "<-");
    GroupoidPtr apex = want_groupoid(opener, 5);
    want_literal(opener, 6, "->");
    GroupoidPtr target = want_groupoid(opener, 7);

    const Functor* num = nullptr;
    const Functor* den = nullptr;
    for (;;) {
      const Line& line = next_block_line(opener);
      const std::string& head = line.tokens[0].text;
      if (head == "end") {
        want_arity(line, 1);
        ++index_;
        break;
      }
      ++index_;
      if (head == "num") {
        want_arity(line, 2);
        num = &want_functor(line, 1);
      } else if (head == "den") {
        want_arity(line, 2);
        den = &want_functor(line, 1);
      } else {
        fail_at("unknown fraction field '" + head + "'", line,
                line.tokens[0].column);
      }
    }
    if (!num || !den)
      throw ValidationError("fraction " + name + ": needs num and den lines");
    if (num->dom_ptr() != apex || den->dom_ptr() != apex)
      throw ValidationError("fraction " + name +
                            ": legs do not share the declared apex");
    if (den->cod_ptr() != source)
      throw ValidationError("fraction " + name +
                            ": denominator codomain is not the declared source");
    if (num->cod_ptr() != target)
      throw ValidationError("fraction " + name +
                            ": numerator codomain is not the declared target");
    doc_.fractions.emplace_back(std::move(name), Fraction(*num, *den));
  }

  std::vector<Line> lines_;
  std::size_t index_ = 0;
  Document doc_;
};

}  // namespace

const GroupoidPtr* Document::find_groupoid(const std::string& name) const {
  for (const auto& [n, g] : groupoids)
    if (n == name) return &g;
  return nullptr;
}

const Functor* Document::find_functor(const std::string& name) const {
  for (const auto& [n, f] : functors)
    if (n == name) return &f;
  return nullptr;
}

const Fraction* Document::find_fraction(const std::string& name) const {
  for (const auto& [n, f] : fractions)
    if (n == name) return &f;
  return nullptr;
}

Document parse_document(const std::string& text) { return Parser(text).run(); }

namespace {

const std::string& groupoid_name_of(const Document& doc, const GroupoidPtr& g,
                                    const char* role) {
  for (const auto& [name, other] : doc.groupoids)
    if (other == g) return name;
  throw Error(std::string("serialize_document: ") + role +
              " groupoid has no name in the document");
}

const std::string& functor_name_of(const Document& doc, const Functor& f,
                                   const char* role) {
  for (const auto& [name, other] : doc.functors)
    if (other == f) return name;
  throw Error(std::string("serialize_document: ") + role +
              " functor has no name in the document");
}

}  // namespace

std::string serialize_document(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, gp] : doc.groupoids) {
    const FiniteGroupoid& g = *gp;
    if (!first) os << "\n";
    first = false;
    os << "groupoid " << name << "\n";
    os << "  objects " << g.num_objects() << "\n";
    for (int a = 0; a < g.num_arrows(); ++a)
      os << "  arrow " << a << " " << g.src(a) << " " << g.tgt(a) << "\n";
    for (int x = 0; x < g.num_objects(); ++x)
      os << "  unit " << x << " " << g.unit(x) << "\n";
    for (int a = 0; a < g.num_arrows(); ++a)
      os << "  inv " << a << " " << g.inv(a) << "\n";
    for (int a = 0; a < g.num_arrows(); ++a)
      for (int b = 0; b < g.num_arrows(); ++b)
        if (g.composable(a, b))
          os << "  comp " << a << " " << b << " " << g.comp(a, b) << "\n";
    os << "end\n";
  }
  for (const auto& [name, f] : doc.functors) {
    if (!first) os << "\n";
    first = false;
    os << "functor " << name << " : "
       << groupoid_name_of(doc, f.dom_ptr(), "functor domain") << " -> "
       << groupoid_name_of(doc, f.cod_ptr(), "functor codomain") << "\n";
    for (int x = 0; x < f.dom().num_objects(); ++x)
      os << "  obj " << x << " " << f.on_object(x) << "\n";
    for (int a = 0; a < f.dom().num_arrows(); ++a)
      os << "  arr " << a << " " << f.on_arrow(a) << "\n";
    os << "end\n";
  }
  for (const auto& [name, fr] : doc.fractions) {
    if (!first) os << "\n";
    first = false;
    os << "fraction " << name << " : "
       << groupoid_name_of(doc, fr.source_ptr(), "fraction source") << " <- "
       << groupoid_name_of(doc, fr.apex_ptr(), "fraction apex") << " -> "
       << groupoid_name_of(doc, fr.target_ptr(), "fraction target") << "\n";
    os << "  num " << functor_name_of(doc, fr.numerator, "numerator") << "\n";
    os << "  den " << functor_name_of(doc, fr.denominator, "denominator") << "\n";
    os << "end\n";
  }
  return os.str();
}

}  // namespace gpd
