#include "quivermod/instance_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>

namespace quivermod {

const char* algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Path: return "path";
    case AlgebraKind::Preprojective: return "preprojective";
    case AlgebraKind::Explicit: return "explicit";
  }
  return "?";
}

namespace detail {

void fail_at(const Located& where, const std::string& message) {
  throw ParseError(where.line, where.column, message);
}

}  // namespace detail

using detail::fail_at;

int InstanceFile::resolved_truncation() const {
  return truncation ? *truncation : std::max(1, nilpotency_bound(v));
}

Quiver InstanceFile::quiver() const {
  const VertexSet vs(vertices);
  std::vector<Edge> es;
  for (const auto& e : edges) es.push_back({e.label.text, vs.index_of(e.source.text), vs.index_of(e.target.text)});
  return Quiver(vs, std::move(es));
}

namespace {

struct Line {
  Located key;
  std::vector<Located> values;
};

std::vector<Located> split_words(const std::string& text, std::size_t line, std::size_t offset) {
  std::vector<Located> out;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k == text.size()) break;
    const auto start = k;
    while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    out.push_back({text.substr(start, k - start), line, offset + start + 1});
  }
  return out;
}

int parse_int(const Located& tok, const char* what) {
  int value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) fail_at(tok, std::string("expected an integer for ") + what + ", got '" + tok.text + "'");
  return value;
}

class Parser {
 public:
  InstanceFile run(std::istream& in) {
    std::string text;
    std::size_t lineno = 0;
    while (std::getline(in, text)) {
      ++lineno;
      if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
      const auto words = split_words(text, lineno, 0);
      if (words.empty()) continue;
      const auto colon = text.find(':');
      if (colon == std::string::npos) fail_at(words.front(), "expected 'key: value'");
      auto key_words = split_words(text.substr(0, colon), lineno, 0);
      if (key_words.size() != 1) fail_at(words.front(), "expected a single key before ':'");
      handle({key_words.front(), split_words(text.substr(colon + 1), lineno, colon + 1)});
    }
    finish();
    return std::move(f_);
  }

 private:
  void once(const Located& key) {
    if (!seen_.insert(key.text).second) fail_at(key, "duplicate '" + key.text + "' line");
    where_[key.text] = key;
  }

  static void arity(const Line& l, std::size_t lo, std::size_t hi) {
    if (l.values.size() < lo || l.values.size() > hi) {
      const auto expected = lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
      fail_at(l.key, "'" + l.key.text + "' takes " + expected + " value(s), got " + std::to_string(l.values.size()));
    }
  }

  void handle(const Line& l) {
    const auto& k = l.key.text;
    if (k == "vertices") {
      once(l.key);
      if (l.values.empty()) fail_at(l.key, "at least one vertex required");
      std::set<std::string> names;
      for (const auto& v : l.values) {
        if (!names.insert(v.text).second) fail_at(v, "duplicate vertex '" + v.text + "'");
        f_.vertices.push_back(v.text);
      }
      f_.vertices_at = l.key;
    } else if (k == "edge") {
      arity(l, 3, 3);
      f_.edges.push_back({l.values[0], l.values[1], l.values[2]});
    } else if (k == "algebra") {
      once(l.key);
      arity(l, 1, 1);
      const auto& a = l.values[0].text;
      if (a == "path") f_.algebra = AlgebraKind::Path;
      else if (a == "preprojective") f_.algebra = AlgebraKind::Preprojective;
      else if (a == "explicit") f_.algebra = AlgebraKind::Explicit;
      else fail_at(l.values[0], "algebra must be preprojective, path or explicit");
    } else if (k == "truncation") {
      once(l.key);
      arity(l, 1, 1);
      if (l.values[0].text != "auto") {
        const int n = parse_int(l.values[0], "truncation");
        if (n < 1) fail_at(l.values[0], "truncation must be a positive integer or auto");
        f_.truncation = n;
      }
    } else if (k == "d" || k == "v") {
      once(l.key);
      std::vector<int> entries;
      for (const auto& t : l.values) {
        const int n = parse_int(t, "a dimension");
        if (n < 0) fail_at(t, "dimensions must be nonnegative");
        entries.push_back(n);
      }
      (k == "d" ? f_.d : f_.v) = DimVector(std::move(entries));
    } else if (k == "field") {
      once(l.key);
      arity(l, 1, 1);
      const auto& t = l.values[0];
      if (t.text == "Q") {
        f_.field = FieldSpec::rationals();
      } else if (t.text.size() > 1 && t.text[0] == 'F') {
        const Located num{t.text.substr(1), t.line, t.column + 1};
        const int p = parse_int(num, "the characteristic");
        try {
          f_.field = FieldSpec::prime(static_cast<std::uint64_t>(std::max(p, 0)));
        } catch (const std::invalid_argument& e) {
          fail_at(num, e.what());
        }
      } else {
        fail_at(t, "field must be Q or F<p>");
      }
    } else if (k == "nilpotent") {
      once(l.key);
      arity(l, 1, 1);
      if (l.values[0].text == "true") f_.nilpotent = true;
      else if (l.values[0].text == "false") f_.nilpotent = false;
      else fail_at(l.values[0], "nilpotent must be true or false");
    } else if (k == "basis") {
      arity(l, 3, 4);
      InstanceFile::BasisSpec b{l.values[0], l.values[1], l.values[2], std::nullopt};
      if (l.values.size() == 4) {
        const int deg = parse_int(l.values[3], "degree");
        if (deg < 0) fail_at(l.values[3], "degree must be nonnegative");
        b.degree = deg;
      }
      f_.basis.push_back(std::move(b));
    } else if (k == "idempotent") {
      arity(l, 2, 2);
      f_.idempotents.push_back({l.values[0], l.values[1]});
    } else if (k == "mult") {
      if (l.values.size() < 4 || l.values[2].text != "=")
        fail_at(l.key, "expected 'mult: <b> <b'> = <terms>'");
      mults_.push_back(l);
    } else {
      fail_at(l.key, "unknown key '" + k + "'");
    }
  }

  void require(const char* key) {
    if (!seen_.count(key)) throw ParseError(0, 0, std::string("missing '") + key + ":' line");
  }

  std::size_t vertex(const Located& t) const {
    for (std::size_t i = 0; i < f_.vertices.size(); ++i)
      if (f_.vertices[i] == t.text) return i;
    fail_at(t, "unknown vertex '" + t.text + "'");
  }

  void check_label(const Located& t) {
    const auto& s = t.text;
    if (s.front() == '-' || s.front() == '+' || s.find('=') != std::string::npos)
      fail_at(t, "labels may not start with '+' or '-' or contain '='");
  }

  void finish() {
    require("vertices");
    require("d");
    require("v");
    require("field");
    const auto n = f_.vertices.size();
    if (f_.d.size() != n) fail_at(where_["d"], "d has " + std::to_string(f_.d.size()) + " entries, expected " + std::to_string(n));
    if (f_.v.size() != n) fail_at(where_["v"], "v has " + std::to_string(f_.v.size()) + " entries, expected " + std::to_string(n));

    const bool explicit_alg = f_.algebra == AlgebraKind::Explicit;
    if (!explicit_alg) {
      if (!f_.basis.empty()) fail_at(f_.basis.front().label, "basis lines require 'algebra: explicit'");
      if (!f_.idempotents.empty()) fail_at(f_.idempotents.front().vertex, "idempotent lines require 'algebra: explicit'");
      if (!mults_.empty()) fail_at(mults_.front().key, "mult lines require 'algebra: explicit'");
      std::set<std::string> labels;
      for (const auto& e : f_.edges) {
        check_label(e.label);
        if (!labels.insert(e.label.text).second) fail_at(e.label, "duplicate edge '" + e.label.text + "'");
        const auto s = vertex(e.source);
        const auto t = vertex(e.target);
        if (f_.algebra == AlgebraKind::Preprojective && s == t)
          fail_at(e.label, "preprojective algebra requires a quiver without edge-loops; edge '" + e.label.text +
                               "' is a loop at vertex " + e.source.text);
      }
      if (f_.algebra == AlgebraKind::Preprojective)
        for (const auto& e : f_.edges)
          if (labels.count(e.label.text + "*"))
            fail_at(e.label, "edge label '" + e.label.text + "*' collides with the doubled arrow of '" + e.label.text + "'");
      return;
    }

    if (!f_.edges.empty()) fail_at(f_.edges.front().label, "edge lines are not used by 'algebra: explicit'");
    if (seen_.count("truncation")) fail_at(where_["truncation"], "truncation does not apply to 'algebra: explicit'");
    if (f_.basis.empty()) fail_at(where_["algebra"], "explicit algebras need 'basis:' lines");
    std::set<std::string> labels;
    for (const auto& b : f_.basis) {
      check_label(b.label);
      if (!labels.insert(b.label.text).second) fail_at(b.label, "duplicate basis element '" + b.label.text + "'");
      vertex(b.source);
      vertex(b.target);
    }
    auto known = [&](const Located& t) {
      if (!labels.count(t.text)) fail_at(t, "unknown basis element '" + t.text + "'");
    };
    for (const auto& e : f_.idempotents) {
      vertex(e.vertex);
      known(e.element);
    }
    for (const auto& l : mults_) {
      InstanceFile::MultSpec m{l.values[0], l.values[1], {}};
      known(m.left);
      known(m.right);
      bool negate = false;
      bool expect_term = true;
      for (std::size_t k = 3; k < l.values.size(); ++k) {
        const auto& tok = l.values[k];
        if (tok.text == "+" || tok.text == "-") {
          if (!expect_term && tok.text == "-") negate = true;
          if (expect_term) fail_at(tok, "expected a term");
          expect_term = true;
          continue;
        }
        if (!expect_term) fail_at(tok, "expected '+' or '-' between terms");
        expect_term = false;
        Located body = tok;
        bool neg = negate;
        negate = false;
        if (body.text.front() == '-') {
          neg = !neg;
          body.text.erase(0, 1);
          ++body.column;
        }
        if (body.text.empty()) fail_at(tok, "expected a term");
        if (labels.count(body.text)) {
          m.terms.push_back({body, {"1", body.line, body.column}, neg});
          continue;
        }
        if (body.text == "0" && l.values.size() == 4) continue;
        bool matched = false;
        for (auto star = body.text.find('*'); star != std::string::npos; star = body.text.find('*', star + 1)) {
          const auto left = body.text.substr(0, star);
          const auto right = body.text.substr(star + 1);
          const Located lt{left, body.line, body.column};
          const Located rt{right, body.line, body.column + star + 1};
          if (labels.count(left) && !right.empty() && !labels.count(right)) {
            m.terms.push_back({lt, rt, neg});
            matched = true;
            break;
          }
          if (labels.count(right) && !left.empty()) {
            m.terms.push_back({rt, lt, neg});
            matched = true;
            break;
          }
        }
        if (!matched) fail_at(body, "expected '<label>', '<label>*<scalar>' or '<scalar>*<label>', got '" + body.text + "'");
      }
      if (expect_term) fail_at(l.values.back(), "expression ends without a term");
      f_.mults.push_back(std::move(m));
    }
  }

  InstanceFile f_;
  std::set<std::string> seen_;
  std::map<std::string, Located> where_;
  std::vector<Line> mults_;
};

}  // namespace

InstanceFile parse_instance(std::istream& in) { return Parser().run(in); }

InstanceFile parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return parse_instance(in);
}

}  // namespace quivermod
