#include "tvb/document.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tvb {

namespace {

struct Value {
  bool is_list = false;
  Rational number;
  std::vector<Value> items;
  int line = 0;
  int column = 0;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : s_(text) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  int line() const { return line_; }
  int column() const { return col_; }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  // Spaces and tabs only; comments run to end of line.
  void skip_blank() {
    while (!done()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }
  void skip_blank_lines() {
    for (;;) {
      skip_blank();
      if (peek() != '\n') return;
      advance();
    }
  }
  void expect_line_end() {
    skip_blank();
    if (done()) return;
    if (peek() != '\n') fail(std::string("unexpected character '") + peek() + "'");
    advance();
  }

  std::string identifier() {
    std::string out;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += peek();
      advance();
    }
    if (out.empty()) fail("expected a name");
    return out;
  }

  Value value() {
    skip_blank_lines();
    Value v;
    v.line = line_;
    v.column = col_;
    if (done()) fail("expected a value");
    if (peek() == '[') {
      v.is_list = true;
      advance();
      skip_blank_lines();
      if (peek() == ']') {
        advance();
        return v;
      }
      for (;;) {
        v.items.push_back(value());
        skip_blank_lines();
        if (peek() == ',') {
          advance();
        } else if (peek() == ']') {
          advance();
          return v;
        } else if (done()) {
          throw ParseError("unclosed '['", v.line, v.column);
        } else {
          fail(std::string("expected ',' or ']', found '") + peek() + "'");
        }
      }
    }
    v.number = number();
    return v;
  }

 private:
  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  Rational number() {
    int l = line_, c = col_;
    std::string text;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') text += '-';
      advance();
    }
    std::string num = digits();
    if (num.empty()) fail(std::string("expected a number, found '") + peek() + "'");
    if (peek() == '.' || peek() == 'e' || peek() == 'E')
      throw ParseError("floating point literal; write rationals as p/q", l, c);
    text += num;
    Rational q(text, 10);
    if (peek() == '/') {
      advance();
      std::string den = digits();
      if (den.empty()) fail("expected a denominator after '/'");
      if (peek() == '.' || peek() == 'e' || peek() == 'E')
        throw ParseError("floating point literal; write rationals as p/q", l, c);
      Integer d(den, 10);
      if (d == 0) throw ParseError("zero denominator", l, c);
      q = Rational(Integer(text, 10), d);
      q.canonicalize();
    }
    return q;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void bad(const Value& v, const std::string& msg) { throw ParseError(msg, v.line, v.column); }

const std::vector<Value>& list(const Value& v, const std::string& what) {
  if (!v.is_list) bad(v, what + " must be a bracket list");
  return v.items;
}

Integer integer(const Value& v) {
  if (v.is_list) bad(v, "expected an integer, found a list");
  if (v.number.get_den() != 1) bad(v, "expected an integer, found " + v.number.get_str());
  return v.number.get_num();
}

ZVector int_vector(const Value& v, const std::string& what) {
  ZVector out;
  for (const Value& x : list(v, what)) out.push_back(integer(x));
  return out;
}

std::vector<ZVector> int_rows(const Value& v, const std::string& what) {
  std::vector<ZVector> out;
  for (const Value& r : list(v, what)) {
    out.push_back(int_vector(r, what + " entry"));
    if (out.size() > 1 && out.back().size() != out.front().size()) bad(r, what + " rows have different lengths");
  }
  return out;
}

ZMatrix to_matrix(const std::vector<ZVector>& rows, std::size_t cols) {
  ZMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

QMatrix rational_rows(const Value& v) {
  const auto& rows = list(v, "generators");
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = list(rows[i], "generator");
    if (i == 0) cols = r.size();
    if (r.size() != cols) bad(rows[i], "generator rows have different lengths");
  }
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Value& x = rows[i].items[j];
      if (x.is_list) bad(x, "expected a number, found a list");
      m(i, j) = x.number;
    }
  return m;
}

IndexSet index_set(const Value& v, std::size_t bound) {
  IndexSet s;
  for (const Value& x : list(v, "cone")) {
    Integer i = integer(x);
    if (i < 0 || i >= Integer(static_cast<unsigned long>(bound)))
      bad(x, "ray index " + i.get_str() + " out of range");
    if (s.contains(static_cast<int>(i.get_si()))) bad(x, "repeated ray index " + i.get_str());
    s = s | IndexSet{static_cast<int>(i.get_si())};
  }
  return s;
}

const std::map<std::string, std::set<std::string>>& grammar() {
  static const std::map<std::string, std::set<std::string>> g{
      {"fan", {"dim", "rays", "max_cones"}},
      {"ideal", {"generators"}},
      {"diagram", {"rows"}},
      {"fixtures", {"extra_columns", "extra_degrees", "extra_M_rows"}},
  };
  return g;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + "]";
}

template <class V>
std::string bracket(const V& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return join(parts);
}

std::string bracket(const ZVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.get_str());
  return join(parts);
}

}  // namespace

BundleDocument parse_document(const std::string& text) {
  Reader in(text);
  std::map<std::string, std::map<std::string, Value>> seen;
  std::string section;
  for (;;) {
    in.skip_blank_lines();
    if (in.done()) break;
    if (in.peek() == '[') {
      in.advance();
      in.skip_blank();
      int l = in.line(), c = in.column();
      section = in.identifier();
      if (!grammar().count(section)) throw ParseError("unknown section [" + section + "]", l, c);
      if (seen.count(section)) throw ParseError("section [" + section + "] appears twice", l, c);
      seen[section];
      in.skip_blank();
      if (in.peek() != ']') in.fail("expected ']'");
      in.advance();
      in.expect_line_end();
      continue;
    }
    int l = in.line(), c = in.column();
    std::string key = in.identifier();
    if (section.empty()) throw ParseError("key '" + key + "' outside any section", l, c);
    if (!grammar().at(section).count(key)) throw ParseError("unknown key '" + key + "' in [" + section + "]", l, c);
    if (seen[section].count(key)) throw ParseError("key '" + key + "' given twice", l, c);
    in.skip_blank();
    if (in.peek() != '=') in.fail("expected '='");
    in.advance();
    seen[section][key] = in.value();
    in.expect_line_end();
  }

  auto need = [&](const std::string& sec, const std::string& key) -> const Value& {
    auto s = seen.find(sec);
    if (s == seen.end()) throw ParseError("missing section [" + sec + "]", 1, 1);
    auto k = s->second.find(key);
    if (k == s->second.end()) throw ParseError("missing key '" + key + "' in [" + sec + "]", 1, 1);
    return k->second;
  };

  BundleDocument doc;
  const Value& dim = need("fan", "dim");
  Integer d = integer(dim);
  if (d <= 0) bad(dim, "dim must be positive");
  doc.fan.dim = d.get_ui();
  const Value& rays = need("fan", "rays");
  doc.fan.rays = int_rows(rays, "rays");
  for (std::size_t i = 0; i < doc.fan.rays.size(); ++i)
    if (doc.fan.rays[i].size() != doc.fan.dim) bad(rays.items[i], "ray length differs from dim");
  if (doc.fan.rays.size() > 64) bad(rays, "more than 64 rays");
  for (const Value& c : list(need("fan", "max_cones"), "max_cones"))
    doc.fan.max_cones.push_back(index_set(c, doc.fan.rays.size()));

  const std::size_t n = doc.fan.rays.size();
  std::optional<std::size_t> m;
  if (seen.count("diagram")) {
    const Value& rv = need("diagram", "rows");
    auto rows = int_rows(rv, "rows");
    if (rows.size() != n) bad(rv, "diagram has " + std::to_string(rows.size()) + " rows, fan has " + std::to_string(n) + " rays");
    m = rows.empty() ? 0 : rows.front().size();
    doc.diagram = to_matrix(rows, *m);
  }
  if (seen.count("ideal")) {
    const Value& gv = need("ideal", "generators");
    QMatrix g = rational_rows(gv);
    if (!m) bad(gv, "[ideal] needs a [diagram] section to fix the number of variables");
    if (g.rows() > 0 && g.cols() != *m)
      bad(gv, "generators have " + std::to_string(g.cols()) + " entries, diagram has " + std::to_string(*m) + " columns");
    if (g.rows() == 0) g = QMatrix(0, *m);
    doc.generators = g;
  }

  if (seen.count("fixtures")) {
    const auto& fx = seen["fixtures"];
    if (auto it = fx.find("extra_columns"); it != fx.end()) {
      doc.fixtures.extra_columns = int_rows(it->second, "extra_columns");
      for (std::size_t k = 0; k < doc.fixtures.extra_columns.size(); ++k)
        if (doc.fixtures.extra_columns[k].size() != n) bad(it->second.items[k], "extra column length differs from the ray count");
    }
    if (auto it = fx.find("extra_degrees"); it != fx.end()) {
      for (const Value& e : list(it->second, "extra_degrees")) {
        const auto& pair = list(e, "degree");
        if (pair.size() != 2) bad(e, "degree must be [[alpha...], symdeg]");
        doc.fixtures.extra_degrees.push_back(PEClass{int_vector(pair[0], "class"), integer(pair[1])});
      }
    }
    if (auto it = fx.find("extra_M_rows"); it != fx.end()) doc.fixtures.extra_M_rows = int_rows(it->second, "extra_M_rows");
    if (doc.fixtures.extra_columns.size() != doc.fixtures.extra_degrees.size())
      throw ParseError("extra_columns and extra_degrees differ in length", 1, 1);
  }
  return doc;
}

ToricVectorBundle BundleDocument::bundle() const {
  if (!diagram) throw InvalidInput("document has no [diagram] section");
  if (!generators) throw InvalidInput("document has no [ideal] section");
  return ToricVectorBundle(fan, LinearIdealMatrix(*generators, diagram->cols()), *diagram, fixtures);
}

BundleDocument read_document(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path);
  }
}

std::string format_fan(const Fan& f) {
  std::ostringstream out;
  out << "[fan]\ndim = " << f.dim << "\n";
  std::vector<std::string> rays, cones;
  for (const auto& r : f.rays) rays.push_back(bracket(r));
  for (const auto& c : f.max_cones) {
    std::vector<std::string> idx;
    for (int i : c.elements()) idx.push_back(std::to_string(i));
    cones.push_back(join(idx));
  }
  out << "rays = " << join(rays) << "\nmax_cones = " << join(cones) << "\n";
  return out.str();
}

std::string format_document(const ToricVectorBundle& e) {
  std::ostringstream out;
  out << format_fan(e.fan()) << "\n[ideal]\ngenerators = [";
  const QMatrix& g = e.ideal().coeffs;
  for (std::size_t i = 0; i < g.rows(); ++i) out << (i ? ",\n  " : "") << bracket(g.row(i));
  out << "]\n\n[diagram]\nrows = [";
  for (std::size_t i = 0; i < e.n(); ++i) out << (i ? ",\n  " : "") << bracket(e.diagram().row(i));
  out << "]\n";
  const Fixtures& fx = e.fixtures();
  if (!fx.empty()) {
    out << "\n[fixtures]\n";
    std::vector<std::string> cols, degs, rows;
    for (const auto& c : fx.extra_columns) cols.push_back(bracket(c));
    for (const auto& d : fx.extra_degrees) degs.push_back("[" + bracket(d.alpha) + ", " + d.beta.get_str() + "]");
    for (const auto& r : fx.extra_M_rows) rows.push_back(bracket(r));
    out << "extra_columns = " << join(cols) << "\nextra_degrees = " << join(degs) << "\n";
    if (!rows.empty()) out << "extra_M_rows = " << join(rows) << "\n";
  }
  return out.str();
}

PEClass parse_class(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
    throw InvalidInput("class must read alpha;beta, got '" + text + "'");
  auto to_int = [&](std::string s) {
    std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    if (a == std::string::npos) throw InvalidInput("empty entry in class '" + text + "'");
    s = s.substr(a, b - a + 1);
    if (s[0] == '+') s = s.substr(1);
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InvalidInput("class entries must be integers, got '" + s + "'");
    return Integer(s, 10);
  };
  PEClass c;
  std::string head = text.substr(0, semi);
  if (head.find_first_not_of(" \t") != std::string::npos) {
    std::stringstream ss(head);
    std::string part;
    while (std::getline(ss, part, ',')) c.alpha.push_back(to_int(part));
    if (!head.empty() && head.back() == ',') throw InvalidInput("trailing comma in class '" + text + "'");
  }
  c.beta = to_int(text.substr(semi + 1));
  return c;
}

}  // namespace tvb
