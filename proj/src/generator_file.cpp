#include "quatgeo/generator_file.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "quatgeo/errors.hpp"

namespace quatgeo {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }
};

bool is_unit_char(char c) {
  char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return l == 'i' || l == 'j' || l == 'k';
}

// One quaternion literal: sum of signed terms, each a coefficient, a unit,
// or both ("1/2", "-3i", "+j", "1.5k").
Quat<Rat> parse_quat_at(Cursor& c) {
  Quat<Rat> q;
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.take() == '-') sign = -1;
      c.skip_ws();
    } else if (!first) {
      break;  // no further +/- means the literal ended
    }
    std::string num;
    while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) ||
                         c.peek() == '/' || c.peek() == '.'))
      num += c.take();
    Rat coeff(1);
    if (!num.empty()) {
      auto parsed = Rat::parse(num);
      if (!parsed) c.fail("bad number '" + num + "'");
      coeff = *parsed;
    }
    c.skip_ws();
    char unit = '\0';
    if (!c.done() && is_unit_char(c.peek())) unit = static_cast<char>(
        std::tolower(static_cast<unsigned char>(c.take())));
    if (num.empty() && unit == '\0') c.fail("expected a quaternion term");
    if (sign < 0) coeff = -coeff;
    switch (unit) {
      case '\0': q.w += coeff; break;
      case 'i': q.x += coeff; break;
      case 'j': q.y += coeff; break;
      case 'k': q.z += coeff; break;
    }
    first = false;
    c.skip_ws();
    if (c.peek() != '+' && c.peek() != '-') break;
  }
  return q;
}

// "[q, q, ...]" rows, repeated; all rows must have equal length and the row
// count must match it.
QMatrix<Rat> parse_matrix_at(Cursor& c) {
  std::vector<std::vector<Quat<Rat>>> rows;
  while (true) {
    c.skip_ws();
    if (c.peek() != '[') break;
    c.take();
    std::vector<Quat<Rat>> row;
    while (true) {
      c.skip_ws();
      row.push_back(parse_quat_at(c));
      c.skip_ws();
      if (c.peek() == ',') {
        c.take();
        continue;
      }
      if (c.peek() == ']') {
        c.take();
        break;
      }
      c.fail("expected ',' or ']' in matrix row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) c.fail("expected a matrix row '[...]'");
  std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) c.fail("matrix must be square with equal-length rows");
  QMatrix<Rat> m(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::string take_identifier(Cursor& c) {
  std::string s;
  while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) ||
                       c.peek() == '_' || c.peek() == '-'))
    s += c.take();
  return s;
}

void expect_line_end(Cursor& c) {
  c.skip_ws();
  if (c.peek() == '#')
    while (!c.done() && c.peek() != '\n') c.take();
  if (!c.done() && c.peek() != '\n') c.fail("unexpected trailing text");
  if (!c.done()) c.take();
}

}  // namespace

std::vector<AffineMap<Rat>> GeneratorFile::generator_maps() const {
  std::vector<AffineMap<Rat>> maps;
  for (const auto& e : entries)
    if (e.affine) maps.push_back(AffineMap<Rat>::from_matrix(e.matrix));
  return maps;
}

std::vector<std::string> GeneratorFile::generator_labels() const {
  std::vector<std::string> labels;
  for (const auto& e : entries)
    if (e.affine) labels.push_back(e.name);
  return labels;
}

GeneratorFile parse_generator_file(const std::string& text) {
  Cursor c{text};
  GeneratorFile f;
  bool got_header = false;

  while (!c.done()) {
    c.skip_ws();
    if (c.peek() == '\n') {
      c.take();
      continue;
    }
    if (c.peek() == '#') {
      while (!c.done() && c.peek() != '\n') c.take();
      continue;
    }
    std::string word = take_identifier(c);
    if (word.empty()) c.fail("expected a directive");

    if (!got_header) {
      if (word != "quatgeo") c.fail("file must start with 'quatgeo v1'");
      c.skip_ws();
      std::string v = take_identifier(c);
      if (v != "v1") c.fail("unsupported version '" + v + "'");
      f.version = 1;
      got_header = true;
      expect_line_end(c);
      continue;
    }

    if (word == "backend") {
      c.skip_ws();
      std::string b = take_identifier(c);
      if (b == "exact")
        f.backend = Backend::Exact;
      else if (b == "float")
        f.backend = Backend::Float;
      else
        c.fail("backend must be 'exact' or 'float'");
      expect_line_end(c);
      continue;
    }

    if (word == "gen" || word == "mat") {
      FileEntry e;
      e.affine = word == "gen";
      c.skip_ws();
      e.name = take_identifier(c);
      if (e.name.empty()) c.fail("entry needs a name");
      c.skip_ws();
      if (c.peek() != '=') c.fail("expected '=' after the entry name");
      c.take();
      int at_line = c.line, at_col = c.col;
      e.matrix = parse_matrix_at(c);
      if (e.affine) {
        int n = e.matrix.size() - 1;
        if (n < 1) throw ParseError("gen entries need at least 2 x 2", at_line, at_col);
        for (int j = 0; j < n; ++j)
          if (!e.matrix.at(n, j).is_zero())
            throw ParseError("gen entry must have last row (0,...,0,1)",
                             at_line, at_col);
        if (!(e.matrix.at(n, n) == Quat<Rat>(Rat(1))))
          throw ParseError("gen entry must have last row (0,...,0,1)", at_line,
                           at_col);
      }
      f.entries.push_back(std::move(e));
      expect_line_end(c);
      continue;
    }
    c.fail("unknown directive '" + word + "'");
  }
  if (!got_header) throw ParseError("empty file: missing 'quatgeo v1'", 1, 1);
  return f;
}

namespace {

void append_term(std::string& out, const Rat& coeff, const char* unit) {
  if (coeff.is_zero()) return;
  Rat a = coeff.abs();
  bool neg = coeff.sign() < 0;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (*unit == '\0' || !(a == Rat(1))) out += a.str();
  out += unit;
}

}  // namespace

std::string render_quaternion(const Quat<Rat>& q) {
  std::string out;
  append_term(out, q.w, "");
  append_term(out, q.x, "i");
  append_term(out, q.y, "j");
  append_term(out, q.z, "k");
  return out.empty() ? "0" : out;
}

std::string render_quaternion(const Quat<double>& q) {
  auto term = [](std::string& out, double c, const char* unit) {
    if (c == 0) return;
    std::ostringstream os;
    os << std::setprecision(12);
    if (out.empty())
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    double a = std::abs(c);
    if (*unit == '\0' || a != 1.0) os << a;
    os << unit;
    out += os.str();
  };
  std::string out;
  term(out, q.w, "");
  term(out, q.x, "i");
  term(out, q.y, "j");
  term(out, q.z, "k");
  return out.empty() ? "0" : out;
}

std::string render_matrix(const QMatrix<Rat>& m) {
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    if (i) out += " ";
    out += "[";
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ", ";
      out += render_quaternion(m.at(i, j));
    }
    out += "]";
  }
  return out;
}

std::string render_generator_file(const GeneratorFile& f) {
  std::string out = "quatgeo v1\n";
  out += std::string("backend ") +
         (f.backend == Backend::Exact ? "exact" : "float") + "\n\n";
  for (const auto& e : f.entries) {
    out += e.affine ? "gen " : "mat ";
    out += e.name + " = " + render_matrix(e.matrix) + "\n";
  }
  return out;
}

Quat<Rat> parse_quaternion(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  Quat<Rat> q = parse_quat_at(c);
  c.skip_ws();
  if (!c.done()) c.fail("unexpected trailing text in quaternion");
  return q;
}

QVec<Rat> parse_point(const std::string& text, int dim) {
  Cursor c{text};
  c.skip_ws();
  bool parens = c.peek() == '(';
  if (parens) c.take();
  QVec<Rat> v;
  for (int i = 0; i < dim; ++i) {
    c.skip_ws();
    v.push_back(parse_quat_at(c));
    c.skip_ws();
    if (i + 1 < dim) {
      if (c.peek() != ',') c.fail("expected ',' between point components");
      c.take();
    }
  }
  c.skip_ws();
  if (parens) {
    if (c.peek() != ')') c.fail("expected ')'");
    c.take();
  }
  c.skip_ws();
  if (!c.done()) c.fail("unexpected trailing text in point");
  return v;
}

std::vector<Quat<Rat>> parse_quaternion_lines(const std::string& text) {
  std::vector<Quat<Rat>> out;
  Cursor c{text};
  while (!c.done()) {
    c.skip_ws();
    if (c.peek() == '\n') {
      c.take();
      continue;
    }
    if (c.peek() == '#') {
      while (!c.done() && c.peek() != '\n') c.take();
      continue;
    }
    out.push_back(parse_quat_at(c));
    expect_line_end(c);
  }
  return out;
}

}  // namespace quatgeo
