#include "quiverlab/algebra_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool valid_arrow_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

bool is_number(std::string_view s) {
  if (s.empty()) return false;
  bool digit = false;
  std::size_t slashes = 0;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (c == '/') ++slashes;
    else return false;
  }
  return digit && slashes <= 1 && s.front() != '/' && s.back() != '/';
}

class LineError {
 public:
  explicit LineError(std::size_t line) : line_(line) {}
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_) + ": " + msg);
  }

 private:
  std::size_t line_;
};

Term parse_term(const Quiver& q, std::string_view text, bool negative, const LineError& err) {
  Scalar coeff(negative ? -1 : 1);
  std::vector<ArrowId> word;
  std::size_t start = 0;
  bool first = true;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string_view piece = trim(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    if (piece.empty()) err.fail("empty factor in relation term '" + std::string(text) + "'");
    if (first && is_number(piece)) {
      Scalar c;
      try {
        c = Scalar(std::string(piece));
        c.canonicalize();
      } catch (const std::invalid_argument&) {
        err.fail("bad coefficient '" + std::string(piece) + "'");
      }
      if (c.get_den() == 0) err.fail("zero denominator in '" + std::string(piece) + "'");
      coeff *= c;
    } else {
      auto a = q.find_arrow(piece);
      if (!a) err.fail("unknown arrow '" + std::string(piece) + "'");
      word.push_back(*a);
    }
    first = false;
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  if (word.empty()) err.fail("relation term '" + std::string(text) + "' has no arrows");
  try {
    return Term{coeff, make_path(q, std::move(word))};
  } catch (const InputError& e) {
    err.fail(e.what());
  }
}

Relation parse_relation(const Quiver& q, std::string_view body, const LineError& err) {
  Relation r;
  std::size_t i = 0;
  bool expect_term = true;
  bool negative = false;
  while (i < body.size()) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+' || c == '-') {
      if (!expect_term && !r.terms.empty()) {
        expect_term = true;
        negative = false;
      }
      if (c == '-') negative = !negative;
      ++i;
      continue;
    }
    if (!expect_term) err.fail("missing '+' or '-' between relation terms");
    std::size_t j = i;
    while (j < body.size() && body[j] != '+' && body[j] != '-') ++j;
    r.terms.push_back(parse_term(q, trim(body.substr(i, j - i)), negative, err));
    expect_term = false;
    negative = false;
    i = j;
  }
  if (r.terms.empty() || expect_term) err.fail("incomplete relation");
  return r;
}

std::string format_scalar(const Scalar& s) { return s.get_str(); }

}  // namespace

AlgebraSource parse_algebra_source(std::string_view text) {
  AlgebraSource src;
  bool field_seen = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    LineError err(line_no);
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

    if (keyword == "field") {
      if (field_seen) err.fail("field declared twice");
      if (src.quiver.vertex_count() != 0 || !src.relations.empty()) err.fail("field must precede vertices");
      auto toks = split_ws(rest);
      if (toks.size() == 1 && toks[0] == "Q") {
        src.field = Field::rationals();
      } else if (toks.size() == 2 && toks[0] == "F") {
        std::uint64_t p = 0;
        try {
          std::size_t used = 0;
          p = std::stoull(toks[1], &used);
          if (used != toks[1].size()) throw std::invalid_argument("trailing");
          src.field = Field::prime(p);
        } catch (const std::exception&) {
          err.fail("field F needs a prime below 2^31, got '" + toks[1] + "'");
        }
      } else {
        err.fail("expected 'field Q' or 'field F <prime>'");
      }
      field_seen = true;
    } else if (keyword == "vertex") {
      auto toks = split_ws(rest);
      if (toks.empty()) err.fail("vertex needs a label");
      for (auto& t : toks) {
        try {
          src.quiver.add_vertex(t);
        } catch (const InputError& e) {
          err.fail(e.what());
        }
      }
    } else if (keyword == "arrow") {
      auto colon = rest.find(':');
      auto arrow = rest.find("->");
      if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon)
        err.fail("expected 'arrow <name> : <src> -> <tgt>'");
      std::string name(trim(rest.substr(0, colon)));
      std::string from(trim(rest.substr(colon + 1, arrow - colon - 1)));
      std::string to(trim(rest.substr(arrow + 2)));
      if (!valid_arrow_name(name)) err.fail("arrow name '" + name + "' must start with a letter");
      auto s = src.quiver.find_vertex(from);
      auto t = src.quiver.find_vertex(to);
      if (!s) err.fail("unknown vertex '" + from + "'");
      if (!t) err.fail("unknown vertex '" + to + "'");
      try {
        src.quiver.add_arrow(name, *s, *t);
      } catch (const InputError& e) {
        err.fail(e.what());
      }
    } else if (keyword == "rel") {
      Relation r = parse_relation(src.quiver, rest, err);
      const Path& first = r.terms.front().path;
      for (const auto& t : r.terms) {
        if (t.path.length() < 2)
          err.fail("relation term '" + path_to_string(src.quiver, t.path) + "' has length below two");
        if (t.path.source != first.source || t.path.target != first.target)
          err.fail("relation terms are not parallel");
      }
      src.relations.push_back(std::move(r));
    } else {
      err.fail("unknown keyword '" + std::string(keyword) + "'");
    }
  }
  return src;
}

AlgebraSource read_algebra_source(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_source(buf.str());
}

AlgebraPtr build_algebra(const AlgebraSource& src, BuildOptions options) {
  return build_algebra(src.quiver, src.relations, src.field, options);
}

AlgebraPtr parse_algebra(std::string_view text, BuildOptions options) {
  return build_algebra(parse_algebra_source(text), options);
}

AlgebraPtr load_algebra(const std::filesystem::path& path, BuildOptions options) {
  return build_algebra(read_algebra_source(path), options);
}

std::string format_relation(const Quiver& q, const Relation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const Term& t = r.terms[i];
    Scalar c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (i == 0) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (c != 1) out += format_scalar(c) + "*";
    out += path_to_string(q, t.path);
  }
  return out;
}

std::string print_algebra(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  std::ostringstream out;
  out << "field " << a.field().to_string() << "\n";
  for (const auto& l : q.labels()) out << "vertex " << l << "\n";
  for (const auto& ar : q.arrows())
    out << "arrow " << ar.name << " : " << q.label(ar.source) << " -> " << q.label(ar.target) << "\n";
  for (const auto& r : a.relations()) out << "rel " << format_relation(q, r) << "\n";
  return out.str();
}

std::string export_dot(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (const auto& l : q.labels()) out << "  \"" << l << "\";\n";
  for (const auto& ar : q.arrows())
    out << "  \"" << q.label(ar.source) << "\" -> \"" << q.label(ar.target) << "\" [label=\"" << ar.name << "\"];\n";
  for (const auto& r : a.relations()) {
    const Path& p = r.terms.front().path;
    out << "  \"" << q.label(p.source) << "\" -> \"" << q.label(p.target) << "\" [style=dashed, arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace quiverlab
