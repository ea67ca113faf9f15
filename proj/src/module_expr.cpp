#include "quiverlab/module_expr.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "quiverlab/errors.hpp"
#include "quiverlab/homology.hpp"

namespace quiverlab {

namespace {

using Unary = std::function<Representation(const Representation&)>;

const std::map<std::string, Unary, std::less<>>& unary_operators() {
  static const std::map<std::string, Unary, std::less<>> ops = {
      {"omega", [](const Representation& m) { return syzygy(m); }},
      {"coomega", [](const Representation& m) { return cosyzygy(m); }},
      {"tau", [](const Representation& m) { return ar_translate(m); }},
      {"taum", [](const Representation& m) { return ar_translate_inv(m); }},
      {"tau2", [](const Representation& m) { return tau_d(2, m); }},
      {"taum2", [](const Representation& m) { return tau_d_inv(2, m); }},
      {"nu", [](const Representation& m) { return nakayama(m); }},
  };
  return ops;
}

class Parser {
 public:
  Parser(const AlgebraPtr& a, std::string_view text) : a_(a), text_(text) {}

  std::vector<NamedModule> list() {
    std::vector<NamedModule> out;
    skip_space();
    if (pos_ == text_.size()) return out;
    for (;;) {
      auto part = expression();
      out.insert(out.end(), part.begin(), part.end());
      skip_space();
      if (pos_ == text_.size()) break;
      expect(',');
    }
    return out;
  }

 private:
  std::vector<NamedModule> expression() {
    skip_space();
    const std::size_t start = pos_;
    std::string name = identifier();
    if (name.empty()) fail("expected a module expression", start);
    expect('(');
    std::vector<NamedModule> out;
    if (name == "P" || name == "I" || name == "S") {
      std::string label = vertex_label();
      expect(')');
      std::vector<VertexId> vs;
      if (label == "*") {
        for (VertexId v = 0; v < a_->vertex_count(); ++v) vs.push_back(v);
      } else {
        auto v = a_->quiver().find_vertex(label);
        if (!v) fail("unknown vertex '" + label + "'", start);
        vs.push_back(*v);
      }
      for (auto v : vs) {
        Representation m = name == "P" ? projective(a_, v) : name == "I" ? injective(a_, v) : simple(a_, v);
        out.push_back({name + "(" + a_->quiver().label(v) + ")", std::move(m)});
      }
      return out;
    }
    std::vector<NamedModule> args;
    for (;;) {
      auto part = expression();
      args.insert(args.end(), part.begin(), part.end());
      skip_space();
      if (peek() == ')') break;
      expect(',');
    }
    expect(')');
    if (name == "sum") {
      std::string joined;
      std::vector<Representation> parts;
      for (const auto& x : args) {
        joined += (joined.empty() ? "" : ",") + x.name;
        parts.push_back(x.module);
      }
      out.push_back({"sum(" + joined + ")", direct_sum(a_, parts)});
      return out;
    }
    const auto& ops = unary_operators();
    auto it = ops.find(name);
    if (it == ops.end()) fail("unknown operator '" + name + "'", start);
    for (const auto& x : args) {
      Representation m = it->second(x.module);
      if (m.algebra() != a_) fail("'" + name + "' does not return a module over this algebra", start);
      out.push_back({name + "(" + x.name + ")", std::move(m)});
    }
    return out;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string vertex_label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ')' && text_[pos_] != ',' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a vertex label", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw InputError("module expression, column " + std::to_string(at + 1) + ": " + msg);
  }

  const AlgebraPtr& a_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<NamedModule> evaluate_module_list(const AlgebraPtr& a, std::string_view text) {
  return Parser(a, text).list();
}

Representation evaluate_module(const AlgebraPtr& a, std::string_view text) {
  auto parts = evaluate_module_list(a, text);
  if (parts.empty()) throw InputError("empty module expression");
  if (parts.size() == 1) return parts.front().module;
  std::vector<Representation> ms;
  for (auto& p : parts) ms.push_back(std::move(p.module));
  return direct_sum(a, ms);
}

}  // namespace quiverlab
