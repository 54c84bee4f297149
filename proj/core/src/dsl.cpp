#include "soliton/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "soliton/error.hpp"

namespace soliton::dsl {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      const char got = peek();
      throw ParseError(std::string("expected '") + c + "' but found " + (got ? std::string("'") + got + "'" : "end of input"),
                       pos_);
    }
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      throw ParseError("expected an identifier", start);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                   text_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected a rational", start);
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at offset"));
      throw ParseError(msg, start);
    }
  }

  unsigned exponent() {
    skip_ws();
    const std::size_t start = pos_;
    const Rational v = rational();
    if (v.get_den() != 1 || v < 0 || v > 64) throw ParseError("exponent must be an integer in [0, 64]", start);
    return static_cast<unsigned>(v.get_num().get_ui());
  }

  std::vector<Rational> list() {
    expect('[');
    std::vector<Rational> out;
    if (accept(']')) return out;
    do {
      out.push_back(rational());
    } while (accept(','));
    expect(']');
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

const std::map<std::string, NodeKind, std::less<>>& keywords() {
  static const std::map<std::string, NodeKind, std::less<>> k{
      {"line", NodeKind::Line},         {"vertical", NodeKind::Vertical},
      {"resonant", NodeKind::Resonant}, {"resonant_general", NodeKind::ResonantGeneral},
      {"two", NodeKind::TwoSoliton},    {"two_unchecked", NodeKind::TwoUnchecked},
      {"wr", NodeKind::Wr},             {"galilean", NodeKind::Galilean},
      {"scale", NodeKind::Scale},       {"sum", NodeKind::RawSum}};
  return k;
}

std::vector<Rational> positional(Cursor& c, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) c.expect(',');
    out.push_back(c.rational());
  }
  return out;
}

void named_lists(Cursor& c, PhaseExpr& e, const std::vector<std::string>& keys) {
  std::map<std::string, bool> seen;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) c.expect(',');
    c.skip_ws();
    const std::size_t at = c.pos();
    const std::string key = c.ident();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ParseError("unknown argument '" + key + "'", at);
    if (seen[key]) throw ParseError("duplicate argument '" + key + "'", at);
    seen[key] = true;
    c.expect('=');
    auto values = c.list();
    if (key == "k") e.k = std::move(values);
    else if (key == "a" || key == "a1") e.a = std::move(values);
    else e.a2 = std::move(values);
  }
}

RawTerm raw_term(Cursor& c) {
  c.skip_ws();
  const std::size_t at = c.pos();
  if (c.ident() != "term") throw ParseError("expected 'term'", at);
  c.expect('(');
  RawTerm t;
  t.c = c.rational();
  c.expect(',');
  c.expect('[');
  for (int i = 0; i < 3; ++i) {
    if (i) c.expect(',');
    t.mono[i] = c.exponent();
  }
  c.expect(']');
  c.expect(',');
  c.expect('[');
  for (int i = 0; i < 3; ++i) {
    if (i) c.expect(',');
    t.freq[i] = c.rational();
  }
  c.expect(']');
  c.expect(')');
  return t;
}

PhaseExpr expr(Cursor& c, int depth) {
  c.skip_ws();
  const std::size_t at = c.pos();
  if (depth > 64) throw ParseError("expression nested too deeply", at);
  const std::string name = c.ident();
  auto it = keywords().find(name);
  if (it == keywords().end()) throw ParseError("unknown constructor '" + name + "'", at);
  PhaseExpr e;
  e.kind = it->second;
  c.expect('(');
  switch (e.kind) {
    case NodeKind::Line:
    case NodeKind::TwoSoliton:
    case NodeKind::TwoUnchecked:
      e.args = positional(c, 4);
      break;
    case NodeKind::Vertical:
      e.args = positional(c, 1);
      break;
    case NodeKind::Resonant:
      named_lists(c, e, {"k", "a"});
      break;
    case NodeKind::ResonantGeneral:
      named_lists(c, e, {"k", "a1", "a2"});
      break;
    case NodeKind::Wr:
      do {
        e.children.push_back(expr(c, depth + 1));
      } while (c.accept(','));
      break;
    case NodeKind::Galilean:
      e.children.push_back(expr(c, depth + 1));
      c.expect(',');
      e.args = positional(c, 1);
      break;
    case NodeKind::Scale:
      e.children.push_back(expr(c, depth + 1));
      c.expect(',');
      e.args = positional(c, 2);
      break;
    case NodeKind::RawSum:
      do {
        e.terms.push_back(raw_term(c));
      } while (c.accept(','));
      break;
  }
  c.expect(')');
  return e;
}

std::string list_text(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + "]";
}

std::string args_text(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out;
}

Phase lower_unchecked(const PhaseExpr& e) {
  switch (e.kind) {
    case NodeKind::Line:
      return line_soliton(e.args.at(0), e.args.at(1), e.args.at(2), e.args.at(3));
    case NodeKind::Vertical:
      return kdv_vertical(e.args.at(0));
    case NodeKind::Resonant:
      if (e.k.size() != e.a.size()) throw ConstraintError("resonant: k and a differ in length");
      return resonant(e.a, e.k);
    case NodeKind::ResonantGeneral:
      return resonant_general(e.a, e.a2, e.k);
    case NodeKind::TwoSoliton:
      return two_soliton(e.args.at(0), e.args.at(1), e.args.at(2), e.args.at(3));
    case NodeKind::TwoUnchecked:
      return two_soliton_unchecked(e.args.at(0), e.args.at(1), e.args.at(2), e.args.at(3));
    case NodeKind::Wr: {
      std::vector<Phase> inputs;
      for (const auto& child : e.children) inputs.push_back(lower_unchecked(child));
      return wronskian_phase(inputs);
    }
    case NodeKind::Galilean:
      return galilean(lower_unchecked(e.children.at(0)), e.args.at(0));
    case NodeKind::Scale: {
      const Rational& sign = e.args.at(1);
      if (sign != 1 && sign != -1) throw ConstraintError("scale: ysign must be 1 or -1");
      return scale(lower_unchecked(e.children.at(0)), e.args.at(0), sign > 0 ? 1 : -1);
    }
    case NodeKind::RawSum: {
      std::vector<Term> terms;
      for (const auto& t : e.terms) {
        terms.push_back(Term{t.c, {t.mono[2], t.mono[0], t.mono[1]}, {t.freq[2], t.freq[0], t.freq[1]}});
      }
      return raw_phase(ExpPoly(VarSet::kp(), std::move(terms)));
    }
  }
  throw ConstraintError("unhandled expression kind");
}

}  // namespace

PhaseExpr parse_syntax(std::string_view text) {
  Cursor c(text);
  PhaseExpr e = expr(c, 0);
  if (!c.at_end()) throw ParseError("trailing input", c.pos());
  return e;
}

PhaseExpr parse(std::string_view text) {
  PhaseExpr e = parse_syntax(text);
  lower(e);
  return e;
}

Phase lower(const PhaseExpr& expr) {
  try {
    return lower_unchecked(expr);
  } catch (const ConstraintError& e) {
    throw SemanticError(e.what());
  } catch (const RangeError& e) {
    throw SemanticError(e.what());
  }
}

Phase parse_phase(std::string_view text) { return lower(parse_syntax(text)); }

std::string print(const PhaseExpr& e) {
  switch (e.kind) {
    case NodeKind::Line:
      return "line(" + args_text(e.args) + ")";
    case NodeKind::Vertical:
      return "vertical(" + args_text(e.args) + ")";
    case NodeKind::Resonant:
      return "resonant(k=" + list_text(e.k) + ",a=" + list_text(e.a) + ")";
    case NodeKind::ResonantGeneral:
      return "resonant_general(k=" + list_text(e.k) + ",a1=" + list_text(e.a) + ",a2=" + list_text(e.a2) + ")";
    case NodeKind::TwoSoliton:
      return "two(" + args_text(e.args) + ")";
    case NodeKind::TwoUnchecked:
      return "two_unchecked(" + args_text(e.args) + ")";
    case NodeKind::Wr: {
      std::string out = "wr(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ',';
        out += print(e.children[i]);
      }
      return out + ")";
    }
    case NodeKind::Galilean:
      return "galilean(" + print(e.children.at(0)) + "," + args_text(e.args) + ")";
    case NodeKind::Scale:
      return "scale(" + print(e.children.at(0)) + "," + args_text(e.args) + ")";
    case NodeKind::RawSum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const auto& t = e.terms[i];
        if (i) out += ',';
        out += "term(" + to_string(t.c) + ",[" + std::to_string(t.mono[0]) + "," + std::to_string(t.mono[1]) + "," +
               std::to_string(t.mono[2]) + "]," + list_text({t.freq[0], t.freq[1], t.freq[2]}) + ")";
      }
      return out + ")";
    }
  }
  return {};
}

ExpPoly parse_exppoly(std::string_view text, const VarSet& vars) {
  Cursor c(text);
  c.skip_ws();
  if (c.peek() == '0') {
    Cursor probe(text);
    if (probe.rational() == 0 && probe.at_end()) return ExpPoly(vars);
  }
  std::vector<Term> terms;
  do {
    Term t{c.rational(), std::vector<unsigned>(vars.size(), 0), std::vector<Rational>(vars.size())};
    c.expect('*');
    while (true) {
      c.skip_ws();
      const std::size_t at = c.pos();
      const std::string name = c.ident();
      if (name == "exp") break;
      auto idx = vars.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", at);
      c.expect('^');
      t.mono[*idx] = c.exponent();
      if (c.peek() == '*') {
        c.expect('*');
        c.skip_ws();
        continue;
      }
    }
    c.expect('(');
    do {
      const Rational f = c.rational();
      c.expect('*');
      c.skip_ws();
      const std::size_t at = c.pos();
      const std::string name = c.ident();
      auto idx = vars.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", at);
      t.freq[*idx] = f;
    } while (c.accept('+'));
    c.expect(')');
    terms.push_back(std::move(t));
  } while (c.accept('+'));
  if (!c.at_end()) throw ParseError("trailing input", c.pos());
  return ExpPoly(vars, std::move(terms));
}

}  // namespace soliton::dsl
