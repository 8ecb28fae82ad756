#include "circforest/dsl.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "circforest/errors.hpp"

namespace circforest {
namespace {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Ident, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Number, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::string("()[]{},;:_").find(c) != std::string::npos) {
      out.push_back({Token::Punct, std::string(1, c), i});
      ++i;
      continue;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", i,
                      {"letter", "digit", "punctuation"});
  }
  out.push_back({Token::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  FamilyDescriptor parse() {
    FamilyDescriptor d;
    const Token head = expect(Token::Ident, {"C", "I", "GP", "SW", "Y", "H", "T", "X", "FOLIATION"});
    if (head.text == "FOLIATION") {
      d = parse_foliation();
    } else if (head.text == "X") {
      d = parse_product();
    } else if (head.text == "C" || head.text == "I" || head.text == "GP" || head.text == "SW" ||
               head.text == "Y" || head.text == "H" || head.text == "T") {
      d = parse_simple(head.text);
    } else {
      throw SyntaxError("unknown family kind '" + head.text + "'", head.pos,
                        {"C", "I", "GP", "SW", "Y", "H", "T", "X", "FOLIATION"});
    }
    const Token tail = next();
    if (tail.kind != Token::End)
      throw SyntaxError("trailing input after descriptor", tail.pos, {"end of input"});
    return d;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }

  Token expect(Token::Kind k, std::vector<std::string> expected) {
    const Token t = next();
    if (t.kind != k)
      throw SyntaxError("unexpected " + describe(t), t.pos, std::move(expected));
    return t;
  }

  Token expect_punct(const std::string& p) {
    const Token t = next();
    if (t.kind != Token::Punct || t.text != p)
      throw SyntaxError("unexpected " + describe(t), t.pos, {"'" + p + "'"});
    return t;
  }

  bool eat_punct(const std::string& p) {
    if (peek().kind == Token::Punct && peek().text == p) {
      ++at_;
      return true;
    }
    return false;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Ident:
        return "identifier '" + t.text + "'";
      case Token::Number:
        return "number '" + t.text + "'";
      case Token::Punct:
        return "'" + t.text + "'";
      case Token::End:
        return "end of input";
    }
    return "token";
  }

  long number(const char* what) {
    const Token t = expect(Token::Number, {what});
    errno = 0;
    const long v = std::strtol(t.text.c_str(), nullptr, 10);
    if (errno != 0 || t.text.size() > 18)
      throw SemanticError(std::string(what) + " out of range", t.pos);
    return v;
  }

  // "n" or a concrete positive integer that binds n
  void parse_n_slot(FamilyDescriptor& d) {
    const Token t = next();
    if (t.kind == Token::Ident && t.text == "n") return;
    if (t.kind == Token::Number) {
      errno = 0;
      const long v = std::strtol(t.text.c_str(), nullptr, 10);
      if (errno != 0 || t.text.size() > 18 || v < 1)
        throw SemanticError("layer count must be a positive integer", t.pos);
      d.bound_n = v;
      return;
    }
    throw SyntaxError("unexpected " + describe(t), t.pos, {"n", "positive integer"});
  }

  void check_jumps(const std::vector<int>& jumps, std::size_t pos) {
    for (std::size_t i = 0; i < jumps.size(); ++i) {
      if (jumps[i] < 1) throw SemanticError("jumps must be >= 1", pos);
      if (i > 0 && jumps[i] <= jumps[i - 1])
        throw SemanticError("jumps must be strictly increasing", pos);
    }
  }

  // [s1,...,sk] possibly empty
  std::vector<int> bracket_list() {
    const Token open = expect_punct("[");
    std::vector<int> jumps;
    if (!eat_punct("]")) {
      do {
        jumps.push_back(static_cast<int>(number("jump")));
      } while (eat_punct(","));
      expect_punct("]");
    }
    check_jumps(jumps, open.pos);
    return jumps;
  }

  // a scalar jump or a bracketed list (Y/H slots)
  std::vector<int> slot() {
    if (peek().kind == Token::Punct && peek().text == "[") return bracket_list();
    const Token t = peek();
    std::vector<int> jumps{static_cast<int>(number("jump"))};
    check_jumps(jumps, t.pos);
    return jumps;
  }

  FamilyDescriptor parse_simple(const std::string& kind) {
    FamilyDescriptor d;
    expect_punct("(");
    parse_n_slot(d);
    if (kind == "C") {
      d.kind = FamilyKind::C;
      expect_punct(";");
      std::vector<int> jumps;
      const Token t = peek();
      do {
        jumps.push_back(static_cast<int>(number("jump")));
      } while (eat_punct(","));
      check_jumps(jumps, t.pos);
      d.jump_lists = {jumps};
    } else if (kind == "I" || kind == "GP") {
      expect_punct(",");
      const int k = static_cast<int>(number("jump"));
      int l = 1;
      if (kind == "I") {
        expect_punct(",");
        l = static_cast<int>(number("jump"));
      }
      if (k < 1 || l < 1) throw SemanticError("jumps must be >= 1", peek().pos);
      d.kind = l == 1 ? FamilyKind::GP : FamilyKind::I;
      d.jump_lists = {{k}, {l}};
    } else if (kind == "SW") {
      d.kind = FamilyKind::SW;
      expect_punct(";");
      do {
        d.jump_lists.push_back(bracket_list());
      } while (eat_punct(","));
    } else if (kind == "Y" || kind == "H") {
      d.kind = kind == "Y" ? FamilyKind::Y : FamilyKind::H;
      const std::size_t arity = kind == "Y" ? 3 : 4;
      expect_punct(";");
      for (std::size_t i = 0; i < arity; ++i) {
        if (i > 0) expect_punct(",");
        d.jump_lists.push_back(slot());
      }
    } else {  // T
      d.kind = FamilyKind::T;
      expect_punct(",");
      const Token t = peek();
      d.torus_order = static_cast<int>(number("cycle length"));
      if (d.torus_order < 3) throw SemanticError("torus base cycle needs m >= 3", t.pos);
    }
    expect_punct(")");
    return d;
  }

  FamilyDescriptor parse_product() {
    FamilyDescriptor d;
    d.kind = FamilyKind::X;
    expect_punct("(");
    const Token shape = expect(Token::Ident, {"K", "P", "C"});
    if (shape.text == "K")
      d.product_base = ProductBase::Complete;
    else if (shape.text == "P")
      d.product_base = ProductBase::Path;
    else if (shape.text == "C")
      d.product_base = ProductBase::Cycle;
    else
      throw SyntaxError("unknown base shape '" + shape.text + "'", shape.pos, {"K", "P", "C"});
    expect_punct("_");
    const Token t = peek();
    d.product_base_order = static_cast<int>(number("base order"));
    const int min_order = d.product_base == ProductBase::Cycle ? 3 : 1;
    if (d.product_base_order < min_order)
      throw SemanticError("base order must be >= " + std::to_string(min_order), t.pos);
    expect_punct(",");
    const Token c = expect(Token::Ident, {"C"});
    if (c.text != "C")
      throw SyntaxError("unexpected " + describe(c), c.pos, {"C"});
    expect_punct("(");
    std::vector<int> jumps;
    const Token first = peek();
    if (!eat_punct(")")) {
      do {
        jumps.push_back(static_cast<int>(number("jump")));
      } while (eat_punct(","));
      expect_punct(")");
    }
    check_jumps(jumps, first.pos);
    d.jump_lists = {jumps};
    expect_punct(")");
    return d;
  }

  FamilyDescriptor parse_foliation() {
    FamilyDescriptor d;
    d.kind = FamilyKind::Foliation;
    expect_punct("{");
    const Token base_kw = expect(Token::Ident, {"base"});
    if (base_kw.text != "base")
      throw SyntaxError("unexpected " + describe(base_kw), base_kw.pos, {"base"});
    expect_punct(":");
    const Token edges_kw = expect(Token::Ident, {"edges"});
    if (edges_kw.text != "edges")
      throw SyntaxError("unexpected " + describe(edges_kw), edges_kw.pos, {"edges"});
    expect_punct("[");
    std::vector<std::size_t> edge_positions;
    if (!eat_punct("]")) {
      do {
        expect_punct("(");
        const Token ti = peek();
        const int i = static_cast<int>(number("vertex"));
        expect_punct(",");
        const int j = static_cast<int>(number("vertex"));
        expect_punct(")");
        expect_punct(":");
        const int mult = static_cast<int>(number("multiplicity"));
        if (i < 1 || j < 1 || i >= j)
          throw SemanticError("edge endpoints must satisfy 1 <= i < j", ti.pos);
        if (mult < 1) throw SemanticError("edge multiplicity must be >= 1", ti.pos);
        d.base_edges.emplace_back(i, j, mult);
        edge_positions.push_back(ti.pos);
      } while (eat_punct(","));
      expect_punct("]");
    }
    expect_punct(";");
    const Token fibers_kw = expect(Token::Ident, {"fibers"});
    if (fibers_kw.text != "fibers")
      throw SyntaxError("unexpected " + describe(fibers_kw), fibers_kw.pos, {"fibers"});
    expect_punct(":");
    expect_punct("[");
    do {
      d.jump_lists.push_back(bracket_list());
    } while (eat_punct(","));
    expect_punct("]");
    expect_punct("}");
    const int m = static_cast<int>(d.jump_lists.size());
    for (std::size_t e = 0; e < d.base_edges.size(); ++e)
      if (std::get<1>(d.base_edges[e]) > m)
        throw SemanticError("edge endpoint " + std::to_string(std::get<1>(d.base_edges[e])) +
                                " exceeds fiber count " + std::to_string(m),
                            edge_positions[e]);
    return d;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

void scalars_or_lists(std::ostream& os, const std::vector<std::vector<int>>& lists) {
  bool all_singleton = true;
  for (const auto& l : lists) all_singleton = all_singleton && l.size() == 1;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (i > 0) os << ",";
    if (all_singleton) {
      os << lists[i][0];
    } else {
      os << "[";
      for (std::size_t t = 0; t < lists[i].size(); ++t) os << (t ? "," : "") << lists[i][t];
      os << "]";
    }
  }
}

}  // namespace

FamilyDescriptor parse_family(const std::string& text) {
  return Parser(text).parse();
}

std::string format_family(const FamilyDescriptor& d) {
  std::ostringstream os;
  const auto n_slot = [&]() -> std::string {
    return d.bound_n ? std::to_string(*d.bound_n) : "n";
  };
  switch (d.kind) {
    case FamilyKind::C: {
      os << "C(" << n_slot() << ";";
      const auto& jumps = d.jump_lists.at(0);
      for (std::size_t i = 0; i < jumps.size(); ++i) os << (i ? "," : "") << jumps[i];
      os << ")";
      break;
    }
    case FamilyKind::I:
    case FamilyKind::GP: {
      const int k = d.jump_lists.at(0).at(0);
      const int l = d.jump_lists.at(1).at(0);
      if (l == 1)
        os << "GP(" << n_slot() << "," << k << ")";
      else
        os << "I(" << n_slot() << "," << k << "," << l << ")";
      break;
    }
    case FamilyKind::SW: {
      os << "SW(" << n_slot() << ";";
      for (std::size_t i = 0; i < d.jump_lists.size(); ++i) {
        if (i > 0) os << ",";
        os << "[";
        const auto& l = d.jump_lists[i];
        for (std::size_t t = 0; t < l.size(); ++t) os << (t ? "," : "") << l[t];
        os << "]";
      }
      os << ")";
      break;
    }
    case FamilyKind::Y:
    case FamilyKind::H: {
      os << (d.kind == FamilyKind::Y ? "Y(" : "H(") << n_slot() << ";";
      scalars_or_lists(os, d.jump_lists);
      os << ")";
      break;
    }
    case FamilyKind::T:
      os << "T(" << n_slot() << "," << d.torus_order << ")";
      break;
    case FamilyKind::X: {
      const char shape = d.product_base == ProductBase::Complete  ? 'K'
                         : d.product_base == ProductBase::Path    ? 'P'
                                                                  : 'C';
      os << "X(" << shape << "_" << d.product_base_order << ",C(";
      const auto& jumps = d.jump_lists.at(0);
      for (std::size_t i = 0; i < jumps.size(); ++i) os << (i ? "," : "") << jumps[i];
      os << "))";
      break;
    }
    case FamilyKind::Foliation: {
      os << "FOLIATION{base:edges[";
      for (std::size_t e = 0; e < d.base_edges.size(); ++e) {
        const auto& [i, j, mult] = d.base_edges[e];
        os << (e ? "," : "") << "(" << i << "," << j << "):" << mult;
      }
      os << "];fibers:[";
      for (std::size_t i = 0; i < d.jump_lists.size(); ++i) {
        if (i > 0) os << ",";
        os << "[";
        const auto& l = d.jump_lists[i];
        for (std::size_t t = 0; t < l.size(); ++t) os << (t ? "," : "") << l[t];
        os << "]";
      }
      os << "]}";
      break;
    }
  }
  return os.str();
}

}  // namespace circforest
