#include "girthlab/dsl.hpp"

#include <cctype>
#include <memory>
#include <sstream>
#include <utility>

#include "girthlab/corpus.hpp"
#include "girthlab/errors.hpp"

namespace girthlab {
namespace {

enum class Tok { Ident, Number, Str, Equals, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::string show(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Number: return "number '" + t.text + "'";
    case Tok::Str: return "string";
    case Tok::Equals: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

[[noreturn]] void fail_at(const Token& t, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(t.line) + " col " +
                                  std::to_string(t.col) + ": " + msg);
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    if (c == '=') {
      t.kind = Tok::Equals;
      advance(1);
    } else if (c == '(') {
      t.kind = Tok::LParen;
      advance(1);
    } else if (c == ')') {
      t.kind = Tok::RParen;
      advance(1);
    } else if (c == '"') {
      size_t end = text.find('"', i + 1);
      if (end == std::string::npos)
        fail_at(t, "unterminated string");
      t.kind = Tok::Str;
      t.text = text.substr(i + 1, end - i - 1);
      advance(end + 1 - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      t.kind = Tok::Number;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      t.kind = Tok::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else {
      fail_at(t, "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct Node;

// One key=value argument; Sub holds a parenthesized node.
struct Value {
  enum Kind { Num, Ident, Str, Sub } kind = Num;
  Token at;
  long long num = 0;
  std::string text;
  std::shared_ptr<Node> sub;
};

// head key=value ... with token positions kept for error reporting.
struct Node {
  Token head;
  std::vector<std::pair<Token, Value>> args;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Node parse_top() {
    Node n = parse_node();
    const Token& t = peek();
    if (t.kind != Tok::End)
      fail_at(t, "expected a key or end of input, found " + show(t));
    return n;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  Node parse_node() {
    const Token& h = peek();
    if (h.kind != Tok::Ident)
      fail_at(h, "expected a spec kind, found " + show(h));
    Node n;
    n.head = take();
    while (peek().kind == Tok::Ident) {
      Token key = take();
      for (const auto& [k, v] : n.args)
        if (k.text == key.text) fail_at(key, "duplicate key '" + key.text + "'");
      const Token& eq = peek();
      if (eq.kind != Tok::Equals)
        fail_at(eq, "expected '=' after key '" + key.text + "', found " +
                        show(eq));
      take();
      n.args.emplace_back(std::move(key), parse_value());
    }
    return n;
  }

  Value parse_value() {
    Token t = take();
    Value v;
    v.at = t;
    switch (t.kind) {
      case Tok::Number:
        v.kind = Value::Num;
        v.num = std::stoll(t.text);
        return v;
      case Tok::Ident:
        v.kind = Value::Ident;
        v.text = t.text;
        return v;
      case Tok::Str:
        v.kind = Value::Str;
        v.text = t.text;
        return v;
      case Tok::LParen: {
        v.kind = Value::Sub;
        v.sub = std::make_shared<Node>(parse_node());
        const Token& close = peek();
        if (close.kind != Tok::RParen)
          fail_at(close, "expected ')', found " + show(close));
        take();
        return v;
      }
      default:
        fail_at(t, "expected a value, found " + show(t));
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

// -- argument access ---------------------------------------------------

void restrict_keys(const Node& n, std::initializer_list<const char*> allowed) {
  for (const auto& [key, val] : n.args) {
    bool ok = false;
    for (const char* a : allowed)
      if (key.text == a) ok = true;
    if (!ok) {
      std::string exp;
      for (const char* a : allowed) {
        if (!exp.empty()) exp += ", ";
        exp += a;
      }
      fail_at(key, "unknown key '" + key.text + "' for '" + n.head.text +
                       "' (expected " + exp + ")");
    }
  }
}

const Value* find_arg(const Node& n, const std::string& key) {
  for (const auto& [k, v] : n.args)
    if (k.text == key) return &v;
  return nullptr;
}

const Value& need_arg(const Node& n, const std::string& key) {
  const Value* v = find_arg(n, key);
  if (!v) fail_at(n.head, "'" + n.head.text + "' needs key '" + key + "'");
  return *v;
}

long long need_num(const Node& n, const std::string& key) {
  const Value& v = need_arg(n, key);
  if (v.kind != Value::Num)
    fail_at(v.at, "key '" + key + "' expects a number, found " + show(v.at));
  return v.num;
}

const std::string& need_str(const Node& n, const std::string& key) {
  const Value& v = need_arg(n, key);
  if (v.kind != Value::Str)
    fail_at(v.at, "key '" + key + "' expects a quoted string, found " +
                      show(v.at));
  return v.text;
}

const Node& need_sub(const Node& n, const std::string& key) {
  const Value& v = need_arg(n, key);
  if (v.kind != Value::Sub)
    fail_at(v.at, "key '" + key + "' expects a parenthesized spec, found " +
                      show(v.at));
  return *v.sub;
}

// -- word and map payloads ---------------------------------------------

// Splits on sep and trims; blank pieces come back empty.
std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t pos = text.find(sep, start);
    std::string piece = text.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start);
    size_t b = piece.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
      out.emplace_back();
    } else {
      size_t e = piece.find_last_not_of(" \t\r\n");
      out.push_back(piece.substr(b, e - b + 1));
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::pair<Word, Word>> parse_arrow_map(const Alphabet& lhs_a,
                                                   const Alphabet& rhs_a,
                                                   const std::string& text) {
  std::vector<std::pair<Word, Word>> out;
  for (const std::string& entry : split_list(text, ',')) {
    size_t arrow = entry.find("->");
    if (arrow == std::string::npos)
      fail(ErrorCode::ParseError, "map entry needs 'lhs -> rhs'");
    out.emplace_back(lhs_a.parse(entry.substr(0, arrow)),
                     rhs_a.parse(entry.substr(arrow + 2)));
  }
  return out;
}

// Reorders map entries to follow decl; keys match by element.
std::vector<Word> align_map(const GroupOracle& src, const std::vector<Word>& decl,
                            const std::vector<std::pair<Word, Word>>& entries,
                            const std::string& what, const Alphabet& src_a) {
  std::vector<Word> images(decl.size());
  std::vector<bool> seen(decl.size(), false);
  for (const auto& [lhs, rhs] : entries) {
    size_t hit = decl.size();
    for (size_t i = 0; i < decl.size(); ++i)
      if (src.equal(lhs, decl[i])) {
        hit = i;
        break;
      }
    if (hit == decl.size())
      fail(ErrorCode::ValidationError,
           what + " maps '" + src_a.format(lhs) +
               "', which is not a declared generator");
    if (seen[hit])
      fail(ErrorCode::ValidationError,
           what + " maps '" + src_a.format(decl[hit]) + "' twice");
    seen[hit] = true;
    images[hit] = rhs;
  }
  for (size_t i = 0; i < decl.size(); ++i)
    if (!seen[i])
      fail(ErrorCode::ValidationError,
           what + " misses declared generator '" + src_a.format(decl[i]) + "'");
  return images;
}

// -- interpreters --------------------------------------------------------

std::vector<std::string> short_names(size_t count) {
  static const char* pool[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (size_t i = 0; i < count; ++i)
    out.push_back(i < 4 ? pool[i] : "g" + std::to_string(i + 1));
  return out;
}

GroupOracle to_group(const Node& n) {
  const std::string& head = n.head.text;
  if (head == "free") {
    restrict_keys(n, {"rank"});
    return GroupOracle::free_group(static_cast<int>(need_num(n, "rank")));
  }
  if (head == "free-abelian") {
    restrict_keys(n, {"rank"});
    return GroupOracle::free_abelian(static_cast<int>(need_num(n, "rank")));
  }
  if (head == "dihedral") {
    restrict_keys(n, {"q"});
    const Value& v = need_arg(n, "q");
    if (v.kind == Value::Num)
      return GroupOracle::dihedral(static_cast<int>(v.num));
    if (v.kind == Value::Ident && v.text == "inf")
      return GroupOracle::dihedral(std::nullopt);
    fail_at(v.at, "key 'q' expects a number or inf, found " + show(v.at));
  }
  if (head == "cyclic") {
    restrict_keys(n, {"n"});
    long long m = need_num(n, "n");
    if (m < 2)
      fail(ErrorCode::ValidationError, "cyclic needs n >= 2");
    return GroupOracle::finite(cyclic_table(static_cast<int>(m)), {1}, {"x"});
  }
  if (head == "corpus") {
    restrict_keys(n, {"name"});
    const Value& v = need_arg(n, "name");
    if (v.kind != Value::Ident)
      fail_at(v.at, "key 'name' expects an identifier, found " + show(v.at));
    for (const CorpusGroup& g : bundled_corpus())
      if (g.name == v.text)
        return GroupOracle::finite(g.table, g.gens,
                                   short_names(g.gens.size()));
    fail(ErrorCode::ValidationError, "no bundled group named '" + v.text + "'");
  }
  fail_at(n.head,
          "expected a group spec (free, free-abelian, dihedral, cyclic, or "
          "corpus), found '" + head + "'");
}

// Inside hnn and amalgam the ambient group is implied by the enclosing keys,
// so only gens is accepted there.
std::vector<Word> embedded_subgroup(const Node& n, const GroupOracle& ambient) {
  if (n.head.text != "subgroup")
    fail_at(n.head, "expected a subgroup spec, found '" + n.head.text + "'");
  restrict_keys(n, {"gens"});
  const Value& v = need_arg(n, "gens");
  if (v.kind != Value::Str)
    fail_at(v.at, "key 'gens' expects a quoted string, found " + show(v.at));
  return parse_words(ambient.alphabet(), v.text);
}

SubgroupSpec to_subgroup(const Node& n) {
  restrict_keys(n, {"of", "gens"});
  GroupOracle ambient = to_group(need_sub(n, "of"));
  const Value& v = need_arg(n, "gens");
  if (v.kind != Value::Str)
    fail_at(v.at, "key 'gens' expects a quoted string, found " + show(v.at));
  std::vector<Word> gens = parse_words(ambient.alphabet(), v.text);
  return {std::move(ambient), std::move(gens)};
}

HnnExtension to_hnn(const Node& n) {
  restrict_keys(n, {"base", "A", "B", "phi", "stable"});
  GroupOracle base = to_group(need_sub(n, "base"));
  std::vector<Word> a_gens = embedded_subgroup(need_sub(n, "A"), base);
  std::vector<Word> b_gens = embedded_subgroup(need_sub(n, "B"), base);
  auto entries =
      parse_arrow_map(base.alphabet(), base.alphabet(), need_str(n, "phi"));
  std::vector<Word> images =
      align_map(base, a_gens, entries, "phi", base.alphabet());
  std::string stable = "t";
  if (const Value* v = find_arg(n, "stable")) {
    if (v->kind != Value::Ident)
      fail_at(v->at, "key 'stable' expects an identifier, found " + show(v->at));
    stable = v->text;
  }
  return HnnExtension(std::move(base), std::move(a_gens), std::move(b_gens),
                      std::move(images), stable);
}

AmalgamPresentation to_amalgam(const Node& n) {
  restrict_keys(n, {"left", "right", "C_left", "C_right", "iso"});
  GroupOracle left = to_group(need_sub(n, "left"));
  GroupOracle right = to_group(need_sub(n, "right"));
  std::vector<Word> cl = embedded_subgroup(need_sub(n, "C_left"), left);
  std::vector<Word> cr = embedded_subgroup(need_sub(n, "C_right"), right);
  auto entries =
      parse_arrow_map(left.alphabet(), right.alphabet(), need_str(n, "iso"));
  std::vector<Word> images =
      align_map(left, cl, entries, "iso", left.alphabet());
  return AmalgamPresentation(std::move(left), std::move(right), std::move(cl),
                             std::move(cr), std::move(images));
}

std::string group_desc(const GroupOracle& g) {
  std::ostringstream os;
  switch (g.kind()) {
    case GroupKind::Free:
      os << "free rank=" << g.rank();
      break;
    case GroupKind::FreeAbelian:
      os << "free-abelian rank=" << g.rank();
      break;
    case GroupKind::Dihedral:
      os << "dihedral q=";
      if (g.dihedral_q())
        os << *g.dihedral_q();
      else
        os << "inf";
      break;
    case GroupKind::FiniteCayley: {
      os << "finite order=" << *g.order() << " gens=[";
      for (int i = 0; i < g.rank(); ++i)
        os << (i ? " " : "") << g.alphabet().name(i);
      os << "]";
      break;
    }
  }
  return os.str();
}

std::string word_list_desc(const Alphabet& a, const std::vector<Word>& ws) {
  std::string out = "[";
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += "; ";
    out += a.format(ws[i]);
  }
  return out + "]";
}

}  // namespace

std::vector<Word> parse_words(const Alphabet& a, const std::string& list) {
  std::vector<std::string> pieces = split_list(list, ';');
  if (pieces.size() == 1 && pieces[0].empty()) return {};
  std::vector<Word> out;
  for (const std::string& piece : pieces) {
    if (piece.empty()) fail(ErrorCode::ParseError, "empty word in list");
    out.push_back(a.parse(piece));
  }
  return out;
}

AmalgamElement parse_amalgam_element(const AmalgamPresentation& p,
                                     const std::string& text) {
  AmalgamElement acc;
  for (const std::string& piece : split_list(text, '|')) {
    AmalgamSide side;
    size_t skip;
    if (piece == "left" || piece.rfind("left ", 0) == 0) {
      side = AmalgamSide::Left;
      skip = 4;
    } else if (piece == "right" || piece.rfind("right ", 0) == 0) {
      side = AmalgamSide::Right;
      skip = 5;
    } else {
      fail(ErrorCode::ParseError,
           "amalgam syllable needs a 'left' or 'right' prefix");
    }
    Word w = p.factor(side).alphabet().parse(piece.substr(skip));
    acc = p.mul(acc, AmalgamElement::factor(side, std::move(w)));
  }
  return acc;
}

const char* hnn_class_name(HnnClass c) {
  switch (c) {
    case HnnClass::Proper: return "proper";
    case HnnClass::SemiProper: return "semi-proper";
    case HnnClass::Full: return "full";
  }
  return "?";
}

ParsedSpec parse_spec(const std::string& text) {
  Parser p(lex(text));
  Node n = p.parse_top();
  const std::string& head = n.head.text;
  if (head == "subgroup") return to_subgroup(n);
  if (head == "hnn") return to_hnn(n);
  if (head == "amalgam") return to_amalgam(n);
  if (head == "free" || head == "free-abelian" || head == "dihedral" ||
      head == "cyclic" || head == "corpus")
    return to_group(n);
  fail_at(n.head,
          "unknown spec kind '" + head +
              "' (expected free, free-abelian, dihedral, cyclic, corpus, "
              "subgroup, hnn, or amalgam)");
}

std::string describe(const ParsedSpec& spec) {
  struct V {
    std::string operator()(const GroupOracle& g) const { return group_desc(g); }
    std::string operator()(const SubgroupSpec& s) const {
      return "subgroup of " + group_desc(s.ambient) + " gens=" +
             word_list_desc(s.ambient.alphabet(), s.gens);
    }
    std::string operator()(const HnnExtension& h) const {
      return "hnn base{" + group_desc(h.base()) + "} stable=" +
             h.ext_alphabet().name(h.stable_sym()) + " A=" +
             word_list_desc(h.base().alphabet(), h.A().declared_gens()) +
             " B=" +
             word_list_desc(h.base().alphabet(), h.B().declared_gens()) +
             " class=" + hnn_class_name(h.classify());
    }
    std::string operator()(const AmalgamPresentation& p) const {
      return "amalgam left{" + group_desc(p.left()) + "} right{" +
             group_desc(p.right()) + "} C_left=" +
             word_list_desc(p.left().alphabet(), p.core_left().declared_gens()) +
             " C_right=" +
             word_list_desc(p.right().alphabet(),
                            p.core_right().declared_gens()) +
             (p.is_proper() ? " proper" : " improper");
    }
  };
  return std::visit(V{}, spec);
}

}  // namespace girthlab
