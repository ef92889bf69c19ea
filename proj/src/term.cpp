#include "vdouble/term.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "vdouble/error.hpp"

namespace vdouble {

struct Term::Node {
  std::string name;
  std::vector<Term> kids;  // empty for a generator, else {base, exponent}
  ExpDir dir = ExpDir::Fwd;
  std::size_t hash = 0;
  std::uint64_t size = 1;
  std::size_t depth = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // splitmix-style combine
  std::uint64_t x = static_cast<std::uint64_t>(h) ^ (static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(x ^ (x >> 31));
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term run() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  Term term() {
    Term t = atom();
    while (true) {
      skip_ws();
      if (peek() != '^') break;
      ++pos_;
      ExpDir dir = ExpDir::Fwd;
      skip_ws();
      if (peek() == '~') {
        dir = ExpDir::Inv;
        ++pos_;
      }
      t = Term::exp(std::move(t), atom(), dir);
    }
    return t;
  }

  Term atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Term t = term();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (!name_start(peek())) fail("expected generator name or '('");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    return Term::gen(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Term& t, std::string& out) {
  if (t.is_gen()) {
    out += t.name();
    return;
  }
  print_into(t.base(), out);
  out += t.dir() == ExpDir::Fwd ? "^" : "^~";
  if (t.exponent().is_gen()) {
    out += t.exponent().name();
  } else {
    out += '(';
    print_into(t.exponent(), out);
    out += ')';
  }
}

}  // namespace

Term Term::gen(std::string name) {
  if (!is_valid_name(name)) throw ParseError("invalid generator name '" + name + "'", 0);
  auto n = std::make_shared<Node>();
  n->hash = std::hash<std::string>{}(name);
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::exp(Term base, Term exponent, ExpDir dir) {
  auto n = std::make_shared<Node>();
  n->hash = mix(mix(base.hash(), exponent.hash()), dir == ExpDir::Fwd ? 1 : 2);
  n->size = sat_add(base.size(), exponent.size());
  n->depth = 1 + std::max(base.depth(), exponent.depth());
  n->dir = dir;
  n->kids.reserve(2);
  n->kids.push_back(std::move(base));
  n->kids.push_back(std::move(exponent));
  return Term(std::move(n));
}

bool Term::is_gen() const noexcept { return node_->kids.empty(); }

const std::string& Term::name() const {
  if (!is_gen()) throw Error("term is not a generator");
  return node_->name;
}

const Term& Term::base() const {
  if (is_gen()) throw Error("generator has no base");
  return node_->kids[0];
}

const Term& Term::exponent() const {
  if (is_gen()) throw Error("generator has no exponent");
  return node_->kids[1];
}

ExpDir Term::dir() const {
  if (is_gen()) throw Error("generator has no direction");
  return node_->dir;
}

std::size_t Term::hash() const noexcept { return node_->hash; }
std::uint64_t Term::size() const noexcept { return node_->size; }
std::size_t Term::depth() const noexcept { return node_->depth; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.depth() != b.depth()) return false;
  if (a.is_gen() != b.is_gen()) return false;
  if (a.is_gen()) return a.name() == b.name();
  return a.dir() == b.dir() && a.exponent() == b.exponent() && a.base() == b.base();
}

Term parse_term(std::string_view text) { return TermParser(text).run(); }

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word parse_word(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  Word w;
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected input after identity word", pos);
    return w;
  }
  while (true) {
    skip_ws();
    if (pos >= text.size() || !name_start(text[pos])) throw ParseError("expected generator name", pos);
    const std::size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    Letter l{std::string(text.substr(start, pos - start)), 1};
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      if (text.substr(pos, 2) == "-1") {
        l.exp = -1;
        pos += 2;
      } else if (text.substr(pos, 1) == "1") {
        pos += 1;
      } else {
        throw ParseError("exponent must be 1 or -1", pos);
      }
      skip_ws();
    }
    w.push_back(std::move(l));
    if (pos >= text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*'", pos);
    ++pos;
  }
  return w;
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '*';
    out += w[i].gen;
    if (w[i].exp < 0) out += "^-1";
  }
  return out;
}

bool is_valid_name(std::string_view name) {
  if (name.empty() || !name_start(name.front())) return false;
  for (char c : name) {
    if (!name_char(c)) return false;
  }
  return true;
}

}  // namespace vdouble
