#ifndef VDOUBLE_TERM_HPP
#define VDOUBLE_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace vdouble {

// Fwd is the quandle operation t^u, Inv its inverse t^~u (overbar).
enum class ExpDir : std::uint8_t { Fwd, Inv };

constexpr ExpDir flip(ExpDir d) noexcept { return d == ExpDir::Fwd ? ExpDir::Inv : ExpDir::Fwd; }

// Immutable quandle term. Subterms are shared, so a term is a DAG; size() and
// depth() refer to the expanded tree (size saturates at UINT64_MAX).
class Term {
 public:
  static Term gen(std::string name);
  static Term exp(Term base, Term exponent, ExpDir dir);

  bool is_gen() const noexcept;
  const std::string& name() const;
  const Term& base() const;
  const Term& exponent() const;
  ExpDir dir() const;

  std::size_t hash() const noexcept;
  std::uint64_t size() const noexcept;
  std::size_t depth() const noexcept;
  // Node identity, for memoized traversals.
  const void* node_id() const noexcept { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// term := atom | term '^' factor | term '^~' factor ; '^' is left-associative.
Term parse_term(std::string_view text);
std::string print_term(const Term& t);

// Group words: sequences of generator letters with exponent +1 or -1,
// multiplied left to right.
struct Letter {
  std::string gen;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

// word := '1' | letter ('*' letter)* ; letter := name ('^-1' | '^1')?
Word parse_word(std::string_view text);
std::string print_word(const Word& w);

bool is_valid_name(std::string_view name);

}  // namespace vdouble

#endif  // VDOUBLE_TERM_HPP
