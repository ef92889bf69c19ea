#ifndef VDOUBLE_PRESENTER_HPP
#define VDOUBLE_PRESENTER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "vdouble/diagram.hpp"
#include "vdouble/term.hpp"

namespace vdouble {

enum class Algebra : std::uint8_t { Group, Quandle };

std::string to_string(Algebra a);
Algebra parse_algebra(std::string_view text);

struct TermRelation {
  Term lhs;
  Term rhs;

  friend bool operator==(const TermRelation&, const TermRelation&) = default;
};

struct WordRelation {
  Word lhs;
  Word rhs;

  friend bool operator==(const WordRelation&, const WordRelation&) = default;
};

// A finite presentation of a quandle (term relations) or a group (word
// relations). Meridians tag one generator per link component.
struct Presentation {
  std::vector<std::string> generators;
  std::variant<std::vector<TermRelation>, std::vector<WordRelation>> relations;
  std::map<std::size_t, std::string> meridians;
  std::string provenance;

  Algebra algebra() const noexcept { return relations.index() == 0 ? Algebra::Quandle : Algebra::Group; }
  const std::vector<TermRelation>& quandle_relations() const;
  const std::vector<WordRelation>& group_relations() const;
  std::size_t relation_count() const noexcept;
  bool has_generator(const std::string& g) const;

  // Throws ValidationError unless generators are distinct and valid names,
  // every relation uses declared generators and meridians are declared.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Generator name of local arc `arc` on `component` in Wirtinger output.
std::string arc_generator(std::size_t component, std::size_t arc);

// One generator per arc and one relation per crossing. At a crossing with
// over-arc c, incoming under-arc a and outgoing under-arc b the relation is
// a = b^c when positive and b = a^c when negative; groups read t^c as
// c t c^-1.
Presentation wirtinger(const Diagram& d, Algebra algebra);
Presentation wirtinger(const CutDiagram& d, Algebra algebra);

// Generators on the two sides of each cut, keyed by component:
// {arc ending at the cut, arc starting at the cut}.
std::map<std::size_t, std::pair<std::string, std::string>> cut_generators(const CutDiagram& d);

// t^u -> u t u^-1 and t^~u -> u^-1 t u, freely reduced.
Word term_to_word(const Term& t);
Presentation quandle_to_group(const Presentation& p);

struct SimplifyOptions {
  // Refuse a group substitution that would push the total relation length
  // past this many letters.
  std::size_t max_word_letters = 4'000'000;
  // Generators that are never eliminated. When nonempty this replaces the
  // default protection of meridians.
  std::set<std::string> keep;
};

// Tietze simplification: cancels inverse pairs and idempotents, drops
// tautologies and eliminates isolated generators, fewest occurrences first.
// Ties prefer a generator standing on the left of its relation, then the
// earlier name. Meridian generators are only eliminated when they are set
// equal to another generator, which then inherits the tag.
Presentation simplify(const Presentation& p, const SimplifyOptions& options = {});

// Quandle term normalization used by simplify: (t^u)^~u -> t, (t^~u)^u -> t,
// t^t -> t, t^~t -> t.
Term normalize(const Term& t);

Presentation kill_generator(const Presentation& p, const std::string& g);
Presentation identify_generators(const Presentation& p, const std::string& keep, const std::string& drop);
Presentation rename_generators(const Presentation& p, const std::map<std::string, std::string>& renaming);

// Substitutes whole terms for generators.
Term substitute(const Term& t, const std::map<std::string, Term>& values);

// A bijection of generator names taking `from` onto `to` exactly: same
// algebra, and the renamed relations equal those of `to` up to order.
// Meridians and provenance are ignored.
std::optional<std::map<std::string, std::string>> find_renaming(const Presentation& from, const Presentation& to);

// Builds a presentation from relation strings "lhs = rhs" in the term or word
// grammar; validates the result.
Presentation make_presentation(Algebra algebra, std::vector<std::string> generators,
                               const std::vector<std::string>& relations, std::string provenance = {});

std::string print_presentation(const Presentation& p);

}  // namespace vdouble

#endif  // VDOUBLE_PRESENTER_HPP
