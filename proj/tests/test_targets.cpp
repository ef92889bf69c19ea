#include <doctest.h>

#include <map>
#include <random>

#include "oracle.hpp"
#include "vdouble/error.hpp"
#include "vdouble/reference.hpp"
#include "vdouble/targets.hpp"

using namespace vdouble;

namespace {

Mat2 mat(long a, long b, long c, long d) { return Mat2{{Rational(a), Rational(b), Rational(c), Rational(d)}}; }

std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (Element a = 0; a < g.size(); ++a) {
    std::size_t k = 1;
    for (Element x = a; x != g.identity(); x = g.mul(x, a)) ++k;
    ++h[k];
  }
  return h;
}

std::map<std::size_t, std::size_t> order_histogram(const oracle::Group& g) {
  int e = 0;
  while (g.mul(e, e) != e) ++e;
  std::map<std::size_t, std::size_t> h;
  for (int a = 0; a < g.n; ++a) {
    std::size_t k = 1;
    for (int x = a; x != e; x = g.mul(x, a)) ++k;
    ++h[k];
  }
  return h;
}

}  // namespace

TEST_CASE("dihedral quandles") {
  const FiniteQuandle r3 = dihedral_quandle(3);
  CHECK(r3.op(0, 1) == 2);
  CHECK(r3.inv_op(2, 1) == 0);
  for (std::size_t n = 1; n <= 9; ++n) CHECK_NOTHROW(dihedral_quandle(n));
  CHECK(r3.name() == "r3");
}

TEST_CASE("trivial quandle") {
  const FiniteQuandle t = trivial_quandle(4);
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j) CHECK(t.op(i, j) == i);
}

TEST_CASE("quandle axioms are enforced") {
  CHECK_THROWS_AS(FiniteQuandle("bad", 2, {1, 1, 0, 0}), ValidationError);
  CHECK_THROWS_AS(FiniteQuandle("bad", 3, {0, 2, 1, 2, 1, 0, 0, 0, 2}), ValidationError);
  CHECK_THROWS_AS(FiniteQuandle("bad", 2, {0, 0, 1}), ValidationError);
  CHECK_NOTHROW(FiniteQuandle("triv", 2, {0, 0, 1, 1}));
}

TEST_CASE("group axioms are enforced") {
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {1, 1, 1, 1}), ValidationError);
  CHECK_NOTHROW(FiniteGroup("z2", 2, {0, 1, 1, 0}));
}

TEST_CASE("group orders") {
  CHECK(group_from_generators(Sym{3}).size() == 6);
  CHECK(group_from_generators(Sym{4}).size() == 24);
  CHECK(group_from_generators(UpperTriangular{5}).size() == 80);
  CHECK(group_from_generators(UpperTriangular{3}).size() == 12);
  CHECK(group_from_generators(Cyclic{1}).size() == 1);
  CHECK(group_from_generators(Cyclic{7}).size() == 7);
  CHECK(group_from_generators(Dihedral{4}).size() == 8);
  CHECK(group_from_generators(Sym{1}).size() == 1);
  CHECK_THROWS_AS(group_from_generators(Sym{7}), ValidationError);
  CHECK_THROWS_AS(group_from_generators(UpperTriangular{4}), ValidationError);
}

TEST_CASE("groups match concrete models") {
  CHECK(order_histogram(group_from_generators(Sym{4})) == order_histogram(oracle::sym(4)));
  CHECK(order_histogram(group_from_generators(UpperTriangular{5})) == order_histogram(oracle::ut(5)));
  CHECK(order_histogram(group_from_generators(Cyclic{6})) == order_histogram(oracle::cyclic(6)));
  CHECK(group_from_generators(Cyclic{6}).abelian());
  CHECK_FALSE(group_from_generators(Sym{3}).abelian());
  CHECK_FALSE(group_from_generators(Dihedral{4}).abelian());
}

TEST_CASE("conjugation quandles") {
  const FiniteQuandle c = conj_quandle(group_from_generators(Cyclic{5}));
  for (Element i = 0; i < 5; ++i)
    for (Element j = 0; j < 5; ++j) CHECK(c.op(i, j) == i);

  const FiniteGroup s3 = group_from_generators(Sym{3});
  const FiniteQuandle q = conj_quandle(s3);
  std::vector<Element> transpositions;
  for (Element a = 0; a < 6; ++a) {
    if (a != s3.identity() && s3.mul(a, a) == s3.identity()) transpositions.push_back(a);
  }
  REQUIRE(transpositions.size() == 3);
  for (Element a : transpositions) {
    for (Element b : transpositions) {
      if (a == b) {
        CHECK(q.op(a, b) == a);
      } else {
        const Element third = transpositions[0] ^ transpositions[1] ^ transpositions[2] ^ a ^ b;
        CHECK(q.op(a, b) == third);
      }
      CHECK(q.op(a, b) == s3.mul(s3.mul(b, a), s3.inv(b)));
    }
  }
  CHECK_NOTHROW(conj_quandle(group_from_generators(UpperTriangular{5})));
  CHECK(conj_quandle(group_from_generators(UpperTriangular{5})).size() == 80);
}

TEST_CASE("target specs") {
  CHECK(target_size(parse_target("r3")) == 3);
  CHECK(target_size(parse_target("s4")) == 24);
  CHECK(target_size(parse_target("d8")) == 8);
  CHECK(target_size(parse_target("cyc:5")) == 5);
  CHECK(target_size(parse_target("ut2:5")) == 80);
  CHECK(target_size(parse_target("conj:s3")) == 6);
  CHECK(target_size(parse_target("triv:4")) == 4);
  CHECK(target_algebra(parse_target("conj:d8")) == Algebra::Quandle);
  CHECK(target_algebra(parse_target("s3")) == Algebra::Group);
  CHECK(target_name(parse_target("conj:s3")) == "conj:s3");
  CHECK_THROWS_AS(parse_target("x3"), ParseError);
  CHECK_THROWS_AS(parse_target("s"), ParseError);
  CHECK_THROWS_AS(parse_target("d7"), ValidationError);
  CHECK_THROWS_AS(parse_target("r0"), ValidationError);
  CHECK_THROWS_AS(parse_target("ut2:6"), ValidationError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(parse_rational("123456789012345678901234567890") * 2 == parse_rational("246913578024691357802469135780"));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("matrices") {
  const Mat2 a = mat(1, 2, 3, 4);
  CHECK(a.det() == -2);
  CHECK(a * a.inverse() == Mat2::identity());
  CHECK(a.inverse() == Mat2{{Rational(-2), Rational(1), Rational(3, 2), Rational(-1, 2)}});
  CHECK_THROWS_AS(mat(1, 2, 2, 4).inverse(), Error);
  CHECK(to_string(mat(2, -1, 0, 1)) == "[[2, -1], [0, 1]]");
}

TEST_CASE("evaluate A^x") {
  const MatrixAssignment v{{"x", mat(1, 1, 0, 1)}, {"A", mat(2, 0, 0, 1)}};
  CHECK(eval_term(parse_term("A^x"), v) == mat(2, -1, 0, 1));
  CHECK(eval_term(parse_term("A^~x"), v) == mat(2, 1, 0, 1));
  CHECK(eval_term(parse_term("x^~x"), v) == mat(1, 1, 0, 1));
  CHECK(eval_term(parse_term("(((A^x)^A)^~x)^(A^x)"), v) == mat(2, -1, 0, 1));
  CHECK_THROWS_AS(eval_term(parse_term("A^y"), v), Error);
  CHECK_THROWS_AS(eval_term(parse_term("A^x"), MatrixAssignment{{"x", mat(1, 1, 1, 1)}, {"A", mat(1, 0, 0, 1)}}), Error);
}

TEST_CASE("inverse exponent cancels exactly on random matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> entry(-9, 9);
  const Term t1 = parse_term("t^u^~u");
  const Term t2 = parse_term("t^~u^u");
  int samples = 0;
  while (samples < 500) {
    const Mat2 t = mat(entry(rng), entry(rng), entry(rng), entry(rng));
    Mat2 u{{Rational(entry(rng), 1 + (rng() % 5)), Rational(entry(rng)), Rational(entry(rng)), Rational(entry(rng), 1 + (rng() % 7))}};
    u.e[0].canonicalize();
    u.e[3].canonicalize();
    if (u.det() == 0) continue;
    const MatrixAssignment v{{"t", t}, {"u", u}};
    CHECK(eval_term(t1, v) == t);
    CHECK(eval_term(t2, v) == t);
    const Mat2 uinv{{u.e[3] / u.det(), -u.e[1] / u.det(), -u.e[2] / u.det(), u.e[0] / u.det()}};
    CHECK(eval_term(parse_term("t^u"), v) == u * t * uinv);
    ++samples;
  }
}

TEST_CASE("witness on the reduced presentation") {
  const WitnessReport r = witness_check(reference::vd_virtual_trefoil_reduced(), reference::witness_assignment());
  CHECK_FALSE(r.holds);
  REQUIRE(r.relations.size() == 1);
  CHECK(r.relations[0].lhs.e[1] == reference::kWitnessLhsUpperRight);
  CHECK(r.relations[0].rhs.e[1] == reference::kWitnessRhsUpperRight);
  CHECK(r.relations[0].delta == mat(0, 1, 0, 0));

  MatrixAssignment id = reference::witness_assignment();
  id["A"] = Mat2::identity();
  CHECK(witness_check(reference::vd_virtual_trefoil_reduced(), id).holds);

  const Presentation free2 = make_presentation(Algebra::Quandle, {"x", "A"}, {});
  const WitnessReport f = witness_check(free2, reference::witness_assignment());
  CHECK(f.holds);
  CHECK(f.relations.empty());
  CHECK_THROWS_AS(witness_check(reference::trefoil_group(), reference::witness_assignment()), ValidationError);
}

TEST_CASE("clearing denominators gives integer matrices") {
  const MatrixAssignment v{{"x", mat(3, 1, 0, 2)}, {"A", mat(2, 5, 0, 7)}};
  const Mat2 m = eval_term(parse_term("(((A^x)^A)^~x)^(A^x)"), v);
  mpz_class lcm = 1;
  for (const auto& q : m.e) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& q : m.e) CHECK(Rational(q * lcm).get_den() == 1);
}

TEST_CASE("element evaluation") {
  const FiniteQuandle r5 = dihedral_quandle(5);
  CHECK(eval_term(parse_term("a^b"), r5, {{"a", 1}, {"b", 3}}) == 0);
  CHECK(eval_term(parse_term("a^b^~b"), r5, {{"a", 1}, {"b", 3}}) == 1);
  const FiniteGroup z7 = group_from_generators(Cyclic{7});
  CHECK(eval_word(parse_word("a*b^-1*a"), z7, {{"a", 3}, {"b", 1}}) == 5);
  CHECK(eval_word(parse_word("1"), z7, {}) == z7.identity());
}
