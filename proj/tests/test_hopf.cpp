#include <doctest.h>

#include "support.hpp"
#include "tensalg/checks.hpp"
#include "tensalg/error.hpp"
#include "tensalg/symmetry.hpp"

using namespace testing;

namespace {

TensorSquare square_of(std::initializer_list<std::tuple<Word, Word, Scalar>> terms) {
  TensorSquare out{Side::kU, {}};
  for (const auto& [l, r, c] : terms) out.terms.add({l, r}, c);
  return out;
}

}  // namespace

TEST_CASE("coproduct examples") {
  CHECK(coproduct(Element::unit(Side::kU)) == square_of({{{}, {}, 1}}));
  CHECK(coproduct(U({{{1}, 1}})) == square_of({{{}, {1}, 1}, {{1}, {}, 1}}));
  CHECK(coproduct(U({{{1, 2}, 1}})) ==
        square_of({{{}, {1, 2}, 1}, {{1}, {2}, 1}, {{2}, {1}, 1}, {{1, 2}, {}, 1}}));
}

TEST_CASE("coproduct of a square power is binomial") {
  const Element x = U({{{1}, 1}, {{2}, 1}});
  const Element x2 = power(x, 2);
  TensorSquare expected{Side::kU, {}};
  const Element one = Element::unit(Side::kU);
  auto add = [&](const Element& l, const Element& r, long k) {
    for (const auto& [lw, lc] : l.terms())
      for (const auto& [rw, rc] : r.terms()) expected.terms.add({lw, rw}, lc * rc * k);
  };
  add(x2, one, 1);
  add(x, x, 2);
  add(one, x2, 1);
  CHECK(coproduct(x2) == expected);
}

TEST_CASE("coproduct agrees with the letter-by-letter oracle") {
  Sampler rng(11);
  for (int i = 0; i < 50; ++i) {
    const Element a = rng.element(Side::kU, 3, 6);
    CHECK(coproduct(a) == coproduct_oracle(a));
  }
}

TEST_CASE("coproduct respects the grade cap") {
  Word w;
  for (int i = 0; i < 9; ++i) w.push_back(1);
  try {
    coproduct(Element::word(Side::kU, w));
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapExceeded);
  }
  Caps wide;
  wide.grade = 9;
  CHECK(coproduct(Element::word(Side::kU, w), wide).terms.size() == 10);
}

TEST_CASE("antipode and counit") {
  CHECK(antipode(Element::unit(Side::kU)) == Element::unit(Side::kU));
  CHECK(antipode(U({{{1}, 1}})) == U({{{1}, -1}}));
  CHECK(antipode(U({{{1, 2}, 1}})) == U({{{2, 1}, 1}}));
  CHECK(antipode(U({{{1, 2, 2}, 1}})) == U({{{2, 2, 1}, -1}}));
  CHECK(counit(Element::unit(Side::kU)) == 1);
  CHECK(counit(U({{{1}, 1}})) == 0);
  CHECK(counit(U({{{}, 5}, {{1, 2}, 2}})) == 5);
}

TEST_CASE("antipode is an anti-homomorphism") {
  Sampler rng(5);
  for (int i = 0; i < 30; ++i) {
    const Element a = rng.element(Side::kU, 2, 3);
    const Element b = rng.element(Side::kU, 2, 3);
    CHECK(antipode(concat_product(a, b)) == concat_product(antipode(b), antipode(a)));
  }
}

TEST_CASE("joint structure maps") {
  JointTensorSquare e1;
  e1.terms.add({JointWord{}, JointWord{{1}, {}}}, 1);
  e1.terms.add({JointWord{{1}, {}}, JointWord{}}, 1);
  CHECK(joint_coproduct(J({{{1}, {}, 1}})) == e1);

  JointTensorSquare f1;
  f1.terms.add({JointWord{}, JointWord{{}, {1}}}, 1);
  f1.terms.add({JointWord{{}, {1}}, JointWord{}}, 1);
  CHECK(joint_coproduct(J({{{}, {1}, 1}})) == f1);

  const JointTensorSquare both = joint_coproduct(J({{{1}, {1}, 1}}));
  CHECK(both.terms.size() == 4);
  CHECK(both.terms.coefficient({JointWord{{1}, {}}, JointWord{{}, {1}}}) == 1);
  CHECK(both.terms.coefficient({JointWord{{}, {1}}, JointWord{{1}, {}}}) == 1);

  CHECK(joint_antipode(J({{{1}, {1}, 1}})) == J({{{1}, {1}, 1}}));
  CHECK(joint_antipode(J({{{1, 2}, {3}, 1}})) == J({{{2, 1}, {3}, -1}}));
  CHECK(joint_counit(JointElement::unit()) == 1);
  CHECK(joint_counit(J({{{1}, {2}, 1}})) == 0);
}

TEST_CASE("leg operations") {
  const TensorSquare t = square_of({{{1}, {2}, 2}, {{}, {1, 1}, 1}});
  CHECK(flip(t) == square_of({{{2}, {1}, 2}, {{1, 1}, {}, 1}}));
  CHECK(multiply_legs(t) == U({{{1, 2}, 2}, {{1, 1}, 1}}));
  CHECK(counit_left(t) == U({{{1, 1}, 1}}));
  CHECK(counit_right(t).is_zero());
  CHECK(antipode_right(t) == square_of({{{1}, {2}, -2}, {{}, {1, 1}, 1}}));
  CHECK(to_string(square_of({{{}, {1}, 1}, {{1}, {}, 1}})) == "1·(1 | e1) + 1·(e1 | 1)");
}
