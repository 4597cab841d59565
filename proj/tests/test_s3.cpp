#include <doctest.h>

#include <algorithm>

#include "quatgeo/s3_finite.hpp"
#include "test_helpers.hpp"

using namespace quatgeo;
using namespace quatgeo::testing;

namespace {
using Tag = FiniteS3Class::Tag;
using QD = Quat<double>;

std::vector<QD> conjugated(const std::vector<QD>& s, const QD& u) {
  std::vector<QD> out;
  QD ui = u.inverse();
  for (const auto& q : s) out.push_back(ui * q * u);
  return out;
}
}  // namespace

TEST_CASE("generators have unit norm") {
  for (const QD& g : {s3_i_icosahedral(), s3_i_octahedral(), s3_i_tetrahedral(),
                      s3_omega(), s3_e(4), s3_e(2.5), s3_j()})
    CHECK(std::abs(quat_norm(g) - 1.0) <= 1e-12);
}

TEST_CASE("orders of the built groups") {
  CHECK(s3_build({Tag::TwoC, 1}).size() == 2);    // {1, -1}
  CHECK(s3_build({Tag::TwoT}).size() == 24);
  CHECK(s3_build({Tag::TwoO}).size() == 48);
  CHECK(s3_build({Tag::TwoI}).size() == 120);
  for (int n = 1; n <= 8; ++n) {
    CHECK(s3_build({Tag::TwoD, n}).size() == 4u * n);
    CHECK(s3_build({Tag::TwoC, n}).size() == 2u * n);
  }
  for (int n = 1; n <= 9; n += 2)
    CHECK(s3_build({Tag::OneC, n}).size() == static_cast<std::size_t>(n));
}

TEST_CASE("TwoC(1) is {1, -1}") {
  auto s = s3_build({Tag::TwoC, 1});
  CHECK(s3_contains(s, QD(1.0)));
  CHECK(s3_contains(s, QD(-1.0)));
}

TEST_CASE("OneC rejects even parameters") {
  CHECK_THROWS_AS(s3_build({Tag::OneC, 4}), InvalidArgument);
  CHECK_THROWS_AS(s3_build({Tag::OneC, 2}), InvalidArgument);
}

TEST_CASE("every nontrivial class except OneC contains -1") {
  CHECK(s3_contains(s3_build({Tag::TwoI}), QD(-1.0)));
  CHECK(s3_contains(s3_build({Tag::TwoO}), QD(-1.0)));
  CHECK(s3_contains(s3_build({Tag::TwoT}), QD(-1.0)));
  for (int n = 1; n <= 4; ++n) {
    CHECK(s3_contains(s3_build({Tag::TwoD, n}), QD(-1.0)));
    CHECK(s3_contains(s3_build({Tag::TwoC, n}), QD(-1.0)));
  }
  CHECK(!s3_contains(s3_build({Tag::OneC, 5}), QD(-1.0)));
}

TEST_CASE("recognition round-trips over the classification") {
  std::vector<FiniteS3Class> classes = {{Tag::TwoI}, {Tag::TwoO}, {Tag::TwoT}};
  for (int n = 2; n <= 5; ++n) classes.push_back({Tag::TwoD, n});
  for (int n = 1; n <= 5; ++n) classes.push_back({Tag::TwoC, n});
  for (int n = 1; n <= 9; n += 2) classes.push_back({Tag::OneC, n});
  for (const auto& cls : classes) {
    auto rec = s3_recognize(s3_build(cls));
    REQUIRE(rec.has_value());
    CHECK(*rec == cls);
  }

  // The order-4 coincidence: 2D_2 = {+-1, +-J} and 2C_2 = {+-1, +-I} are
  // conjugate subgroups, so recognition canonicalizes both to 2C_2.
  auto rec = s3_recognize(s3_build({Tag::TwoD, 1}));
  REQUIRE(rec.has_value());
  CHECK(*rec == FiniteS3Class{Tag::TwoC, 2});
}

TEST_CASE("recognition is conjugation invariant") {
  std::vector<FiniteS3Class> classes = {
      {Tag::TwoT}, {Tag::TwoD, 3}, {Tag::TwoC, 4}, {Tag::OneC, 5}};
  for (const auto& cls : classes) {
    auto base = s3_build(cls);
    for (int trial = 0; trial < 5; ++trial) {
      auto rec = s3_recognize(conjugated(base, rand_unit_quat()));
      REQUIRE(rec.has_value());
      CHECK(*rec == cls);
    }
  }
}

TEST_CASE("signatures separate the order-24 classes") {
  auto t = s3_signature(s3_build({Tag::TwoT}));
  auto d = s3_signature(s3_build({Tag::TwoD, 6}));   // order 24 dihedral
  auto c = s3_signature(s3_build({Tag::TwoC, 12}));  // order 24 cyclic
  CHECK(t.order == 24);
  CHECK(d.order == 24);
  CHECK(c.order == 24);
  CHECK(!(t == d));
  CHECK(!(t == c));
  CHECK(!(d == c));
  // 2D12 and 2C12 have order-12 elements; 2T does not.
  CHECK(std::count(d.element_orders.begin(), d.element_orders.end(), 12) > 0);
  CHECK(std::count(c.element_orders.begin(), c.element_orders.end(), 12) > 0);
  CHECK(std::count(t.element_orders.begin(), t.element_orders.end(), 12) == 0);
}

TEST_CASE("signature disambiguation holds across the whole range") {
  // Brute-force validation of the recognition table: distinct classes in
  // range never share (order, abelian, element-order multiset), except the
  // known 2D_2 / 2C_2 conjugacy coincidence.
  std::vector<FiniteS3Class> classes = {{Tag::TwoI}, {Tag::TwoO}, {Tag::TwoT}};
  for (int n = 1; n <= 8; ++n) classes.push_back({Tag::TwoD, n});
  for (int n = 1; n <= 8; ++n) classes.push_back({Tag::TwoC, n});
  for (int n = 1; n <= 9; n += 2) classes.push_back({Tag::OneC, n});

  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      bool coincidence = (classes[i] == FiniteS3Class{Tag::TwoD, 1} &&
                          classes[j] == FiniteS3Class{Tag::TwoC, 2}) ||
                         (classes[i] == FiniteS3Class{Tag::TwoC, 2} &&
                          classes[j] == FiniteS3Class{Tag::TwoD, 1});
      bool same = s3_signature(s3_build(classes[i])) ==
                  s3_signature(s3_build(classes[j]));
      CHECK(same == coincidence);
    }
}

TEST_CASE("the trivial group is reported as 1C1") {
  auto rec = s3_recognize({QD(1.0)});
  REQUIRE(rec.has_value());
  CHECK(*rec == FiniteS3Class{Tag::OneC, 1});
  CHECK(rec->name() == "1C1");
}

TEST_CASE("a phi image of {1, -1} is recognized as 2C1") {
  auto rec = s3_recognize({QD(1.0), QD(-1.0)});
  REQUIRE(rec.has_value());
  CHECK(*rec == FiniteS3Class{Tag::TwoC, 1});
}

TEST_CASE("non-groups are rejected loudly") {
  CHECK_THROWS_AS(s3_recognize({QD(1.0), QD::unit_i()}), NotAGroup);      // not closed
  CHECK_THROWS_AS(s3_recognize({QD::unit_i(), QD(-1.0)}), NotAGroup);    // no identity
  CHECK_THROWS_AS(s3_recognize({QD(1.0), QD(2.0)}), NotAGroup);          // not unit
  CHECK_THROWS_AS(s3_recognize(std::vector<QD>{}), NotAGroup);           // empty
}

TEST_CASE("class names parse and print") {
  CHECK(parse_s3_class("2I")->tag == Tag::TwoI);
  CHECK(parse_s3_class("2T")->name() == "2T");
  CHECK(parse_s3_class("2D6")->n == 3);
  CHECK(parse_s3_class("2D6")->name() == "2D6");
  CHECK(parse_s3_class("2C7")->n == 7);
  CHECK(parse_s3_class("1C5")->n == 5);
  CHECK(!parse_s3_class("2D5"));  // odd dihedral subscript is not a class
  CHECK(!parse_s3_class("3X"));
  CHECK(!parse_s3_class("2C0"));
  CHECK(parse_s3_class("2D6")->expected_order() == 12);
}
