#include <string>
#include <vector>

#include "doctest.h"
#include "sgw/singular.hpp"

using namespace sgw;

namespace {

SingularCurve d1_on_nothing() { return insert_singularity(SignedWord{}, CaseId::D1, {0, 0}); }

}  // namespace

TEST_CASE("case names and kinds") {
  CHECK(case_from_name("d1") == CaseId::D1);
  CHECK(case_from_name("T5") == CaseId::T5);
  CHECK(case_name(CaseId::I2) == "I2");
  CHECK_THROWS_AS(case_from_name("X9"), parse_error);

  CHECK(case_kind(CaseId::D1) == SingularKind::direct_tangency);
  CHECK(case_kind(CaseId::D2) == SingularKind::direct_tangency);
  CHECK(case_kind(CaseId::I1) == SingularKind::inverse_tangency);
  CHECK(case_kind(CaseId::I2) == SingularKind::inverse_tangency);
  for (CaseId id : {CaseId::T1, CaseId::T2, CaseId::T3, CaseId::T4, CaseId::T5, CaseId::T6,
                    CaseId::T7, CaseId::T8})
    CHECK(case_kind(id) == SingularKind::triple);

  CHECK(kind_from_name(kind_name(SingularKind::triple)) == SingularKind::triple);
  CHECK_THROWS_AS(kind_from_name("loop"), parse_error);
}

TEST_CASE("inserting a tangency into the empty word") {
  const SingularCurve c = d1_on_nothing();
  CHECK(format_word(c.base) == "AbAb");
  REQUIRE(c.points.size() == 1);
  CHECK(c.points[0].case_id == CaseId::D1);
  CHECK(c.points[0].letters == std::vector<std::uint32_t>{1, 2});
  CHECK(validate_singular(c).empty());
  CHECK(point_slot_pairs(c) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 3}});
}

TEST_CASE("resolving a direct tangency") {
  const SingularCurve c = d1_on_nothing();
  CHECK(resolve(c, ResolutionVector{{1}}) == parse_word("AbAb"));
  CHECK(resolve(c, ResolutionVector{{-1}}) == SignedWord{});
  CHECK_THROWS_AS(resolve(c, ResolutionVector{{1, 1}}), validation_error);
  CHECK_THROWS_AS(resolve(c, ResolutionVector{{0}}), validation_error);
}

TEST_CASE("sign vectors enumerate as a binary counter, first point on top") {
  const SingularCurve c = insert_singularity(d1_on_nothing(), CaseId::D1, {4, 4});
  CHECK(format_word(c.base) == "AbAbCdCd");
  const auto rows = resolve_all(c);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].first.signs == std::vector<std::int8_t>{1, 1});
  CHECK(rows[1].first.signs == std::vector<std::int8_t>{1, -1});
  CHECK(rows[2].first.signs == std::vector<std::int8_t>{-1, 1});
  CHECK(rows[3].first.signs == std::vector<std::int8_t>{-1, -1});
  CHECK(format_word(rows[0].second) == "AbAbCdCd");
  CHECK(format_word(rows[1].second) == "AbAb");
  CHECK(format_word(rows[2].second) == "AbAb");  // canonical form forgets which pair survived
  CHECK(rows[3].second == SignedWord{});
  CHECK(rows[0].first.sign_product() == 1);
  CHECK(rows[1].first.sign_product() == -1);
  CHECK(ResolutionVector{}.sign_product() == 1);
}

TEST_CASE("triple point insertion and its negative resolution") {
  const SingularCurve c = insert_singularity(SignedWord{}, CaseId::T3, {0, 0, 0});
  CHECK(format_word(c.base) == "aBcaBc");
  CHECK(validate_singular(c).empty());
  CHECK(resolve(c, ResolutionVector{{1}}) == parse_word("aBcaBc"));
  CHECK(resolve(c, ResolutionVector{{-1}}) == parse_word("AbbccA"));
  CHECK(resolve(c, ResolutionVector{{-1}}).letter_count() == 3);  // triples keep all letters
}

TEST_CASE("validation pinpoints the broken point") {
  SingularCurve c = d1_on_nothing();
  c.points[0].letters = {1, 1};
  const auto diags = validate_singular(c);
  REQUIRE_FALSE(diags.empty());
  CHECK(diags[0].find("point 0 (D1)") != std::string::npos);

  SingularCurve shared = insert_singularity(d1_on_nothing(), CaseId::D1, {4, 4});
  shared.points[1].letters = {1, 2};  // collides with point 1
  CHECK_FALSE(validate_singular(shared).empty());

  SingularCurve wrong_case = d1_on_nothing();
  wrong_case.points[0].case_id = CaseId::D2;  // pattern signs do not match the base
  CHECK_FALSE(validate_singular(wrong_case).empty());
  CHECK_THROWS_AS(resolve(wrong_case, ResolutionVector{{1}}), validation_error);
}

TEST_CASE("insertion positions must respect existing patterns") {
  const SingularCurve c = d1_on_nothing();
  CHECK_THROWS_AS(insert_singularity(c, CaseId::D1, {1, 1}), validation_error);
  CHECK_THROWS_AS(insert_singularity(c, CaseId::D1, {3, 2}), validation_error);   // not ascending
  CHECK_THROWS_AS(insert_singularity(c, CaseId::D1, {4, 9}), validation_error);   // past the end
  CHECK_THROWS_AS(insert_singularity(SignedWord{}, CaseId::D1, {0}), validation_error);

  const SingularCurve spread = insert_singularity(c, CaseId::I1, {2, 4});
  CHECK(validate_singular(spread).empty());
  CHECK(spread.base.size() == 8);
  CHECK(spread.points.size() == 2);
  CHECK(resolve(spread, ResolutionVector{{1, -1}}) == parse_word("AbAb"));
}

TEST_CASE("resolution commutes with the point listing order") {
  const SingularCurve c = insert_singularity(d1_on_nothing(), CaseId::T2, {0, 2, 4});
  SingularCurve reversed = c;
  std::swap(reversed.points[0], reversed.points[1]);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const ResolutionVector forward{{static_cast<std::int8_t>(s1), static_cast<std::int8_t>(s2)}};
      const ResolutionVector backward{{static_cast<std::int8_t>(s2), static_cast<std::int8_t>(s1)}};
      CHECK(resolve(c, forward) == resolve(reversed, backward));
    }
}

TEST_CASE("one point expands to a two-term difference") {
  const SingularCurve c{parse_word("AbAb"), {SingularPoint{CaseId::D1, {1, 2}}}};
  REQUIRE(validate_singular(c).empty());
  const Functional f = expanded_invariant(1, c);
  CHECK(f.order() == 1);
  CHECK(f.value_on_class_key("aa") == Rational(2));
  CHECK(f.values().size() == 1);
  CHECK_FALSE(finite_type_check(1, c));
}

TEST_CASE("two points kill every order-1 functional but not order 2") {
  const SingularCurve c = insert_singularity(d1_on_nothing(), CaseId::D1, {4, 4});
  CHECK(finite_type_check(1, c));
  CHECK(expanded_invariant(1, c).is_zero());
  CHECK_FALSE(finite_type_check(2, c));
  CHECK(expanded_invariant(2, c) == expanded_invariant(2, c, 4));  // worker count is cosmetic
}

TEST_CASE("resolution fan-out is capped") {
  SingularCurve c{SignedWord{}, {}};
  for (int i = 0; i < 21; ++i) c = insert_singularity(c, CaseId::D1, {c.base.size(), c.base.size()});
  CHECK(c.points.size() == 21);
  CHECK_THROWS_AS(resolve_all(c), validation_error);
  CHECK_THROWS_AS(expanded_invariant(0, c), validation_error);
}
