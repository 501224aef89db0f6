#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "sk/families.hpp"
#include "sk/floer.hpp"

using namespace sk;

namespace {

bool has_tag(const std::vector<FamilyMatch>& ms, FamilyTag tag, int row = 0) {
  return std::any_of(ms.begin(), ms.end(), [&](const FamilyMatch& m) {
    return m.tag == tag && (tag != FamilyTag::Tange || m.tange_row == row);
  });
}

std::set<std::pair<FamilyTag, int>> tag_set(std::int64_t p, std::int64_t k) {
  std::set<std::pair<FamilyTag, int>> out;
  for (const auto& m : berge_match(p, k)) out.insert({m.tag, 0});
  for (const auto& m : tange_match(p, k)) out.insert({m.tag, m.tange_row});
  return out;
}

}  // namespace

TEST_CASE("table is internally consistent: Q(k(j)) is divisible by p(j)") {
  for (std::size_t r = 0; r < tange_table().size(); ++r) {
    const TangeRow& row = tange_table()[r];
    for (std::int64_t j = -200; j <= 200; ++j) {
      const std::int64_t p = row.p2 * j * j + row.p1 * j + row.p0;
      if (p < 2 || p > 10000) continue;
      const std::int64_t k = row.k1 * j + row.k0;
      const std::int64_t Q = row.q2 * k * k + row.q1 * k + row.q0;
      INFO("row ", r + 1, " j ", j);
      CHECK(Q % p == 0);
    }
  }
  // the spot value from row 1: 2*81 - 9 + 1 = 154 = 7 * 22
  const TangeRow& r1 = tange_table()[0];
  CHECK(r1.q2 * 81 + r1.q1 * 9 + r1.q0 == 154);
}

TEST_CASE("berge matches on pinned inputs") {
  CHECK(has_tag(berge_match(7, 2), FamilyTag::BergeVII));
  CHECK(has_tag(berge_match(32, 13), FamilyTag::BergeIX));
  CHECK(has_tag(berge_match(5, 2), FamilyTag::BergeVIII));
  CHECK(has_tag(berge_match(14, 5), FamilyTag::BergeIX));  // j = -1
  // core knots match types I-V vacuously
  const auto core = berge_match(97, 1);
  CHECK(has_tag(core, FamilyTag::BergeI_II));
  CHECK(has_tag(core, FamilyTag::BergeIII));
  CHECK(has_tag(core, FamilyTag::BergeIV));
  CHECK(has_tag(core, FamilyTag::BergeV));
  CHECK_THROWS_AS(berge_match(4, 2), InvalidInput);
  CHECK_THROWS_AS(berge_match(1, 1), InvalidInput);
  CHECK_THROWS_AS(berge_match(7, 0), InvalidInput);
}

TEST_CASE("tange matches on pinned inputs") {
  CHECK(has_tag(tange_match(22, 9), FamilyTag::Tange, 1));
  CHECK(has_tag(tange_match(38, 7), FamilyTag::Tange, 2));
  CHECK(has_tag(tange_match(191, 15), FamilyTag::TangeSporadic));
  CHECK(has_tag(tange_match(191, 51), FamilyTag::TangeSporadic));   // 51 = 15^{-1} mod 191
  CHECK(has_tag(tange_match(191, 176), FamilyTag::TangeSporadic));  // 176 = -15 mod 191
  CHECK(has_tag(tange_match(191, 140), FamilyTag::TangeSporadic));  // 140 = -51 mod 191
  // row 1 at j = -1 gives (8,3); suppressed when negative j is disabled
  CHECK(has_tag(tange_match(8, 3), FamilyTag::Tange, 1));
  CHECK_FALSE(has_tag(tange_match(8, 3, {false}), FamilyTag::Tange, 1));
}

TEST_CASE("witnesses verify") {
  sk_test::Rng rng(37);
  int verified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const SimpleKnot K = rng.primitive_knot(2, 800);
    for (const auto& m : berge_match(K.p, K.k)) {
      CHECK(verify_witness(K.p, m));
      ++verified;
    }
    for (const auto& m : tange_match(K.p, K.k)) {
      CHECK(verify_witness(K.p, m));
      ++verified;
    }
  }
  CHECK(verified > 100);
  // a corrupted witness fails
  FamilyMatch bogus;
  bogus.tag = FamilyTag::BergeIX;
  bogus.representative = 13;
  bogus.j = 2;
  CHECK_FALSE(verify_witness(32, bogus));
}

TEST_CASE("representative closure: orbit members share the same tag set") {
  sk_test::Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const SimpleKnot K = rng.primitive_knot(2, 500);
    const std::int64_t ki = mod_inverse(K.k, K.p);
    const auto tags = tag_set(K.p, K.k);
    CHECK(tag_set(K.p, K.p - K.k) == tags);
    CHECK(tag_set(K.p, ki) == tags);
    CHECK(tag_set(K.p, K.p - ki) == tags);
  }
}

TEST_CASE("enumeration round trip") {
  const FamilyTag all_tags[] = {FamilyTag::BergeI_II, FamilyTag::BergeIII, FamilyTag::BergeIV,
                                FamilyTag::BergeV,    FamilyTag::BergeVII, FamilyTag::BergeVIII,
                                FamilyTag::BergeIX,   FamilyTag::BergeX};
  for (FamilyTag tag : all_tags) {
    const auto pairs = enumerate_family(tag, 0, 300);
    CHECK(!pairs.empty());
    for (const auto& [p, k] : pairs) {
      INFO(family_tag_name(tag), " (", p, ",", k, ")");
      CHECK(has_tag(berge_match(p, k), tag));
    }
  }
  for (int row = 1; row <= static_cast<int>(tange_table().size()); ++row) {
    const auto pairs = enumerate_family(FamilyTag::Tange, row, 2500);
    CHECK(!pairs.empty());
    for (const auto& [p, k] : pairs) {
      INFO("tange row ", row, " (", p, ",", k, ")");
      CHECK(has_tag(tange_match(p, k), FamilyTag::Tange, row));
    }
  }
  CHECK(enumerate_family(FamilyTag::TangeSporadic, 0, 2000) ==
        std::vector<std::pair<std::int64_t, std::int64_t>>{{191, 15}});
}

TEST_CASE("enumeration pinned members") {
  const auto ix = enumerate_family(FamilyTag::BergeIX, 0, 40);
  CHECK(std::count(ix.begin(), ix.end(), std::pair<std::int64_t, std::int64_t>{32, 13}) == 1);
  CHECK(std::count(ix.begin(), ix.end(), std::pair<std::int64_t, std::int64_t>{14, 5}) == 1);

  const auto t1 = enumerate_family(FamilyTag::Tange, 1, 60);
  CHECK(t1 == std::vector<std::pair<std::int64_t, std::int64_t>>{{8, 3}, {22, 9}, {43, 31}});
  const auto t1pos = enumerate_family(FamilyTag::Tange, 1, 60, {false});
  CHECK(t1pos == std::vector<std::pair<std::int64_t, std::int64_t>>{{22, 9}});

  CHECK(enumerate_family(FamilyTag::BergeIX, 0, 1).empty());
  CHECK_THROWS_AS(enumerate_family(FamilyTag::Tange, 0, 100), InvalidInput);
  CHECK_THROWS_AS(enumerate_family(FamilyTag::Tange, 20, 100), InvalidInput);
}

TEST_CASE("classify") {
  const ClassifyReport tref = classify(7, 2);
  CHECK(tref.q == 4);
  CHECK(tref.width == 8);
  CHECK(tref.lspace);
  CHECK(tref.genus == 1);
  CHECK(has_tag(tref.matches, FamilyTag::BergeVII));
  CHECK(tref.agree);

  const ClassifyReport spor = classify(191, 15);
  CHECK(spor.width == 380);
  CHECK(spor.lspace);
  CHECK(has_tag(spor.matches, FamilyTag::TangeSporadic));
  CHECK(spor.agree);

  const ClassifyReport t1 = classify(22, 9);
  CHECK(t1.width == 43);
  CHECK(t1.lspace);
  CHECK(has_tag(t1.matches, FamilyTag::Tange, 1));
  CHECK(t1.agree);

  // no family and no L-space surgery: agreement of the negative kind
  const ClassifyReport none = classify(10, 3);
  CHECK(none.width == 21);
  CHECK_FALSE(none.lspace);
  CHECK(none.matches.empty());
  CHECK(none.agree);
}

TEST_CASE("tag names parse back") {
  const FamilyTag tags[] = {FamilyTag::BergeI_II, FamilyTag::BergeIII,  FamilyTag::BergeIV,
                            FamilyTag::BergeV,    FamilyTag::BergeVII,  FamilyTag::BergeVIII,
                            FamilyTag::BergeIX,   FamilyTag::BergeX,    FamilyTag::TangeSporadic};
  for (FamilyTag t : tags) {
    const auto parsed = parse_family_tag(family_tag_name(t));
    REQUIRE(parsed.has_value());
    CHECK(parsed->first == t);
  }
  CHECK(parse_family_tag("tange-7")->second == 7);
  CHECK_FALSE(parse_family_tag("tange-0").has_value());
  CHECK_FALSE(parse_family_tag("tange-20").has_value());
  CHECK_FALSE(parse_family_tag("bogus").has_value());
  CHECK(!family_tables_json().empty());
}
