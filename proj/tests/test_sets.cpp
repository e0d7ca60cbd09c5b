// Condition and Relation algebra over small universes. Every concrete
// expectation below was computed by hand from the definitions before the
// implementation existed; the exhaustive sections then sweep all values at
// |S| = 2 so no case is left to chance.
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "tp/tp.hpp"

using namespace tp;

namespace {

const StateSpace& three() {
  static StateSpace s("S", {"s0", "s1", "s2"});
  return s;
}

const StateSpace& two() {
  static StateSpace s("T", {"t0", "t1"});
  return s;
}

Condition cond(std::initializer_list<std::string> atoms) {
  return Condition::of(&three(), atoms);
}

Relation rel(const std::vector<std::pair<std::string, std::string>>& pairs) {
  return Relation::from_pairs(&three(), pairs);
}

// All 16 relations over the 2-atom universe, by row mask.
std::vector<Relation> all_two_relations() {
  std::vector<Relation> out;
  for (uint64_t mask = 0; mask < relation_count(2); ++mask)
    out.push_back(relation_at(&two(), mask));
  return out;
}

}  // namespace

TEST_CASE("state space construction and lookup") {
  CHECK(three().size() == 3);
  CHECK(three().index("s2") == 2);
  CHECK(three().has("s1"));
  CHECK_FALSE(three().has("zz"));
  CHECK_THROWS_AS(three().index("zz"), ModelError);
  CHECK_THROWS_AS(StateSpace("bad", {}), ModelError);
  CHECK_THROWS_AS(StateSpace("bad", {"a", "a"}), ModelError);
  CHECK_THROWS_AS(StateSpace("big", std::vector<std::string>(17, "x")), ModelError);
}

TEST_CASE("condition algebra oracles") {
  const Condition ab = cond({"s0", "s1"});
  CHECK(to_text(ab) == "{s0,s1}");
  CHECK(to_text(cond_not(ab)) == "{s2}");
  CHECK(cond_not(ab).count() == 1);
  CHECK(cond_and(ab, cond({"s1", "s2"})) == cond({"s1"}));
  CHECK(cond_or(ab, cond({"s2"})) == Condition::full(&three()));
  CHECK(cond_diff(ab, cond({"s1"})) == cond({"s0"}));
  CHECK(cond_implies(cond({"s1"}), ab));
  CHECK_FALSE(cond_implies(ab, cond({"s1"})));
  CHECK(cond_disjoint(cond({"s0"}), cond({"s2"})));
  CHECK(Condition::empty(&three()).is_empty());
  CHECK(Condition::full(&three()).is_full());
  CHECK(to_text(Condition::empty(&three())) == "{}");
}

TEST_CASE("condition De Morgan laws, exhaustively at three atoms") {
  for (uint32_t a = 0; a < 8; ++a)
    for (uint32_t b = 0; b < 8; ++b) {
      const Condition ca(&three(), a), cb(&three(), b);
      CHECK(cond_not(cond_or(ca, cb)) == cond_and(cond_not(ca), cond_not(cb)));
      CHECK(cond_not(cond_and(ca, cb)) == cond_or(cond_not(ca), cond_not(cb)));
      CHECK(cond_diff(ca, cb) == cond_and(ca, cond_not(cb)));
    }
}

TEST_CASE("mixing state spaces is a hard error") {
  const Condition a = Condition::full(&three());
  const Condition b = Condition::full(&two());
  CHECK_THROWS_AS(cond_and(a, b), ModelError);
  CHECK_THROWS_AS(rel_union(Relation::identity(&three()), Relation::identity(&two())),
                  ModelError);
}

TEST_CASE("relation oracles: image, preimage, domain, range") {
  const Relation r = rel({{"s0", "s1"}, {"s0", "s2"}, {"s1", "s2"}});
  CHECK(r.count() == 3);
  CHECK(to_text(r) == "{(s0,s1),(s0,s2),(s1,s2)}");
  CHECK(image(r, cond({"s0"})) == cond({"s1", "s2"}));
  CHECK(image(r, cond({"s2"})) == Condition::empty(&three()));
  CHECK(preimage(r, cond({"s2"})) == cond({"s0", "s1"}));
  CHECK(rel_dom(r) == cond({"s0", "s1"}));
  CHECK(rel_range(r) == cond({"s1", "s2"}));
  CHECK(rel_dom(r) == preimage(r, Condition::full(&three())));
  CHECK(rel_range(r) == image(r, Condition::full(&three())));
}

TEST_CASE("relation oracles: composition, restriction, corestriction") {
  const Relation r = rel({{"s1", "s1"}, {"s1", "s2"}});
  const Relation s = rel({{"s1", "s1"}, {"s2", "s2"}});
  CHECK(rel_compose(r, s) == rel({{"s1", "s1"}, {"s1", "s2"}}));
  CHECK(rel_compose(s, r) == rel({{"s1", "s1"}, {"s1", "s2"}}));
  CHECK(rel_restrict(r, cond({"s1"})) == r);
  CHECK(rel_restrict(r, cond({"s0", "s2"})).is_empty());
  CHECK(rel_corestrict(r, cond({"s1"})) == rel({{"s1", "s1"}}));
  CHECK(rel_corestrict(r, cond({"s0"})).is_empty());
  CHECK(rel_compose(Relation::identity(&three()), r) == r);
  CHECK(rel_compose(r, Relation::identity(&three())) == r);
}

TEST_CASE("image after preimage contains the reachable part of the goal") {
  // The containment image(r, preimage(r, C)) ⊇ C ∩ range(r) always holds;
  // equality can fail in both directions, as the two concrete cases show.
  const Relation r1 = rel({{"s0", "s1"}});
  CHECK(image(r1, preimage(r1, cond({"s1", "s2"}))) == cond({"s1"}));
  const Relation r2 = rel({{"s0", "s1"}, {"s0", "s2"}});
  CHECK(image(r2, preimage(r2, cond({"s1"}))) == cond({"s1", "s2"}));
  for (uint64_t mask = 0; mask < relation_count(2); ++mask) {
    const Relation r = relation_at(&two(), mask);
    for (uint32_t c = 0; c < 4; ++c) {
      const Condition goal(&two(), c);
      const Condition round_trip = image(r, preimage(r, goal));
      CHECK(cond_implies(cond_and(goal, rel_range(r)), round_trip));
    }
  }
}

TEST_CASE("relation composition is associative, exhaustively at two atoms") {
  const auto rs = all_two_relations();
  for (const Relation& a : rs)
    for (const Relation& b : rs)
      for (const Relation& c : rs)
        CHECK(rel_compose(rel_compose(a, b), c) == rel_compose(a, rel_compose(b, c)));
}

TEST_CASE("composition distributes over union but only half-distributes over intersection") {
  const auto rs = all_two_relations();
  for (const Relation& a : rs)
    for (const Relation& b : rs)
      for (const Relation& c : rs) {
        CHECK(rel_compose(a, rel_union(b, c)) ==
              rel_union(rel_compose(a, b), rel_compose(a, c)));
        const Relation lhs = rel_compose(a, rel_inter(b, c));
        const Relation rhs = rel_inter(rel_compose(a, b), rel_compose(a, c));
        CHECK(rel_union(lhs, rhs) == rhs);  // lhs ⊆ rhs
      }
}

TEST_CASE("function and totality predicates") {
  CHECK(is_function(Relation::identity(&three())));
  CHECK(is_total_relation(Relation::identity(&three())));
  CHECK_FALSE(is_function(Relation::full(&three())));
  CHECK(is_total_relation(Relation::full(&three())));
  CHECK(is_function(Relation::empty(&three())));
  CHECK_FALSE(is_total_relation(Relation::empty(&three())));
  CHECK_FALSE(is_total_relation(rel({{"s0", "s1"}})));
}

TEST_CASE("well-foundedness oracles") {
  CHECK(is_well_founded(Relation::empty(&three())));
  CHECK(is_well_founded(rel({{"s1", "s0"}, {"s2", "s1"}})));   // strictly decreasing
  CHECK(is_well_founded(rel({{"s1", "s0"}, {"s2", "s1"}, {"s2", "s0"}})));
  CHECK_FALSE(is_well_founded(rel({{"s0", "s1"}, {"s1", "s0"}})));  // 2-cycle
  CHECK_FALSE(is_well_founded(rel({{"s1", "s1"}})));                // self-loop
  CHECK_FALSE(is_well_founded(Relation::identity(&three())));
  CHECK_FALSE(is_well_founded(Relation::full(&three())));
}

TEST_CASE("canonical text is sorted and stable") {
  CHECK(to_text(rel({{"s1", "s2"}, {"s0", "s1"}})) == "{(s0,s1),(s1,s2)}");
  CHECK(to_text(Relation::empty(&three())) == "{}");
  CHECK(to_text(Condition::of(&three(), {"s2", "s0"})) == "{s0,s2}");
}
