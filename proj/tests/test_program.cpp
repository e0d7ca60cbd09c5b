// Programs as <post, Pre> pairs and their operator algebra. The concrete
// cases were worked out on paper from the definitions; the exhaustive
// sections sweep every program over a 2-atom universe (64 of them) so the
// operator identities hold with no sampling gap.
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

Program prog(const std::vector<std::pair<std::string, std::string>>& post,
             std::initializer_list<std::string> pre) {
  return make_program(&three(), Relation::from_pairs(&three(), post),
                      Condition::of(&three(), pre));
}

std::vector<Program> all_two_programs() {
  std::vector<Program> out;
  for (uint64_t idx = 0; idx < program_count(2); ++idx) out.push_back(program_at(&two(), idx));
  return out;
}

std::vector<Condition> all_two_conditions() {
  std::vector<Condition> out;
  for (uint32_t bits = 0; bits < 4; ++bits) out.emplace_back(&two(), bits);
  return out;
}

}  // namespace

TEST_CASE("special programs and canonical text") {
  CHECK(to_text(skip_program(&two())) == "<{(t0,t0),(t1,t1)},{t0,t1}>");
  CHECK(to_text(fail_program(&two())) == "<{},{}>");
  CHECK(to_text(havoc_program(&two())) == "<{(t0,t0),(t0,t1),(t1,t0),(t1,t1)},{t0,t1}>");
  CHECK(skip_program(&three()) == special(SpecialKind::Skip, &three()));
  CHECK(fail_program(&three()) == special(SpecialKind::Fail, &three()));
  CHECK(havoc_program(&three()) == special(SpecialKind::Havoc, &three()));
}

TEST_CASE("feasibility, normality, equivalence") {
  const Program ok = prog({{"s0", "s1"}}, {"s0"});
  CHECK(is_feasible(ok));
  CHECK(is_normal(ok));
  const Program starving = prog({{"s0", "s1"}}, {"s0", "s1"});
  CHECK_FALSE(is_feasible(starving));
  CHECK(infeasibility_witness(starving) == Condition::of(&three(), {"s1"}));
  const Program junky = prog({{"s0", "s1"}, {"s2", "s0"}}, {"s0"});
  CHECK_FALSE(is_normal(junky));
  CHECK(is_normal(normalize(junky)));
  CHECK(normalize(junky) == ok);
  CHECK(equivalent(junky, ok));
  CHECK(equivalent(junky, prog({{"s0", "s1"}, {"s2", "s2"}}, {"s0"})));
  CHECK_FALSE(equivalent(ok, prog({{"s0", "s1"}}, {"s0", "s1"})));
  CHECK_FALSE(equivalent(ok, prog({{"s0", "s2"}}, {"s0"})));
}

TEST_CASE("composition oracle") {
  const Program p1 = prog({{"s0", "s1"}, {"s1", "s2"}}, {"s0", "s1"});
  const Program p2 = prog({{"s1", "s1"}}, {"s1"});
  CHECK(seq(p1, p2) == prog({{"s0", "s1"}}, {"s0"}));
  CHECK(seq(p2, p1) == prog({{"s1", "s2"}}, {"s1"}));
  // The middle state must be licensed by the second precondition: junk the
  // second program leaves outside its precondition cannot be stepped into.
  const Program junky2 = prog({{"s1", "s1"}, {"s2", "s0"}}, {"s1"});
  CHECK(seq(p1, junky2) == prog({{"s0", "s1"}}, {"s0"}));
}

TEST_CASE("choice oracles") {
  const Program p1 = prog({{"s0", "s1"}, {"s1", "s2"}}, {"s0", "s1"});
  const Program p2 = prog({{"s1", "s1"}}, {"s1"});
  CHECK(choice(p1, p2) == prog({{"s0", "s1"}, {"s1", "s1"}, {"s1", "s2"}}, {"s0", "s1"}));
  CHECK(internal_choice(p1, p2) ==
        prog({{"s0", "s1"}, {"s1", "s1"}, {"s1", "s2"}}, {"s1"}));
}

TEST_CASE("restriction and corestriction oracles") {
  const Program p1 = prog({{"s0", "s1"}, {"s1", "s2"}}, {"s0", "s1"});
  CHECK(restrict(Condition::of(&three(), {"s1"}), p1) == prog({{"s1", "s2"}}, {"s1"}));
  CHECK(restrict(Condition::empty(&three()), p1) == fail_program(&three()));
  CHECK(corestrict(p1, Condition::of(&three(), {"s2"})) == prog({{"s1", "s2"}}, {"s1"}));
  CHECK(corestrict(p1, Condition::empty(&three())) == fail_program(&three()));
  // Corestriction never leaves an initial state without a way in: it is
  // feasible for every operand, restriction preserves normality.
  for (const Program& p : all_two_programs())
    for (const Condition& c : all_two_conditions()) {
      CHECK(is_feasible(corestrict(p, c)));
      if (is_normal(p)) CHECK(is_normal(restrict(c, p)));
    }
}

TEST_CASE("concurrency oracles") {
  const Program p1 = prog({{"s0", "s1"}, {"s1", "s2"}}, {"s0", "s1"});
  const Program p2 = prog({{"s1", "s1"}}, {"s1"});
  CHECK(atomic_concurrency(p1, p2) == choice(seq(p1, p2), seq(p2, p1)));
  CHECK(atomic_concurrency(p1, p2) == prog({{"s0", "s1"}, {"s1", "s2"}}, {"s0", "s1"}));

  const std::vector<Program> steps{p1, p2};
  CHECK(nonatomic_concurrency(steps, p2) ==
        choice(seq(atomic_concurrency(p1, p2), p2), seq(p1, atomic_concurrency(p2, p2))));
  CHECK_THROWS_AS(nonatomic_concurrency(std::vector<Program>{p1}, p2), ModelError);

  // Three steps expand by recursion on the left.
  const std::vector<Program> abc{p1, p2, p1};
  const std::vector<Program> bc{p2, p1};
  CHECK(nonatomic_concurrency(abc, p2) ==
        choice(seq(atomic_concurrency(p1, p2), seq(p2, p1)),
               seq(p1, nonatomic_concurrency(bc, p2))));
}

TEST_CASE("guarded conditional and if-then-else") {
  const Program up = prog({{"s0", "s1"}, {"s1", "s2"}, {"s2", "s2"}}, {"s0", "s1", "s2"});
  const Program stay = skip_program(&three());
  const Condition low = Condition::of(&three(), {"s0", "s1"});
  CHECK(if_then_else(low, up, stay) ==
        prog({{"s0", "s1"}, {"s1", "s2"}, {"s2", "s2"}}, {"s0", "s1", "s2"}));
  const std::vector<std::pair<Condition, Program>> branches{{low, up}, {cond_not(low), stay}};
  CHECK(guarded_conditional(branches) == if_then_else(low, up, stay));
  CHECK_THROWS_AS(guarded_conditional(std::vector<std::pair<Condition, Program>>{}),
                  ModelError);
  // Overlapping guards act like choice on the overlap.
  const std::vector<std::pair<Condition, Program>> overlap{
      {Condition::full(&three()), up}, {low, stay}};
  CHECK(guarded_conditional(overlap) == choice(up, restrict(low, stay)));
}

TEST_CASE("intersection and difference are componentwise") {
  const Program wide = prog({{"s0", "s1"}, {"s0", "s2"}}, {"s0"});
  const Program narrow = prog({{"s0", "s1"}}, {"s0"});
  CHECK(program_intersection(wide, narrow) == narrow);
  CHECK(program_difference(wide, narrow) == prog({{"s0", "s2"}}, {"s0"}));
  // Intersection can starve a shared initial state: both operands can move
  // from s0, the intersection cannot.
  const Program left = prog({{"s0", "s1"}}, {"s0"});
  const Program right = prog({{"s0", "s2"}}, {"s0"});
  CHECK(is_feasible(left));
  CHECK(is_feasible(right));
  CHECK_FALSE(is_feasible(program_intersection(left, right)));
}

TEST_CASE("refinement oracles") {
  const Program p = prog({{"s0", "s1"}, {"s0", "s2"}}, {"s0"});
  const Program q = prog({{"s0", "s1"}, {"s1", "s1"}}, {"s0", "s1"});
  CHECK(refines(q, p));       // larger pre, fewer outcomes inside p's pre
  CHECK_FALSE(refines(p, q)); // p does not cover q's precondition
  CHECK(refines(skip_program(&three()), havoc_program(&three())));
  CHECK_FALSE(refines(havoc_program(&three()), skip_program(&three())));
  CHECK(refines(p, p));
  // Junk outside p's precondition does not matter on either side: the
  // behavior containment is evaluated inside Pre_p only.
  const Program junky = prog({{"s0", "s1"}, {"s0", "s2"}, {"s1", "s0"}}, {"s0"});
  CHECK(refines(q, junky));
  CHECK(refines(junky, p));
  // An extra outcome inside Pre_p, though, breaks refinement.
  CHECK_FALSE(refines(prog({{"s0", "s0"}}, {"s0"}), p));
}

TEST_CASE("refinement across state spaces compares atoms by name") {
  static StateSpace small("U", {"s0", "s1"});
  static StateSpace large("V", {"s0", "s1", "s2"});
  const Program p = make_program(&small, Relation::identity(&small), Condition::full(&small));
  const Program q = make_program(&large, Relation::identity(&large), Condition::full(&large));
  CHECK(refines(q, p));        // V extends U and agrees on U's atoms
  CHECK_FALSE(refines(p, q));  // U lacks s2
}

TEST_CASE("commuting oracles") {
  const Program h2 = havoc_program(&two());
  CHECK(commutes(h2, h2));
  CHECK(commutes(skip_program(&two()), h2));
  const Program c0 =
      make_program(&two(), Relation::from_pairs(&two(), {{"t0", "t0"}, {"t1", "t0"}}),
                   Condition::full(&two()));
  const Program c1 =
      make_program(&two(), Relation::from_pairs(&two(), {{"t0", "t1"}, {"t1", "t1"}}),
                   Condition::full(&two()));
  CHECK(seq(c0, c1) == c1);
  CHECK(seq(c1, c0) == c0);
  CHECK_FALSE(commutes(c0, c1));  // total constants overwrite each other
  CHECK_FALSE(commutes(c0, h2));
  CHECK(refines(c0, h2));
  CHECK(refines(c1, h2));
}

TEST_CASE("restriction slides through concurrency on the initial side") {
  // C:(p1||p2) = ((C:p1);p2) u ((C:p2);p1), exactly, for all operands.
  const auto programs = all_two_programs();
  for (const Program& p1 : programs)
    for (const Program& p2 : programs)
      for (const Condition& c : all_two_conditions())
        CHECK(restrict(c, atomic_concurrency(p1, p2)) ==
              choice(seq(restrict(c, p1), p2), seq(restrict(c, p2), p1)));
}

TEST_CASE("corestriction slides through concurrency for canonical operands") {
  // (p1||p2)\C = (p1;(p2\C)) u (p2;(p1\C)) needs canonical operands: a
  // non-canonical operand can reach C through pairs its precondition never
  // licenses, which the right-hand side correctly refuses to count.
  const auto programs = all_two_programs();
  std::vector<Program> normal;
  for (const Program& p : programs)
    if (is_normal(p)) normal.push_back(p);
  CHECK(normal.size() == 25);
  for (const Program& p1 : normal)
    for (const Program& p2 : normal)
      for (const Condition& c : all_two_conditions())
        CHECK(corestrict(atomic_concurrency(p1, p2), c) ==
              choice(seq(p1, corestrict(p2, c)), seq(p2, corestrict(p1, c))));
}

TEST_CASE("classification oracles") {
  CHECK(to_text(classify_program(skip_program(&three()))) == "deterministic,total");
  CHECK(to_text(classify_program(fail_program(&three()))) ==
        "deterministic,functional_literal,markovian");
  CHECK(to_text(classify_program(havoc_program(&three()))) == "total,markovian");
  const Program mixed = prog({{"s0", "s1"}, {"s0", "s2"}, {"s1", "s0"}}, {"s0"});
  CHECK(to_text(classify_program(mixed)) == "none");
  // The literal universally-quantified reading of "functional" admits only
  // the empty postcondition: any pair (x,y) is already defeated by c={x,y}.
  for (const Program& p : all_two_programs())
    CHECK(is_functional_literal(p) == p.post().is_empty());
}

TEST_CASE("state classification oracles") {
  const Program h = havoc_program(&three());
  CHECK(classify_state(h, "s0") == StateKind::Trivial);
  CHECK(classify_state(fail_program(&three()), "s1") == StateKind::IrrelevantNontrivial);
  const Program p = prog({{"s0", "s1"}}, {"s0"});
  CHECK(classify_state(p, "s0") == StateKind::Relevant);
  CHECK(classify_state(p, "s1") == StateKind::IrrelevantNontrivial);
  CHECK(to_text(StateKind::Trivial) == "trivial");
  CHECK(to_text(StateKind::IrrelevantNontrivial) == "irrelevant-nontrivial");
  CHECK(to_text(StateKind::Relevant) == "relevant");
  CHECK_THROWS_AS(classify_state(p, 7), ModelError);
}

TEST_CASE("domain and range helpers") {
  const Program p = prog({{"s0", "s1"}, {"s2", "s0"}}, {"s0"});
  CHECK(program_dom(p) == Condition::of(&three(), {"s0", "s2"}));
  CHECK(program_range(p) == Condition::of(&three(), {"s1"}));  // range is pre-relative
}
