#ifndef TP_GENERATE_HPP
#define TP_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tp/program.hpp"

namespace tp {

// Number of programs over an n-atom space: 2^(n²) relations × 2^n
// preconditions. Only defined where the count fits comfortably in 64 bits.
inline uint64_t program_count(int n) {
  if (n < 1 || n > 7) throw ModelError("program_count: size " + std::to_string(n) + " not enumerable");
  return uint64_t{1} << (n * n + n);
}

// Deterministic enumeration order: the index splits into a postcondition
// counter (high bits, row-major pair bits) and a precondition mask (low n
// bits). Consecutive indices therefore sweep preconditions first.
inline Program program_at(const StateSpace* space, uint64_t idx) {
  const int n = space->size();
  if (idx >= program_count(n)) throw ModelError("program_at: index out of range");
  const uint32_t pre_mask = static_cast<uint32_t>(idx) & Condition::full_mask(space);
  const uint64_t post_counter = idx >> n;
  Relation post(space);
  const uint32_t row_mask = Condition::full_mask(space);
  for (int i = 0; i < n; ++i)
    post = post.with_row(i, static_cast<uint16_t>((post_counter >> (i * n)) & row_mask));
  return Program(space, post, Condition(space, pre_mask));
}

// Relation from a row-major bit counter (bit i·n+j = pair (i,j)).
inline Relation relation_at(const StateSpace* space, uint64_t mask) {
  const int n = space->size();
  Relation r(space);
  const uint32_t row_mask = Condition::full_mask(space);
  for (int i = 0; i < n; ++i)
    r = r.with_row(i, static_cast<uint16_t>((mask >> (i * n)) & row_mask));
  return r;
}

inline uint64_t relation_count(int n) {
  if (n < 1 || n > 7) throw ModelError("relation_count: size not enumerable");
  return uint64_t{1} << (n * n);
}

// Guard for exhaustive use; larger spaces must go through the random
// generators instead.
inline void ensure_enumerable(const StateSpace* space, int bound) {
  if (space->size() > bound)
    throw ModelError("space '" + space->name() + "' has " + std::to_string(space->size()) +
                     " atoms, above the exhaustive enumeration bound " + std::to_string(bound) +
                     "; use random mode");
}

// All programs over the space, in enumeration order.
class ProgramEnumeration {
 public:
  explicit ProgramEnumeration(const StateSpace* space, int bound = 4) : space_(space) {
    ensure_enumerable(space, bound);
    total_ = program_count(space->size());
  }
  uint64_t size() const { return total_; }
  Program at(uint64_t idx) const { return program_at(space_, idx); }

 private:
  const StateSpace* space_;
  uint64_t total_;
};

// --- seeded random generation ------------------------------------------
// All draws use raw mt19937_64 outputs masked to the needed width, never
// distribution objects, so a seed produces the same values on every
// platform. The draw order below is part of the contract: relation rows
// 0..n-1 first, then the precondition.

inline Condition random_condition(const StateSpace* space, std::mt19937_64& rng) {
  return Condition(space, static_cast<uint32_t>(rng()) & Condition::full_mask(space));
}

inline Relation random_relation(const StateSpace* space, std::mt19937_64& rng) {
  Relation r(space);
  const uint32_t row_mask = Condition::full_mask(space);
  for (int i = 0; i < space->size(); ++i)
    r = r.with_row(i, static_cast<uint16_t>(static_cast<uint32_t>(rng()) & row_mask));
  return r;
}

inline Program random_program(const StateSpace* space, std::mt19937_64& rng) {
  Relation post = random_relation(space, rng);
  Condition pre = random_condition(space, rng);
  return Program(space, post, pre);
}

// Rejection-filtered variants.
inline Program random_feasible_program(const StateSpace* space, std::mt19937_64& rng) {
  for (;;) {
    Program p = random_program(space, rng);
    if (is_feasible(p)) return p;
  }
}

inline Program random_normal_program(const StateSpace* space, std::mt19937_64& rng) {
  for (;;) {
    Program p = random_program(space, rng);
    if (is_normal(p)) return p;
  }
}

inline Program random_feasible_normal_program(const StateSpace* space, std::mt19937_64& rng) {
  for (;;) {
    Program p = random_program(space, rng);
    if (is_feasible(p) && is_normal(p)) return p;
  }
}

// A random refinement of p: wider precondition, outcomes inside p's wherever
// p speaks, anything elsewhere.
inline Program random_refinement(const Program& p, std::mt19937_64& rng) {
  const StateSpace* space = p.space();
  const uint32_t row_mask = Condition::full_mask(space);
  Relation post(space);
  for (int i = 0; i < space->size(); ++i) {
    const uint32_t draw = static_cast<uint32_t>(rng()) & row_mask;
    post = post.with_row(i, static_cast<uint16_t>(p.pre().contains(i) ? (draw & p.post().row(i)) : draw));
  }
  const Condition pre = cond_or(p.pre(), random_condition(space, rng));
  return Program(space, post, pre);
}

// A random implementation of a feasible p: a feasible refinement.
inline Program random_implementation(const Program& p, std::mt19937_64& rng) {
  if (!is_feasible(p)) throw ModelError("random_implementation requires a feasible program");
  const StateSpace* space = p.space();
  const int n = space->size();
  const uint32_t row_mask = Condition::full_mask(space);
  const Condition pre = cond_or(p.pre(), random_condition(space, rng));
  Relation post(space);
  for (int i = 0; i < n; ++i) {
    uint32_t row = static_cast<uint32_t>(rng()) & row_mask;
    if (p.pre().contains(i)) {
      row &= p.post().row(i);
      if (!row) row = 1u << std::countr_zero(static_cast<uint32_t>(p.post().row(i)));
    } else if (pre.contains(i) && !row) {
      row = 1u << (rng() % static_cast<uint64_t>(n));
    }
    post = post.with_row(i, static_cast<uint16_t>(row));
  }
  return Program(space, post, pre);
}

}  // namespace tp

#endif
