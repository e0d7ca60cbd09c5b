#ifndef TP_CONDITION_HPP
#define TP_CONDITION_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tp/state_space.hpp"

namespace tp {

// A subset of a state space, i.e. a condition. Bit i stands for atom i.
class Condition {
 public:
  Condition(const StateSpace* space, uint32_t bits) : space_(space), bits_(bits & full_mask(space)) {
    if (!space) throw ModelError("condition needs a state space");
  }

  static uint32_t full_mask(const StateSpace* space) {
    return (1u << space->size()) - 1u;
  }
  static Condition empty(const StateSpace* space) { return Condition(space, 0); }
  static Condition full(const StateSpace* space) { return Condition(space, full_mask(space)); }

  static Condition of(const StateSpace* space, const std::vector<std::string>& atoms) {
    uint32_t bits = 0;
    for (const auto& a : atoms) bits |= 1u << space->index(a);
    return Condition(space, bits);
  }
  static Condition of(const StateSpace* space, std::initializer_list<std::string> atoms) {
    return of(space, std::vector<std::string>(atoms));
  }

  const StateSpace* space() const { return space_; }
  uint32_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool contains(const std::string& atom) const { return contains(space_->index(atom)); }
  int count() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(space_); }

  std::vector<std::string> members() const {
    std::vector<std::string> out;
    for (int i = 0; i < space_->size(); ++i)
      if (contains(i)) out.push_back(space_->atom(i));
    return out;
  }

  friend bool operator==(const Condition& a, const Condition& b) {
    return a.space_ == b.space_ && a.bits_ == b.bits_;
  }

 private:
  const StateSpace* space_;
  uint32_t bits_;
};

inline Condition cond_and(const Condition& a, const Condition& b) {
  require_same_space(a.space(), b.space(), "cond_and");
  return Condition(a.space(), a.bits() & b.bits());
}

inline Condition cond_or(const Condition& a, const Condition& b) {
  require_same_space(a.space(), b.space(), "cond_or");
  return Condition(a.space(), a.bits() | b.bits());
}

inline Condition cond_not(const Condition& a) {
  return Condition(a.space(), ~a.bits());
}

inline Condition cond_diff(const Condition& a, const Condition& b) {
  require_same_space(a.space(), b.space(), "cond_diff");
  return Condition(a.space(), a.bits() & ~b.bits());
}

// Set inclusion, i.e. the implication test a => b.
inline bool cond_implies(const Condition& a, const Condition& b) {
  require_same_space(a.space(), b.space(), "cond_implies");
  return (a.bits() & ~b.bits()) == 0;
}

inline bool cond_disjoint(const Condition& a, const Condition& b) {
  require_same_space(a.space(), b.space(), "cond_disjoint");
  return (a.bits() & b.bits()) == 0;
}

}  // namespace tp

#endif
