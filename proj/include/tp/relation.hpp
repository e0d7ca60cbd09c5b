#ifndef TP_RELATION_HPP
#define TP_RELATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tp/condition.hpp"

namespace tp {

// A binary relation on a state space. Row i is the 16-bit successor mask
// of atom i, so the whole relation is 32 bytes and every algebra operation
// is a short loop of word operations.
class Relation {
 public:
  explicit Relation(const StateSpace* space) : space_(space), rows_{} {
    if (!space) throw ModelError("relation needs a state space");
  }

  static Relation empty(const StateSpace* space) { return Relation(space); }

  static Relation identity(const StateSpace* space) {
    Relation r(space);
    for (int i = 0; i < space->size(); ++i) r.rows_[static_cast<size_t>(i)] = static_cast<uint16_t>(1u << i);
    return r;
  }

  static Relation full(const StateSpace* space) {
    Relation r(space);
    const auto m = static_cast<uint16_t>(Condition::full_mask(space));
    for (int i = 0; i < space->size(); ++i) r.rows_[static_cast<size_t>(i)] = m;
    return r;
  }

  static Relation from_pairs(const StateSpace* space,
                             const std::vector<std::pair<std::string, std::string>>& pairs) {
    Relation r(space);
    for (const auto& [a, b] : pairs) r.rows_[static_cast<size_t>(space->index(a))] |= static_cast<uint16_t>(1u << space->index(b));
    return r;
  }

  const StateSpace* space() const { return space_; }
  uint16_t row(int i) const { return rows_[static_cast<size_t>(i)]; }
  bool contains(int i, int j) const { return (rows_[static_cast<size_t>(i)] >> j) & 1u; }
  bool contains(const std::string& a, const std::string& b) const {
    return contains(space_->index(a), space_->index(b));
  }

  // Functional update; relations stay value-like.
  Relation with(int i, int j) const {
    Relation r = *this;
    r.rows_[static_cast<size_t>(i)] |= static_cast<uint16_t>(1u << j);
    return r;
  }
  Relation with_row(int i, uint16_t row) const {
    Relation r = *this;
    r.rows_[static_cast<size_t>(i)] = static_cast<uint16_t>(row & Condition::full_mask(space_));
    return r;
  }

  bool is_empty() const {
    for (int i = 0; i < space_->size(); ++i)
      if (rows_[static_cast<size_t>(i)]) return false;
    return true;
  }

  int count() const {
    int n = 0;
    for (int i = 0; i < space_->size(); ++i) n += std::popcount(static_cast<unsigned>(rows_[static_cast<size_t>(i)]));
    return n;
  }

  std::vector<std::pair<std::string, std::string>> pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < space_->size(); ++i)
      for (int j = 0; j < space_->size(); ++j)
        if (contains(i, j)) out.emplace_back(space_->atom(i), space_->atom(j));
    return out;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.space_ == b.space_ && a.rows_ == b.rows_;
  }

 private:
  const StateSpace* space_;
  std::array<uint16_t, kMaxAtoms> rows_;
};

inline Relation rel_union(const Relation& r, const Relation& s) {
  require_same_space(r.space(), s.space(), "rel_union");
  Relation out(r.space());
  for (int i = 0; i < r.space()->size(); ++i) out = out.with_row(i, static_cast<uint16_t>(r.row(i) | s.row(i)));
  return out;
}

inline Relation rel_inter(const Relation& r, const Relation& s) {
  require_same_space(r.space(), s.space(), "rel_inter");
  Relation out(r.space());
  for (int i = 0; i < r.space()->size(); ++i) out = out.with_row(i, static_cast<uint16_t>(r.row(i) & s.row(i)));
  return out;
}

inline Relation rel_diff(const Relation& r, const Relation& s) {
  require_same_space(r.space(), s.space(), "rel_diff");
  Relation out(r.space());
  for (int i = 0; i < r.space()->size(); ++i) out = out.with_row(i, static_cast<uint16_t>(r.row(i) & ~s.row(i)));
  return out;
}

// Forward relational composition: (i,k) when (i,j) in r and (j,k) in s.
inline Relation rel_compose(const Relation& r, const Relation& s) {
  require_same_space(r.space(), s.space(), "rel_compose");
  Relation out(r.space());
  const int n = r.space()->size();
  for (int i = 0; i < n; ++i) {
    uint32_t mids = r.row(i);
    uint16_t acc = 0;
    while (mids) {
      const int j = std::countr_zero(mids);
      mids &= mids - 1;
      acc |= s.row(j);
    }
    out = out.with_row(i, acc);
  }
  return out;
}

// Domain restriction: keep pairs whose source lies in c.
inline Relation rel_restrict(const Relation& r, const Condition& c) {
  require_same_space(r.space(), c.space(), "rel_restrict");
  Relation out(r.space());
  for (int i = 0; i < r.space()->size(); ++i)
    if (c.contains(i)) out = out.with_row(i, r.row(i));
  return out;
}

// Range restriction: keep pairs whose target lies in c.
inline Relation rel_corestrict(const Relation& r, const Condition& c) {
  require_same_space(r.space(), c.space(), "rel_corestrict");
  Relation out(r.space());
  for (int i = 0; i < r.space()->size(); ++i)
    out = out.with_row(i, static_cast<uint16_t>(r.row(i) & c.bits()));
  return out;
}

inline Condition rel_dom(const Relation& r) {
  uint32_t bits = 0;
  for (int i = 0; i < r.space()->size(); ++i)
    if (r.row(i)) bits |= 1u << i;
  return Condition(r.space(), bits);
}

inline Condition rel_range(const Relation& r) {
  uint32_t bits = 0;
  for (int i = 0; i < r.space()->size(); ++i) bits |= r.row(i);
  return Condition(r.space(), bits);
}

// Image of c under r: all targets reachable from a source in c.
inline Condition image(const Relation& r, const Condition& c) {
  require_same_space(r.space(), c.space(), "image");
  uint32_t bits = 0;
  for (int i = 0; i < r.space()->size(); ++i)
    if (c.contains(i)) bits |= r.row(i);
  return Condition(r.space(), bits);
}

// Preimage of c under r: all sources with at least one target in c.
inline Condition preimage(const Relation& r, const Condition& c) {
  require_same_space(r.space(), c.space(), "preimage");
  uint32_t bits = 0;
  for (int i = 0; i < r.space()->size(); ++i)
    if (r.row(i) & c.bits()) bits |= 1u << i;
  return Condition(r.space(), bits);
}

// At most one target per source.
inline bool is_function(const Relation& r) {
  for (int i = 0; i < r.space()->size(); ++i)
    if (std::popcount(static_cast<unsigned>(r.row(i))) > 1) return false;
  return true;
}

// At least one target per source (the relation's domain is the space).
inline bool is_total_relation(const Relation& r) {
  for (int i = 0; i < r.space()->size(); ++i)
    if (!r.row(i)) return false;
  return true;
}

// No infinite descending chain; on a finite space, no cycle. Decided by
// repeatedly discarding atoms with no successor among the survivors.
inline bool is_well_founded(const Relation& r) {
  uint32_t alive = Condition::full_mask(r.space());
  bool changed = true;
  while (changed) {
    changed = false;
    uint32_t rest = alive;
    while (rest) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      if ((r.row(i) & alive) == 0) {
        alive &= ~(1u << i);
        changed = true;
      }
    }
  }
  return alive == 0;
}

}  // namespace tp

#endif
