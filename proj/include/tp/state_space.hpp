#ifndef TP_STATE_SPACE_HPP
#define TP_STATE_SPACE_HPP

#include <string>
#include <vector>

#include "tp/base.hpp"

namespace tp {

// A named finite universe of atoms. Immutable once built. Conditions,
// relations and programs hold a pointer to their space, and binary
// operations require the *same object*: two spaces that merely list the
// same atoms are still distinct universes (refinement checks are the one
// deliberate exception and compare atoms by name).
class StateSpace {
 public:
  StateSpace(std::string name, std::vector<std::string> atoms)
      : name_(std::move(name)), atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ModelError("state space '" + name_ + "' has no atoms");
    if (static_cast<int>(atoms_.size()) > kMaxAtoms)
      throw ModelError("state space '" + name_ + "' exceeds " + std::to_string(kMaxAtoms) + " atoms");
    for (size_t i = 0; i < atoms_.size(); ++i)
      for (size_t j = i + 1; j < atoms_.size(); ++j)
        if (atoms_[i] == atoms_[j])
          throw ModelError("state space '" + name_ + "' repeats atom '" + atoms_[i] + "'");
  }

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  const std::string& atom(int i) const {
    if (i < 0 || i >= size()) throw ModelError("atom index out of range");
    return atoms_[static_cast<size_t>(i)];
  }

  bool has(const std::string& atom) const {
    for (const auto& a : atoms_)
      if (a == atom) return true;
    return false;
  }

  int index(const std::string& atom) const {
    for (int i = 0; i < size(); ++i)
      if (atoms_[static_cast<size_t>(i)] == atom) return i;
    throw ModelError("atom '" + atom + "' not in state space '" + name_ + "'");
  }

 private:
  std::string name_;
  std::vector<std::string> atoms_;
};

inline void require_same_space(const StateSpace* a, const StateSpace* b, const char* op) {
  if (a != b)
    throw ModelError(std::string(op) + ": operands live in different state spaces ('" +
                     (a ? a->name() : "?") + "' vs '" + (b ? b->name() : "?") + "')");
}

}  // namespace tp

#endif
