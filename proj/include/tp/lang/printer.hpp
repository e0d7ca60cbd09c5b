#ifndef TP_LANG_PRINTER_HPP
#define TP_LANG_PRINTER_HPP

#include <string>

#include "tp/lang/elaborate.hpp"

namespace tp::lang {

// Canonical form: the universe first (atom order preserved — it fixes the
// state indexing), then every binding in declaration order, each value
// rendered with sorted members/pairs. Directives are not bindings and are
// not reprinted. Re-parsing the output reproduces the model exactly.
inline std::string print_model(const Model& model) {
  std::string out = "universe " + model.space->name() + " = {";
  const auto& atoms = model.space->atoms();
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ",";
    out += atoms[i];
  }
  out += "}\n";
  for (const auto& ref : model.order) {
    switch (ref.kind) {
      case Item::Kind::CondBind:
        out += "condition " + ref.name + " = " + to_text(model.conds.at(ref.name)) + "\n";
        break;
      case Item::Kind::RelBind:
        out += "relation " + ref.name + " = " + to_text(model.rels.at(ref.name)) + "\n";
        break;
      case Item::Kind::ProgBind:
        out += "program " + ref.name + " = " + to_text(model.progs.at(ref.name).prog) + "\n";
        break;
      default: break;
    }
  }
  return out;
}

}  // namespace tp::lang

#endif
