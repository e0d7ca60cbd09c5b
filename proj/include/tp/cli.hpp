#ifndef TP_CLI_HPP
#define TP_CLI_HPP

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tp/lang.hpp"
#include "tp/laws.hpp"

namespace tp::cli {

using nlohmann::ordered_json;

struct LawsOptions {
  std::vector<std::string> filter;
  int size = 2;
  std::string mode = "exhaustive";
  uint64_t samples = 1000;
  uint64_t seed = 0;
  std::string format = "text";
};

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string position_text(int line, int col) {
  return std::to_string(line) + ":" + std::to_string(col);
}

// One json-lines object; field order is part of the output contract.
// Wall-clock time is deliberately absent so identical inputs yield
// byte-identical reports.
inline ordered_json report_object(const std::string& id, const std::string& verdict,
                                  uint64_t cases, uint64_t failures,
                                  const std::vector<std::string>& witnesses,
                                  const std::string& position) {
  ordered_json o;
  o["id"] = id;
  o["verdict"] = verdict;
  o["cases"] = cases;
  o["failures"] = failures;
  o["witnesses"] = witnesses;
  o["position"] = position;
  return o;
}

// --- run ----------------------------------------------------------------

inline int cmd_run(const std::vector<std::string>& files, const std::string& format,
                   std::ostream& out) {
  const bool json = format == "json-lines";
  int worst = 0;
  const auto bump = [&worst](int code) {
    if (code > worst) worst = code;
  };
  for (const std::string& file : files) {
    const auto emit_diagnostics = [&](const std::vector<lang::Diagnostic>& diags) {
      for (const auto& d : diags) {
        if (json) {
          ordered_json o = report_object("diagnostic", "error", 0, 0, {lang::to_text(d)},
                                         position_text(d.line, d.col));
          o["file"] = file;
          out << o.dump() << "\n";
        } else {
          out << file << ":" << lang::to_text(d) << "\n";
        }
      }
    };
    const auto text = read_file(file);
    if (!text) {
      emit_diagnostics({{lang::Diagnostic::Severity::Error, 1, 1,
                         "cannot read file '" + file + "'", ""}});
      bump(2);
      continue;
    }
    const lang::ParseResult parsed = lang::parse(*text);
    if (!parsed.diagnostics.empty()) {
      emit_diagnostics(parsed.diagnostics);
      bump(2);
      continue;
    }
    const lang::ElabResult elab = lang::elaborate(parsed.ast);
    if (!elab.ok) {
      emit_diagnostics(elab.diagnostics);
      bump(2);
      continue;
    }
    const std::vector<lang::DirectiveResult> results = lang::run_directives(elab.model);
    uint64_t failed = 0, errors = 0;
    for (const auto& r : results) {
      if (r.verdict == "fail") ++failed;
      if (r.verdict == "error") ++errors;
      if (json) {
        ordered_json o =
            report_object(r.text, r.verdict, 1, r.verdict == "fail" ? 1 : 0, r.details,
                          position_text(r.line, r.col));
        o["file"] = file;
        out << o.dump() << "\n";
      } else {
        out << file << ":" << position_text(r.line, r.col) << " " << r.text;
        if (r.verdict == "info") {
          out << " = " << (r.details.empty() ? "" : r.details[0]) << "\n";
        } else {
          out << ": " << r.verdict << "\n";
          for (const auto& detail : r.details) out << "    " << detail << "\n";
        }
      }
    }
    if (!json)
      out << file << ": " << results.size() << " directives, " << failed << " failed, "
          << errors << " errors\n";
    if (failed + errors > 0) bump(1);
  }
  return worst;
}

// --- laws ----------------------------------------------------------------

inline int cmd_laws(const LawsOptions& options, std::ostream& out) {
  for (const auto& id : options.filter)
    if (!find_law(id)) {
      out << "error: unknown law '" << id << "'; known ids:";
      for (const auto& known : law_ids()) out << " " << known;
      out << "\n";
      return 2;
    }
  LawConfig config;
  config.size = options.size;
  config.mode =
      options.mode == "random" ? LawConfig::Mode::Random : LawConfig::Mode::Exhaustive;
  config.samples = options.samples;
  config.seed = options.seed;
  const SuiteReport suite = run_suite(config, options.filter);
  const bool json = options.format == "json-lines";
  for (const auto& r : suite.reports) {
    const std::string verdict = r.ok ? "pass" : "unexpected";
    if (json) {
      ordered_json o = report_object(r.id, verdict, r.cases, r.failures, r.examples, "");
      o["expected"] = r.expected;
      o["eq"] = r.eq;
      o["mode"] = r.mode;
      o["vacuous"] = r.vacuous;
      o["notes"] = r.notes;
      out << o.dump() << "\n";
    } else {
      std::ostringstream millis;
      millis.setf(std::ios::fixed);
      millis.precision(1);
      millis << r.millis;
      out << r.id << " " << (r.ok ? "pass" : "UNEXPECTED") << " expected=" << r.expected
          << " mode=" << r.mode << " cases=" << r.cases << " vacuous=" << r.vacuous
          << " failures=" << r.failures << " millis=" << millis.str() << "\n";
      if (!r.ok)
        for (const auto& example : r.examples) out << "    " << example << "\n";
    }
  }
  if (!json)
    out << "suite: " << suite.reports.size() << " laws, "
        << (suite.all_ok ? "all as expected" : "UNEXPECTED outcomes") << "\n";
  return suite.all_ok ? 0 : 1;
}

// --- eval ----------------------------------------------------------------

inline int cmd_eval(const std::optional<std::string>& file, const std::string& expression,
                    const std::string& query, std::ostream& out) {
  lang::Model model;
  if (file) {
    const auto text = read_file(*file);
    if (!text) {
      out << "error: cannot read file '" << *file << "'\n";
      return 2;
    }
    const lang::ParseResult parsed = lang::parse(*text);
    if (!parsed.diagnostics.empty()) {
      for (const auto& d : parsed.diagnostics) out << *file << ":" << lang::to_text(d) << "\n";
      return 2;
    }
    const lang::ElabResult elab = lang::elaborate(parsed.ast);
    if (!elab.ok) {
      for (const auto& d : elab.diagnostics) out << *file << ":" << lang::to_text(d) << "\n";
      return 2;
    }
    model = elab.model;
  } else {
    model.space = std::make_shared<const StateSpace>(
        "S", std::vector<std::string>{"s0", "s1", "s2"});
  }
  const auto parsed = lang::parse_expression(expression);
  if (!parsed.expr) {
    for (const auto& d : parsed.diagnostics) out << lang::to_text(d) << "\n";
    return 2;
  }
  lang::Elaborator evaluator(model);
  const auto value = evaluator.eval_expression(parsed.expr);
  if (!value) {
    for (const auto& d : evaluator.diagnostics()) out << lang::to_text(d) << "\n";
    return 2;
  }
  const Program* p = std::get_if<Program>(&*value);
  if (!p) {
    out << "error: the expression is a " << lang::value_kind(*value)
        << "; print queries apply to programs\n";
    return 2;
  }
  if (query == "post") out << to_text(p->post()) << "\n";
  else if (query == "pre") out << to_text(p->pre()) << "\n";
  else if (query == "range") out << to_text(program_range(*p)) << "\n";
  else if (query == "dom") out << to_text(program_dom(*p)) << "\n";
  else if (query == "classify") out << to_text(classify_program(*p)) << "\n";
  else {
    out << "error: unknown print query '" << query << "'\n";
    return 2;
  }
  return 0;
}

// --- enumerate -------------------------------------------------------------

inline int cmd_enumerate(int size, std::ostream& out) {
  if (size < 1 || size > 4) {
    out << "error: enumeration is bounded to sizes 1..4 (got " << size << ")\n";
    return 2;
  }
  const StateSpace space("S" + std::to_string(size), default_atoms(size));
  const uint64_t count = program_count(size);
  for (uint64_t idx = 0; idx < count; ++idx) out << to_text(program_at(&space, idx)) << "\n";
  return 0;
}

}  // namespace tp::cli

#endif
