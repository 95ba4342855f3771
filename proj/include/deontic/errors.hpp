#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deontic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Turtle syntax error with a 1-based source position.
struct SyntaxError : Error {
  std::size_t line, column;
  SyntaxError(const std::string& msg, std::size_t l, std::size_t c)
      : Error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

// Rule-body syntax error with a 1-based position inside the rule text.
struct RuleSyntaxError : Error {
  std::string rule_id;
  std::size_t line, column;
  RuleSyntaxError(const std::string& rule, const std::string& msg, std::size_t l, std::size_t c)
      : Error("rule " + rule + " at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
        rule_id(rule),
        line(l),
        column(c) {}
};

struct UnboundTemplateVariable : Error {
  std::string rule_id, variable;
  UnboundTemplateVariable(const std::string& rule, const std::string& var)
      : Error("rule " + rule + ": template variable ?" + var + " is never bound in WHERE"),
        rule_id(rule),
        variable(var) {}
};

struct BindConflict : Error {
  std::string variable;
  explicit BindConflict(const std::string& var)
      : Error("BIND target ?" + var + " is already bound"), variable(var) {}
};

struct MissingRuleBody : Error {
  explicit MissingRuleBody(const std::string& subject)
      : Error("inference rule " + subject + " has no :has-sparql-code literal") {}
};

struct DuplicateRuleId : Error {
  explicit DuplicateRuleId(const std::string& id) : Error("duplicate rule id: " + id) {}
};

struct MaxIterationsExceeded : Error {
  std::size_t iterations;
  std::size_t last_added;
  MaxIterationsExceeded(std::size_t iters, std::size_t added)
      : Error("fixpoint not reached after " + std::to_string(iters) + " iterations (" +
              std::to_string(added) + " triples added in the last iteration)"),
        iterations(iters),
        last_added(added) {}
};

struct UnknownLayer : Error {
  explicit UnknownLayer(const std::string& name) : Error("unknown layer: " + name) {}
};

struct UnknownFixture : Error {
  explicit UnknownFixture(const std::string& name) : Error("unknown fixture: " + name) {}
};

}  // namespace deontic
