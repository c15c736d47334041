#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "f2sym/target.hpp"
#include "f2sym/value.hpp"

namespace f2sym {

struct EvalOptions {
  /// Reading an unbound scalar in a numeric context is an error instead of 0.
  bool strict_unbound = false;
  /// Printed lines are also written here as they happen.
  std::ostream* stream = nullptr;
  std::size_t max_steps = 50'000'000;
  int max_depth = 200;
};

struct Definition {
  std::vector<std::string> params;
  target::ModuleBlock body;
  bool hold_all = true;
};

class Environment {
 public:
  std::optional<Value> scalar(const std::string& name) const;
  std::optional<Value> element(const std::string& array, const std::vector<Value>& index) const;
  std::optional<Value> element(const std::string& array, const std::vector<long>& index) const;
  /// The F2MmaDimensions entry of `array`, a list of {lo, hi} pairs.
  std::optional<Value> dims(const std::string& array) const;
  bool has_definition(const std::string& name) const { return definitions.count(name) > 0; }

  std::map<std::string, Value> globals;
  std::map<std::string, std::map<std::string, Value>> arrays;
  std::map<std::string, Value> dimensions;
  std::map<std::string, Definition> definitions;
  /// Fresh local names of every Module currently running, innermost last.
  std::vector<std::vector<std::string>> modules;
};

/// Joins an index tuple into an element-store key.
std::string index_key(const std::vector<Value>& index);

struct RunResult {
  std::vector<std::string> printed;
  Environment env;
};

class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {});

  Value eval_expr(const target::ExprPtr& expr);
  /// Runs one statement. Returns its value; `returned` is set when a
  /// Return is unwinding.
  Value exec(const target::Stmt& stmt, bool& returned);
  Value call_definition(const std::string& name, const std::vector<target::ExprPtr>& args);
  /// Registers definitions first, then runs the statements in order.
  void run(const target::StmtList& program);

  Environment& env() { return env_; }
  const std::vector<std::string>& printed() const { return printed_; }

 private:
  Value exec_block(const target::StmtList& body, bool& returned);
  Value exec_module(const target::ModuleBlock& m, bool& returned);
  void assign(const target::ExprPtr& lhs, const Value& v);
  Value numeric(Value v);
  bool truth(const Value& v);
  std::vector<Value> eval_args(const std::vector<target::ExprPtr>& args);
  Value apply_builtin(const std::string& head, const std::vector<Value>& args);
  std::string fresh(const std::string& name);
  void tick();

  EvalOptions options_;
  Environment env_;
  std::vector<std::string> printed_;
  std::size_t steps_ = 0;
  std::size_t next_id_ = 1;
  int depth_ = 0;
};

/// Runs an emitted program from a fresh environment.
RunResult run_program(const target::StmtList& program, EvalOptions options = {});

/// Replaces free symbols of a statement list according to `bindings`.
/// Module locals and Do iterators are alpha-renamed on the way in so no
/// replacement is captured; `fresh` supplies the new names.
target::StmtList substitute(const target::StmtList& body,
                            const std::map<std::string, target::ExprPtr>& bindings,
                            const std::function<std::string(const std::string&)>& fresh);

}  // namespace f2sym
