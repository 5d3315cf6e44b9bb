#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pmsat {

/// DIMACS-style literal: +v is variable v, -v its negation; variables are 1-based.
using Literal = int;

inline int var_of(Literal lit) { return lit < 0 ? -lit : lit; }

/// Exactly three literal slots. Narrower clauses are padded by repeating their
/// last literal, so a slot may repeat another.
struct Clause {
  std::array<Literal, 3> lits{};

  static Clause padded(std::initializer_list<Literal> literals);
  static Clause padded(const std::vector<Literal>& literals);

  /// Distinct literals in slot order.
  std::vector<Literal> distinct() const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Truth assignment over variables 1..n; index 0 holds variable 1.
using Assignment = std::vector<bool>;

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(std::size_t var_count) : var_count_(var_count) {}
  CnfFormula(std::size_t var_count, std::vector<Clause> clauses);

  std::size_t var_count() const { return var_count_; }
  std::size_t clause_count() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Throws InvalidParameter if a literal is zero or out of range.
  void add(const Clause& clause);

  bool satisfied_by(const Assignment& assignment) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  std::size_t var_count_ = 0;
  std::vector<Clause> clauses_;
};

/// "p cnf <vars> <clauses>" followed by one 0-terminated clause per line.
/// Repeated padding literals are written as stored.
std::string emit_dimacs(const CnfFormula& formula);

/// Reads DIMACS CNF. Clauses of width 1 or 2 are padded to three slots;
/// wider or empty clauses and header mismatches raise ParseError.
CnfFormula parse_dimacs(std::string_view text);

enum class Truth : signed char { kFalse = 0, kTrue = 1, kUnset = -1 };

/// Tri-state assignment over variables 1..width.
class PartialAssignment {
 public:
  explicit PartialAssignment(std::size_t width) : values_(width, Truth::kUnset) {}

  std::size_t width() const { return values_.size(); }
  Truth get(int var) const { return values_[static_cast<std::size_t>(var - 1)]; }
  void set(int var, bool value) { values_[static_cast<std::size_t>(var - 1)] = value ? Truth::kTrue : Truth::kFalse; }
  void unset(int var) { values_[static_cast<std::size_t>(var - 1)] = Truth::kUnset; }
  bool is_set(int var) const { return get(var) != Truth::kUnset; }

  /// kTrue/kFalse for assigned literals, kUnset otherwise.
  Truth literal_value(Literal lit) const {
    Truth t = get(var_of(lit));
    if (t == Truth::kUnset || lit > 0) return t;
    return t == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
  }

  std::size_t assigned_count() const;
  bool complete() const { return assigned_count() == width(); }
  /// Unset variables read as false.
  Assignment to_assignment() const;

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  std::vector<Truth> values_;
};

}  // namespace pmsat
