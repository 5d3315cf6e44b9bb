#include "pmsat/cnf.hpp"

#include <algorithm>
#include <sstream>

#include "pmsat/errors.hpp"

namespace pmsat {

Clause Clause::padded(std::initializer_list<Literal> literals) {
  return padded(std::vector<Literal>(literals));
}

Clause Clause::padded(const std::vector<Literal>& literals) {
  if (literals.empty() || literals.size() > 3) {
    throw InvalidParameter("a 3-CNF clause needs 1 to 3 literals, got " +
                           std::to_string(literals.size()));
  }
  Clause clause;
  for (std::size_t i = 0; i < 3; ++i) clause.lits[i] = literals[std::min(i, literals.size() - 1)];
  return clause;
}

std::vector<Literal> Clause::distinct() const {
  std::vector<Literal> out;
  for (Literal lit : lits) {
    if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
  }
  return out;
}

CnfFormula::CnfFormula(std::size_t var_count, std::vector<Clause> clauses) : var_count_(var_count) {
  clauses_.reserve(clauses.size());
  for (const Clause& c : clauses) add(c);
}

void CnfFormula::add(const Clause& clause) {
  for (Literal lit : clause.lits) {
    if (lit == 0 || static_cast<std::size_t>(var_of(lit)) > var_count_) {
      throw InvalidParameter("literal " + std::to_string(lit) + " outside variables 1.." +
                             std::to_string(var_count_));
    }
  }
  clauses_.push_back(clause);
}

bool CnfFormula::satisfied_by(const Assignment& assignment) const {
  if (assignment.size() != var_count_) {
    throw DimensionMismatch("assignment width " + std::to_string(assignment.size()) +
                            " does not match variable count " + std::to_string(var_count_));
  }
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
    return std::any_of(c.lits.begin(), c.lits.end(), [&](Literal lit) {
      return assignment[static_cast<std::size_t>(var_of(lit) - 1)] == (lit > 0);
    });
  });
}

std::string emit_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.var_count() << ' ' << formula.clause_count() << '\n';
  for (const Clause& c : formula.clauses()) {
    out << c.lits[0] << ' ' << c.lits[1] << ' ' << c.lits[2] << " 0\n";
  }
  return out.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  std::size_t declared_vars = 0;
  std::size_t declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      std::string format;
      if (have_header || !(tokens >> format >> declared_vars >> declared_clauses) || format != "cnf") {
        throw ParseError("line " + std::to_string(line_no) + ": malformed DIMACS header");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": clause before header");

    std::istringstream body(line);
    std::string token;
    while (body >> token) {
      Literal lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad literal '" + token + "'");
      }
      if (lit != 0) {
        if (static_cast<std::size_t>(var_of(lit)) > declared_vars) {
          throw ParseError("line " + std::to_string(line_no) + ": literal " + token +
                           " exceeds declared variable count");
        }
        pending.push_back(lit);
        continue;
      }
      if (pending.empty() || pending.size() > 3) {
        throw ParseError("line " + std::to_string(line_no) + ": clause of width " +
                         std::to_string(pending.size()) + " is not 3-CNF");
      }
      clauses.push_back(Clause::padded(pending));
      pending.clear();
    }
  }
  if (!have_header) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated final clause");
  if (clauses.size() != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(clauses.size()));
  }
  return CnfFormula(declared_vars, std::move(clauses));
}

std::size_t PartialAssignment::assigned_count() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](Truth t) { return t != Truth::kUnset; }));
}

Assignment PartialAssignment::to_assignment() const {
  Assignment out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] == Truth::kTrue;
  return out;
}

}  // namespace pmsat
