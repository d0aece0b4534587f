#pragma once

#include <map>
#include <string>
#include <vector>

#include "poisson/algebra.hpp"
#include "poisson/exactnum.hpp"

namespace poisson {

// Registry of the named structure-constant tables used across the library,
// tests, and the CLI: the parameterized three-dimensional families P_3_1
// through P_3_9, the two-dimensional cases, assorted Lie brackets for the
// symmetric-algebra constructions, and zero algebras.
std::vector<std::string> catalog_names();

// Parameter names a fixture requires (empty for parameter-free fixtures).
std::vector<std::string> catalog_params(const std::string& name);

AlgebraStructure catalog_get(const std::string& name,
                             const std::map<std::string, Rational>& params = {});

// Grid used when auditing parameterized families.
const std::vector<Rational>& parameter_samples();

struct AuditEntry {
    std::string fixture;
    bool passed = true;
    std::vector<std::string> failures;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    bool all_passed = true;
};

// Checks every fixture (parameters sampled) against its recorded
// invariants: defining identities, power associativity, split/combine round
// trip, bracket classification, idempotents, and frozen cohomology
// dimensions where recorded. Failures are reported, never thrown.
AuditReport audit_all();

// Random admissible table: a direct sum of small catalog blocks conjugated
// by a random invertible base change (both operations preserve the defining
// identity). Supported dims: 1 through 4.
AlgebraStructure random_admissible(std::size_t dim, Rng& rng);

// Coarse classification of a bracket table: "abelian"; "heisenberg" when
// the derived algebra is one-dimensional and central; "simple" when the
// derived algebra is everything; otherwise "solvable".
std::string bracket_class(const AlgebraStructure& bracket);

}  // namespace poisson
