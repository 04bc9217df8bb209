/* Copyright (C) 2026 The gmaderiv authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <string>
#include <vector>

#include "gmaderiv/derivations.hpp"
#include "gmaderiv/gma.hpp"

namespace gmaderiv {

/// Component tuple of a Jordan derivation of a generalized matrix algebra:
/// the corner elements m0, n0 and the eight corner maps. A Jordan
/// derivation acts as
///
///   A-corner: delta1(a) - phi(m, n0) - phi(m0, n) + delta4(b)
///   M-corner: a.m0 - m0.b + tau2(m) + tau3(n)
///   N-corner: n0.a - b.n0 + nu2(m) + nu3(n)
///   B-corner: mu1(a) + psi(n0, m) + psi(n, m0) + mu4(b)
///
/// rebuild_from_form evaluates exactly this; extract_jordan_components
/// reads the components off basis-wise, and the two are mutually inverse
/// on Jordan derivations.
struct JordanCanonicalForm {
  Vec m0;         // in M
  Vec n0;         // in N
  Matrix delta1;  // A -> A
  Matrix delta4;  // B -> A
  Matrix tau2;    // M -> M
  Matrix tau3;    // N -> M
  Matrix nu2;     // M -> N
  Matrix nu3;     // N -> N
  Matrix mu1;     // A -> B
  Matrix mu4;     // B -> B

  static JordanCanonicalForm zero(const GeneralizedMatrixAlgebra& g);
};

/// Reads the component tuple off a Jordan derivation: m0 and n0 are the
/// M- and N-corners of f(e11), and each corner map collects the matching
/// corner of f on embedded basis vectors. Throws PreconditionError (naming
/// the failing constraint) when f is not a Jordan derivation.
JordanCanonicalForm extract_jordan_components(const GeneralizedMatrixAlgebra& g,
                                              const LinearMap& f);

/// Evaluates the displayed corner formula basis-wise. Inverse of
/// extraction on Jordan derivations; defined for any form of matching
/// shape.
LinearMap rebuild_from_form(const GeneralizedMatrixAlgebra& g, const JordanCanonicalForm& form);

/// The tool's catalog of canonical-form statements. The identifiers
/// "3.1", "3.2", "3.3", "3.6" are the stable external names used by the
/// CLI and reports.
///
///   3.1  derivation form: components (delta1, tau2, nu3, mu4, m0, n0),
///        no slots for delta4, mu1, tau3, nu2.
///   3.2  Jordan-derivation form: all ten components, conditions (1)-(7).
///   3.3  Jordan form under 2-torsion-freeness and faithful M:
///        delta4 = mu1 = 0 and delta1, mu4 are honest derivations.
///   3.6  antiderivation form: only m0, n0, tau3, nu2 survive.
enum class FormRule { Derivation31, Jordan32, Jordan33, Antiderivation36 };

const char* form_rule_id(FormRule rule);
/// Parses "3.1" | "3.2" | "3.3" | "3.6".
std::optional<FormRule> form_rule_from_id(const std::string& id);

struct ConditionCheck {
  std::string id;         // e.g. "3.2.4a"
  std::string statement;  // human-readable identity
  bool holds;
  std::vector<std::size_t> witness;  // indices of the first failure, empty if holds
};

struct ConditionReport {
  FormRule rule;
  std::vector<ConditionCheck> checks;
  bool ok() const;
  std::vector<const ConditionCheck*> failures() const;
};

/// Checks every condition of the chosen form statement on all basis
/// tuples. Conditions quadratic in a module variable (n tau3(n) = 0 and
/// friends) are decided by the basis diagonal plus symmetric polarization,
/// which is equivalent over any field by the same expansion identity as
/// the Jordan predicate; the primed conditions of 3.6 run over all ordered
/// basis pairs. Conditions that require a component to vanish entirely
/// ("no slot in the form") are reported as shape checks.
ConditionReport verify_conditions(const GeneralizedMatrixAlgebra& g,
                                  const JordanCanonicalForm& form, FormRule rule);

/// derivation_part + antiderivation_part = the decomposed map, exactly.
struct JordanDecomposition {
  LinearMap derivation_part;
  LinearMap antiderivation_part;
};

/// Splits a Jordan derivation of a zero-pairing generalized matrix algebra
/// into a derivation plus an antiderivation. The split is the canonical
/// one: tau3 and nu2 go to the antiderivation part, everything else to the
/// derivation part (the decomposition is not unique when the two spaces
/// intersect).
///
/// Hypotheses enforced: both pairings zero, characteristic != 2, M
/// faithful on both sides, f a Jordan derivation; HypothesisError or
/// PreconditionError otherwise. The parts are re-verified by the
/// predicates before returning; a failure there would be an internal
/// inconsistency and throws.
JordanDecomposition decompose_jordan(const GeneralizedMatrixAlgebra& g, const LinearMap& f);

enum class Verdict { Certified, NotApplicable, Falsified };
const char* verdict_name(Verdict v);

struct CertifyResult {
  Verdict verdict;
  std::string reason;  // hypothesis that failed, or falsification detail
  std::vector<std::pair<std::string, std::string>> facts;  // ordered key/value evidence
};

/// Statement 3.10: when M is faithful on both sides and at least one
/// pairing is nondegenerate, the only antiderivation is zero. Computes
/// the antiderivation space and certifies dimension 0; a nonzero
/// dimension is reported as Falsified, never silently.
CertifyResult certify_no_antiderivations(const GeneralizedMatrixAlgebra& g);

/// Statement 3.11: for zero pairings (2-torsion free, M faithful), the
/// Jordan derivations split as JDer = Der + ADer. Verified as a subspace
/// identity: membership both ways plus the dimension formula.
CertifyResult certify_jordan_splitting(const GeneralizedMatrixAlgebra& g);

}  // namespace gmaderiv
