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

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>

#include "gmaderiv/gma.hpp"

namespace gmaderiv {

/// Sparse tensor entry: indices plus an exact value.
using SparseTriple = std::tuple<std::size_t, std::size_t, std::size_t, Scalar>;

struct AlgebraSection {
  std::size_t dim = 0;
  Vec unit;
  std::vector<SparseTriple> triples;
};

struct BimoduleSection {
  std::size_t dim = 0;
  std::vector<SparseTriple> left;
  std::vector<SparseTriple> right;
};

struct PairingSection {
  std::vector<SparseTriple> triples;
};

/// Parsed form of the self-contained definition file format.
///
/// The grammar is line-oriented; '#' starts a comment and blank lines are
/// ignored. A `field` line must precede every section:
///
///   field rational            | field prime <p>
///   algebra <name>            dim, unit (one scalar per basis vector),
///     dim <d>                 and sparse structure triples
///     unit <s0> ... <s_{d-1}>   (b_i b_j = sum_k value b_k)
///     c <i> <j> <k> <value>
///   end
///   bimodule <name>           sparse action tensors:
///     dim <d>                 left  <i> <m> <k> <value>  (b_i . v_m)
///     left <i> <m> <k> <v>    right <m> <j> <k> <value>  (v_m . b_j)
///     right <m> <j> <k> <v>
///   end
///   pairing <name>            p <i> <j> <k> <value>
///     p <i> <j> <k> <v>
///   end
///   map <name>                coefficient grid, column-major: col <j>
///     dim <d>                 lists the d entries of column j (the image
///     col <j> <s0> ... <s_{d-1}>   of basis vector j); omitted columns
///   end                       are zero
///
/// A context document uses algebras "A" and "B", bimodules "M" and "N" and
/// pairings "phi" and "psi" (omitted pairing sections mean zero pairings).
/// Rationals serialize as "num/den" with positive denominator in lowest
/// terms ("5" for "5/1"); GF(p) elements as integers 0..p-1.
struct ContextDocument {
  Field field = Field::rationals();
  std::map<std::string, AlgebraSection> algebras;
  std::map<std::string, BimoduleSection> bimodules;
  std::map<std::string, PairingSection> pairings;
  std::map<std::string, Matrix> maps;
};

/// Throws ParseError with a 1-based line number on malformed input.
ContextDocument parse_document(std::istream& in);
ContextDocument parse_document(const std::string& text);

/// Canonical text form: sections in name order, sparse entries in
/// ascending index order, canonical scalar strings. parse(serialize(d))
/// reproduces d.
std::string serialize_document(const ContextDocument& doc);

/// Builds the algebra of the named section; throws std::invalid_argument
/// if absent, DimensionError on bad indices, AlgebraError if the
/// presented constants violate the algebra laws.
StructureAlgebra build_algebra(const ContextDocument& doc, const std::string& name);

/// Assembles the full Morita context from sections A, B, M, N, phi, psi.
/// Context axioms are not checked here (see validate_context).
MoritaContext build_context(const ContextDocument& doc);

/// Document for a context plus optional named coefficient maps.
ContextDocument document_from_context(const MoritaContext& ctx,
                                      const std::map<std::string, Matrix>& maps = {});

/// Single-algebra document (used by the gma construction command to emit
/// structure constants in the same format the parser accepts).
ContextDocument document_from_algebra(const StructureAlgebra& alg, const std::string& name);

}  // namespace gmaderiv
