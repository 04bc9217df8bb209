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
#include "gmaderiv/document.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

namespace gmaderiv {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;  // comment until end of line
    tokens.push_back(tok);
  }
  return tokens;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  }
}

Scalar parse_scalar(const Field& f, const std::string& tok, std::size_t line) {
  try {
    return Scalar::parse(f, tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

struct SectionState {
  std::string kind;  // "algebra" | "bimodule" | "pairing" | "map"
  std::string name;
  std::size_t start_line = 0;
  std::optional<std::size_t> dim;
  AlgebraSection algebra;
  BimoduleSection bimodule;
  PairingSection pairing;
  std::optional<Matrix> map;
  std::set<std::tuple<char, std::size_t, std::size_t, std::size_t>> seen;
  std::set<std::size_t> seen_cols;
};

void require_dim(const SectionState& s, std::size_t line) {
  if (!s.dim)
    throw ParseError(line, "section '" + s.name + "' needs a dim line before its entries");
}

}  // namespace

ContextDocument parse_document(std::istream& in) {
  ContextDocument doc;
  bool have_field = false;
  std::optional<SectionState> section;
  std::string line;
  std::size_t line_no = 0;

  const auto triple = [&](const std::vector<std::string>& tok, std::size_t line_num,
                          char tag) -> SparseTriple {
    if (tok.size() != 5)
      throw ParseError(line_num, std::string("'") + tok[0] + "' takes indices i j k and a value");
    const std::size_t i = parse_index(tok[1], line_num);
    const std::size_t j = parse_index(tok[2], line_num);
    const std::size_t k = parse_index(tok[3], line_num);
    if (!section->seen.insert({tag, i, j, k}).second)
      throw ParseError(line_num, "duplicate entry for indices (" + tok[1] + ", " + tok[2] + ", " +
                                     tok[3] + ")");
    return {i, j, k, parse_scalar(doc.field, tok[4], line_num)};
  };

  const auto close_section = [&](std::size_t line_num) {
    SectionState& s = *section;
    if (s.kind == "algebra") {
      if (!s.dim) throw ParseError(line_num, "algebra '" + s.name + "' has no dim line");
      if (s.algebra.unit.empty() && *s.dim > 0)
        throw ParseError(line_num, "algebra '" + s.name + "' has no unit line");
      s.algebra.dim = *s.dim;
      doc.algebras[s.name] = std::move(s.algebra);
    } else if (s.kind == "bimodule") {
      if (!s.dim) throw ParseError(line_num, "bimodule '" + s.name + "' has no dim line");
      s.bimodule.dim = *s.dim;
      doc.bimodules[s.name] = std::move(s.bimodule);
    } else if (s.kind == "pairing") {
      doc.pairings[s.name] = std::move(s.pairing);
    } else {
      if (!s.map) throw ParseError(line_num, "map '" + s.name + "' has no dim line");
      doc.maps.emplace(s.name, std::move(*s.map));
    }
    section.reset();
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0];

    if (!section) {
      if (head == "field") {
        if (have_field) throw ParseError(line_no, "duplicate field line");
        if (tok.size() == 2 && tok[1] == "rational") {
          doc.field = Field::rationals();
        } else if (tok.size() == 3 && tok[1] == "prime") {
          try {
            doc.field = Field::prime(std::stoull(tok[2]));
          } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
          }
        } else {
          throw ParseError(line_no, "expected 'field rational' or 'field prime <p>'");
        }
        have_field = true;
        continue;
      }
      if (head == "algebra" || head == "bimodule" || head == "pairing" || head == "map") {
        if (!have_field) throw ParseError(line_no, "a field line must precede every section");
        if (tok.size() != 2) throw ParseError(line_no, "'" + head + "' takes exactly one name");
        const bool duplicate = (head == "algebra" && doc.algebras.count(tok[1])) ||
                               (head == "bimodule" && doc.bimodules.count(tok[1])) ||
                               (head == "pairing" && doc.pairings.count(tok[1])) ||
                               (head == "map" && doc.maps.count(tok[1]));
        if (duplicate) throw ParseError(line_no, "duplicate " + head + " section '" + tok[1] + "'");
        section = SectionState{};
        section->kind = head;
        section->name = tok[1];
        section->start_line = line_no;
        continue;
      }
      throw ParseError(line_no, "unknown directive '" + head + "'");
    }

    // Inside a section.
    if (head == "end") {
      if (tok.size() != 1) throw ParseError(line_no, "'end' takes no arguments");
      close_section(line_no);
      continue;
    }
    if (head == "dim") {
      if (section->dim) throw ParseError(line_no, "duplicate dim line");
      if (tok.size() != 2) throw ParseError(line_no, "'dim' takes exactly one count");
      section->dim = parse_index(tok[1], line_no);
      if (section->kind == "map")
        section->map = Matrix(doc.field, *section->dim, *section->dim);
      continue;
    }
    if (section->kind == "algebra") {
      if (head == "unit") {
        require_dim(*section, line_no);
        if (!section->algebra.unit.empty()) throw ParseError(line_no, "duplicate unit line");
        if (tok.size() != 1 + *section->dim)
          throw ParseError(line_no, "unit needs exactly dim = " + std::to_string(*section->dim) +
                                        " coordinates");
        for (std::size_t i = 1; i < tok.size(); ++i)
          section->algebra.unit.push_back(parse_scalar(doc.field, tok[i], line_no));
        continue;
      }
      if (head == "c") {
        require_dim(*section, line_no);
        const SparseTriple t = triple(tok, line_no, 'c');
        if (std::get<0>(t) >= *section->dim || std::get<1>(t) >= *section->dim ||
            std::get<2>(t) >= *section->dim)
          throw ParseError(line_no, "structure index exceeds dim " + std::to_string(*section->dim));
        section->algebra.triples.push_back(t);
        continue;
      }
    } else if (section->kind == "bimodule") {
      if (head == "left" || head == "right") {
        require_dim(*section, line_no);
        const SparseTriple t = triple(tok, line_no, head[0] == 'l' ? 'l' : 'r');
        (head == "left" ? section->bimodule.left : section->bimodule.right).push_back(t);
        continue;
      }
    } else if (section->kind == "pairing") {
      if (head == "p") {
        section->pairing.triples.push_back(triple(tok, line_no, 'p'));
        continue;
      }
    } else if (section->kind == "map") {
      if (head == "col") {
        require_dim(*section, line_no);
        if (tok.size() != 2 + *section->dim)
          throw ParseError(line_no, "col needs a column index and dim = " +
                                        std::to_string(*section->dim) + " entries");
        const std::size_t j = parse_index(tok[1], line_no);
        if (j >= *section->dim) throw ParseError(line_no, "column index exceeds dim");
        if (!section->seen_cols.insert(j).second)
          throw ParseError(line_no, "duplicate column " + tok[1]);
        for (std::size_t i = 0; i < *section->dim; ++i)
          section->map->set(i, j, parse_scalar(doc.field, tok[2 + i], line_no));
        continue;
      }
    }
    throw ParseError(line_no, "unknown entry '" + head + "' in " + section->kind + " section");
  }
  if (section)
    throw ParseError(section->start_line, section->kind + " section '" + section->name +
                                              "' is never closed with 'end'");
  if (!have_field && (doc.algebras.empty() && doc.bimodules.empty() && doc.maps.empty()))
    throw ParseError(line_no == 0 ? 1 : line_no, "document is empty");
  return doc;
}

ContextDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

namespace {

void emit_triples(std::ostringstream& out, const char* tag,
                  const std::vector<SparseTriple>& triples) {
  // Triples are emitted in ascending index order regardless of input order.
  std::vector<SparseTriple> sorted = triples;
  std::sort(sorted.begin(), sorted.end(), [](const SparseTriple& a, const SparseTriple& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
  });
  for (const auto& [i, j, k, v] : sorted)
    out << "  " << tag << " " << i << " " << j << " " << k << " " << v.str() << "\n";
}

std::vector<SparseTriple> tensor_triples(const Tensor3& t) {
  std::vector<SparseTriple> out;
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j)
      for (std::size_t k = 0; k < t.dim2(); ++k)
        if (!t.at(i, j, k).is_zero()) out.emplace_back(i, j, k, t.at(i, j, k));
  return out;
}

}  // namespace

std::string serialize_document(const ContextDocument& doc) {
  std::ostringstream out;
  out << "field ";
  if (doc.field.is_rational())
    out << "rational\n";
  else
    out << "prime " << doc.field.characteristic() << "\n";
  for (const auto& [name, alg] : doc.algebras) {
    out << "\nalgebra " << name << "\n  dim " << alg.dim << "\n  unit";
    for (const auto& s : alg.unit) out << " " << s.str();
    out << "\n";
    emit_triples(out, "c", alg.triples);
    out << "end\n";
  }
  for (const auto& [name, mod] : doc.bimodules) {
    out << "\nbimodule " << name << "\n  dim " << mod.dim << "\n";
    emit_triples(out, "left", mod.left);
    emit_triples(out, "right", mod.right);
    out << "end\n";
  }
  for (const auto& [name, pairing] : doc.pairings) {
    out << "\npairing " << name << "\n";
    emit_triples(out, "p", pairing.triples);
    out << "end\n";
  }
  for (const auto& [name, map] : doc.maps) {
    out << "\nmap " << name << "\n  dim " << map.rows() << "\n";
    for (std::size_t j = 0; j < map.cols(); ++j) {
      out << "  col " << j;
      for (std::size_t i = 0; i < map.rows(); ++i) out << " " << map.at(i, j).str();
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

namespace {

Tensor3 tensor_from_triples(const Field& f, std::size_t d0, std::size_t d1, std::size_t d2,
                            const std::vector<SparseTriple>& triples, const std::string& what) {
  Tensor3 t(f, d0, d1, d2);
  for (const auto& [i, j, k, v] : triples) {
    if (i >= d0 || j >= d1 || k >= d2)
      throw DimensionError("index (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                           std::to_string(k) + ") out of range in " + what);
    t.set(i, j, k, v);
  }
  return t;
}

}  // namespace

StructureAlgebra build_algebra(const ContextDocument& doc, const std::string& name) {
  const auto it = doc.algebras.find(name);
  if (it == doc.algebras.end())
    throw std::invalid_argument("document has no algebra section '" + name + "'");
  const AlgebraSection& s = it->second;
  return StructureAlgebra(
      doc.field, tensor_from_triples(doc.field, s.dim, s.dim, s.dim, s.triples, "algebra " + name),
      s.unit);
}

MoritaContext build_context(const ContextDocument& doc) {
  StructureAlgebra a = build_algebra(doc, "A");
  StructureAlgebra b = build_algebra(doc, "B");
  const auto find_module = [&doc](const char* name) -> const BimoduleSection& {
    const auto it = doc.bimodules.find(name);
    if (it == doc.bimodules.end())
      throw std::invalid_argument(std::string("document has no bimodule section '") + name + "'");
    return it->second;
  };
  const BimoduleSection& ms = find_module("M");
  const BimoduleSection& ns = find_module("N");
  Bimodule m{ms.dim,
             tensor_from_triples(doc.field, a.dim(), ms.dim, ms.dim, ms.left, "bimodule M left"),
             tensor_from_triples(doc.field, ms.dim, b.dim(), ms.dim, ms.right, "bimodule M right")};
  Bimodule n{ns.dim,
             tensor_from_triples(doc.field, b.dim(), ns.dim, ns.dim, ns.left, "bimodule N left"),
             tensor_from_triples(doc.field, ns.dim, a.dim(), ns.dim, ns.right, "bimodule N right")};
  const auto pairing_triples = [&doc](const char* name) -> std::vector<SparseTriple> {
    const auto it = doc.pairings.find(name);
    return it == doc.pairings.end() ? std::vector<SparseTriple>{} : it->second.triples;
  };
  Pairing phi = tensor_from_triples(doc.field, ms.dim, ns.dim, a.dim(), pairing_triples("phi"),
                                    "pairing phi");
  Pairing psi = tensor_from_triples(doc.field, ns.dim, ms.dim, b.dim(), pairing_triples("psi"),
                                    "pairing psi");
  for (const auto& [name, map] : doc.maps) {
    const std::size_t total = a.dim() + m.dim + n.dim + b.dim();
    if (map.rows() != total)
      throw DimensionError("map '" + name + "' has dim " + std::to_string(map.rows()) +
                           " but the context has total dim " + std::to_string(total));
  }
  return MoritaContext(std::move(a), std::move(b), std::move(m), std::move(n), std::move(phi),
                       std::move(psi));
}

ContextDocument document_from_context(const MoritaContext& ctx,
                                      const std::map<std::string, Matrix>& maps) {
  ContextDocument doc;
  doc.field = ctx.field();
  const auto algebra_section = [](const StructureAlgebra& alg) {
    AlgebraSection s;
    s.dim = alg.dim();
    s.unit = alg.unit();
    s.triples = tensor_triples(alg.structure());
    return s;
  };
  doc.algebras["A"] = algebra_section(ctx.algebra_a());
  doc.algebras["B"] = algebra_section(ctx.algebra_b());
  doc.bimodules["M"] = BimoduleSection{ctx.dim_m(), tensor_triples(ctx.module_m().left_action),
                                       tensor_triples(ctx.module_m().right_action)};
  doc.bimodules["N"] = BimoduleSection{ctx.dim_n(), tensor_triples(ctx.module_n().left_action),
                                       tensor_triples(ctx.module_n().right_action)};
  doc.pairings["phi"] = PairingSection{tensor_triples(ctx.phi())};
  doc.pairings["psi"] = PairingSection{tensor_triples(ctx.psi())};
  doc.maps = maps;
  return doc;
}

ContextDocument document_from_algebra(const StructureAlgebra& alg, const std::string& name) {
  ContextDocument doc;
  doc.field = alg.field();
  AlgebraSection s;
  s.dim = alg.dim();
  s.unit = alg.unit();
  s.triples = tensor_triples(alg.structure());
  doc.algebras[name] = std::move(s);
  return doc;
}

}  // namespace gmaderiv
