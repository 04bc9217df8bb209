// Acceptance suite: runs every certification criterion end to end and
// prints one PASS/FAIL line per criterion. The optional argv[1] is the
// path of the CLI binary, used by the byte-determinism criterion; without
// it that criterion falls back to in-process runs.

#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "gmaderiv/cli.hpp"
#include "gmaderiv/document.hpp"
#include "gmaderiv/gallery.hpp"

using namespace gmaderiv;

namespace {

std::string g_cli_path;

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::ostream&)> run;
};

Field QQ() { return Field::rationals(); }
Field GF(std::uint64_t p) { return Field::prime(p); }

GeneralizedMatrixAlgebra gma_of(const std::string& name, const GalleryParams& params = {}) {
  return build_gma(make_gallery(name, params));
}

// ---------------------------------------------------------------------------
// 1. The proper Jordan derivation of the trivial 4-dimensional instance
//    splits exactly into theta1 + theta2.
bool criterion_gamma_split(std::ostream& log) {
  const GeneralizedMatrixAlgebra g = gma_of("trivial-q");
  const LinearMap gamma = gamma_jord(g);
  bool ok = true;
  ok &= is_jordan_derivation(g.algebra(), gamma);
  ok &= !is_derivation(g.algebra(), gamma);
  const JordanDecomposition parts = decompose_jordan(g, gamma);
  ok &= parts.derivation_part == theta1(g);
  ok &= parts.antiderivation_part == theta2(g);
  ok &= theta1(g) + theta2(g) == gamma;
  if (!ok) log << "    gamma split failed on the trivial instance\n";
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Splitting identity JDer = Der + ADer on every zero-pairing fixture
//    with faithful M, over the rationals and GF(3), GF(5), GF(7).
bool criterion_splitting_identity(std::ostream& log) {
  bool all_ok = true;
  const std::vector<std::string> fields = {"q", "gf3", "gf5", "gf7"};
  for (const auto& field : fields) {
    std::vector<std::pair<std::string, GalleryParams>> instances = {
        {"trivial", {{"field", field}}},
        {"s-deformed", {{"field", field}, {"s", "0"}}},
        {"triangular", {{"field", field}, {"n", "2"}}},
        {"triangular", {{"field", field}, {"n", "3"}}},
        {"triangular", {{"field", field}, {"n", "4"}}},
    };
    for (const auto& [name, params] : instances) {
      const GeneralizedMatrixAlgebra g = gma_of(name, params);
      const MapSubspace der = derivation_space(g.algebra());
      const MapSubspace ader = antiderivation_space(g.algebra());
      const MapSubspace jder = jordan_derivation_space(g.algebra());
      const MapSubspace sum = subspace_sum(der, ader);
      const MapSubspace inter = subspace_intersection(der, ader);
      bool ok = jder.dimension() == der.dimension() + ader.dimension() - inter.dimension();
      for (const auto& b : jder.basis) ok &= contains(sum, b);
      for (const auto& b : sum.basis) ok &= contains(jder, b);
      ok &= certify_jordan_splitting(g).verdict == Verdict::Certified;
      if (!ok) {
        log << "    splitting identity fails for " << name << " over " << field << "\n";
        all_ok = false;
      }
    }
  }
  return all_ok;
}

// ---------------------------------------------------------------------------
// 3. No-antiderivation certificates for nondegenerate pairings.
bool criterion_no_antiderivations(std::ostream& log) {
  bool all_ok = true;
  const auto expect_certified = [&](const GeneralizedMatrixAlgebra& g, const std::string& what) {
    const CertifyResult r = certify_no_antiderivations(g);
    if (r.verdict != Verdict::Certified) {
      log << "    " << what << ": verdict " << verdict_name(r.verdict) << " " << r.reason << "\n";
      all_ok = false;
    }
  };
  for (const std::string s : {"1", "2", "-3"})
    expect_certified(gma_of("s-deformed", {{"field", "q"}, {"s", s}}), "s=" + s + " over q");
  for (const std::string s : {"1", "2", "3", "4"})
    expect_certified(gma_of("s-deformed", {{"field", "gf5"}, {"s", s}}), "s=" + s + " over gf5");
  expect_certified(gma_of("skew-c2"), "skew-c2");
  return all_ok;
}

// ---------------------------------------------------------------------------
// 4. Round trip and full condition reports for every Jordan derivation
//    basis vector on every gallery fixture.
bool criterion_roundtrip_conditions(std::ostream& log) {
  bool all_ok = true;
  for (const auto& preset : gallery_presets()) {
    const GeneralizedMatrixAlgebra g = gma_of(preset.name, preset.params);
    for (const auto& b : jordan_derivation_space(g.algebra()).basis) {
      const JordanCanonicalForm form = extract_jordan_components(g, b);
      if (rebuild_from_form(g, form) != b) {
        log << "    round trip failed on " << preset.label() << "\n";
        all_ok = false;
        continue;
      }
      const ConditionReport report = verify_conditions(g, form, FormRule::Jordan32);
      if (!report.ok()) {
        log << "    conditions failed on " << preset.label() << ":";
        for (const auto* f : report.failures()) log << " " << f->id;
        log << "\n";
        all_ok = false;
      }
    }
  }
  return all_ok;
}

// ---------------------------------------------------------------------------
// 5. Triangular algebras: dim JDer = dim Der = the inner-derivation
//    dimension, which in turn is dim T_n - dim of the center.
bool criterion_triangular(std::ostream& log) {
  bool all_ok = true;
  for (const std::size_t n : {2u, 3u, 4u}) {
    const StructureAlgebra tn = upper_triangular_algebra(n, QQ());
    const std::size_t der = derivation_space(tn).dimension();
    const std::size_t jder = jordan_derivation_space(tn).dimension();
    const std::size_t inner = inner_derivation_space(tn).dimension();
    const std::size_t oracle = tn.dim() - center_basis(tn).size();
    if (der != jder || der != inner || der != oracle || der != n * (n + 1) / 2 - 1) {
      log << "    T" << n << ": der=" << der << " jder=" << jder << " inner=" << inner
          << " oracle=" << oracle << "\n";
      all_ok = false;
    }
  }
  return all_ok;
}

// ---------------------------------------------------------------------------
// 6. The full 2x2 matrix algebra: JDer = Der of dimension 3 = dim - center.
bool criterion_matrix_algebra(std::ostream& log) {
  const StructureAlgebra m2 = full_matrix_algebra(2, QQ());
  const std::size_t der = derivation_space(m2).dimension();
  const std::size_t jder = jordan_derivation_space(m2).dimension();
  const std::size_t oracle = m2.dim() - center_basis(m2).size();
  const bool ok = der == 3 && jder == 3 && oracle == 3 &&
                  inner_derivation_space(m2).dimension() == 3;
  if (!ok) log << "    M2: der=" << der << " jder=" << jder << " oracle=" << oracle << "\n";
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Polarization soundness on 200 random algebras and maps over GF(2),
//    GF(3) and the rationals.
StructureAlgebra random_algebra(const Field& f, std::mt19937_64& rng) {
  switch (rng() % 6) {
    case 0: return field_algebra(f);
    case 1: return direct_sum_fields(f, 2 + rng() % 2);
    case 2: return upper_triangular_algebra(2, f);
    case 3: return upper_triangular_algebra(3, f);
    case 4: return full_matrix_algebra(2, f);
    default: {
      const Scalar s = Scalar::of(f, static_cast<long long>(rng() % 4));
      return build_gma(s_deformed_m2(f, s)).algebra();
    }
  }
}

// Random change of basis keeps associativity and scrambles the tensor.
StructureAlgebra random_basis_change(const StructureAlgebra& alg, std::mt19937_64& rng) {
  const std::size_t d = alg.dim();
  const Field& f = alg.field();
  for (int attempt = 0; attempt < 50; ++attempt) {
    Matrix p(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const long long v = f.is_rational() ? static_cast<long long>(rng() % 5) - 2
                                            : static_cast<long long>(rng() % f.characteristic());
        p.at(i, j) = Scalar::of(f, v);
      }
    if (rank(p) != d) continue;
    // New basis b'_j = sum_i p[i][j] b_i; solve p c' = products for c'.
    Tensor3 c(f, d, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Vec prod = alg.multiply(p.column(i), p.column(j));
        const Vec coords = *solve(p, prod);
        for (std::size_t k = 0; k < d; ++k) c.set(i, j, k, coords[k]);
      }
    return StructureAlgebra(f, std::move(c), *solve(p, alg.unit()));
  }
  return alg;
}

bool criterion_polarization(std::ostream& log) {
  std::mt19937_64 rng(0x5eed);
  const std::array<Field, 3> fields = {GF(2), GF(3), QQ()};
  bool all_ok = true;
  int true_cases = 0, false_cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Field& f = fields[trial % fields.size()];
    StructureAlgebra alg = random_basis_change(random_algebra(f, rng), rng);
    LinearMap candidate(f, alg.dim(), alg.dim());
    if (trial % 2 == 0) {
      const MapSubspace jder = jordan_derivation_space(alg);
      for (const auto& b : jder.basis) {
        const Scalar c = Scalar::of(f, static_cast<long long>(rng() % 5) - 2);
        for (std::size_t i = 0; i < candidate.rows(); ++i)
          for (std::size_t j = 0; j < candidate.cols(); ++j)
            candidate.at(i, j) += c * b.at(i, j);
      }
    } else {
      for (std::size_t i = 0; i < candidate.rows(); ++i)
        for (std::size_t j = 0; j < candidate.cols(); ++j)
          candidate.at(i, j) = Scalar::of(
              f, f.is_rational() ? static_cast<long long>(rng() % 7) - 3
                                 : static_cast<long long>(rng() % f.characteristic()));
    }
    if (is_jordan_derivation(alg, candidate)) {
      ++true_cases;
      for (int probe = 0; probe < 50; ++probe) {
        Vec x;
        for (std::size_t i = 0; i < alg.dim(); ++i)
          x.push_back(Scalar::of(f, f.is_rational()
                                        ? static_cast<long long>(rng() % 9) - 4
                                        : static_cast<long long>(rng() % f.characteristic())));
        if (!is_zero_vec(jordan_defect(alg, candidate, x))) {
          log << "    predicate true but q(x) != 0 at trial " << trial << "\n";
          all_ok = false;
        }
      }
    } else {
      ++false_cases;
      const auto v = jordan_violation(alg, candidate);
      if (!v) {
        all_ok = false;
        continue;
      }
      // Recheck the reported witness by direct evaluation.
      Vec defect;
      if (v->diagonal) {
        defect = jordan_defect(alg, candidate, alg.basis_element(v->i));
      } else {
        defect = jordan_defect(alg, candidate,
                               add(alg.basis_element(v->i), alg.basis_element(v->j)));
        defect = sub(defect, jordan_defect(alg, candidate, alg.basis_element(v->i)));
        defect = sub(defect, jordan_defect(alg, candidate, alg.basis_element(v->j)));
      }
      if (is_zero_vec(defect)) {
        log << "    reported witness rechecks to zero at trial " << trial << "\n";
        all_ok = false;
      }
    }
  }
  log << "    (" << true_cases << " maps satisfied the predicate, " << false_cases
      << " produced witnesses)\n";
  return all_ok && true_cases > 0 && false_cases > 0;
}

// ---------------------------------------------------------------------------
// 8. Mutation: corrupting any single pairing entry of the s = 1 context
//    breaks validation or the assembled algebra's associativity.
bool criterion_mutation(std::ostream& log) {
  bool all_ok = true;
  for (const std::string replacement : {"0", "2", "-1", "5", "1/2"}) {
    for (int which = 0; which < 2; ++which) {
      MoritaContext ctx = s_deformed_m2(QQ(), Scalar::one(QQ()));
      const Scalar v = Scalar::parse(QQ(), replacement);
      if (v.is_one()) continue;
      if (which == 0)
        ctx.corrupt_phi(0, 0, 0, v);
      else
        ctx.corrupt_psi(0, 0, 0, v);
      bool broken = !validate_context(ctx).ok();
      if (!broken) {
        try {
          build_gma(ctx);
        } catch (const AlgebraError&) {
          broken = true;
        }
      }
      if (!broken) {
        log << "    corruption to " << replacement << " (entry " << which << ") undetected\n";
        all_ok = false;
      }
    }
  }
  return all_ok;
}

// ---------------------------------------------------------------------------
// 9. Byte determinism of machine-readable solve output across two runs of
//    the CLI binary on every gallery fixture.
std::string shell_capture(const std::string& command, int& code) {
  std::string output;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    code = -1;
    return output;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  code = pclose(pipe);
  return output;
}

bool criterion_determinism(std::ostream& log) {
  bool all_ok = true;
  for (const auto& preset : gallery_presets()) {
    std::string doc_text;
    {
      const MoritaContext ctx = make_gallery(preset.name, preset.params);
      std::map<std::string, Matrix> maps;
      if (ctx.dim_m() == ctx.dim_n()) {
        const GeneralizedMatrixAlgebra g = build_gma(ctx);
        maps.emplace("gamma-jord", gamma_jord(g));
      }
      doc_text = serialize_document(document_from_context(ctx, maps));
    }
    char name[] = "/tmp/gmaderiv-acc-XXXXXX";
    const int fd = mkstemp(name);
    if (fd < 0) return false;
    {
      std::ofstream f(name);
      f << doc_text;
    }
    close(fd);

    const std::vector<std::string> args = {"solve", name, "--kind", "jder", "--format", "machine",
                                           "--basis"};
    std::string first, second;
    if (!g_cli_path.empty()) {
      std::string command = g_cli_path;
      for (const auto& a : args) command += " " + a;
      int code1 = 0, code2 = 0;
      first = shell_capture(command, code1);
      second = shell_capture(command, code2);
      if (code1 != 0 || code2 != 0) all_ok = false;
    } else {
      std::ostringstream out1, out2, err;
      cli::run(args, out1, err);
      cli::run(args, out2, err);
      first = out1.str();
      second = out2.str();
    }
    if (first.empty() || first != second) {
      log << "    nondeterministic output for " << preset.label() << "\n";
      all_ok = false;
    }
    std::remove(name);
  }
  return all_ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "proper Jordan derivation splits as theta1 + theta2", criterion_gamma_split},
      {2, "JDer = Der + ADer on zero-pairing fixtures (4 fields)", criterion_splitting_identity},
      {3, "nondegenerate pairings admit no nonzero antiderivation", criterion_no_antiderivations},
      {4, "extract/rebuild round trip and full condition reports", criterion_roundtrip_conditions},
      {5, "triangular algebras: JDer = Der = inner derivations", criterion_triangular},
      {6, "2x2 matrix algebra: JDer = Der of dimension 3", criterion_matrix_algebra},
      {7, "polarized Jordan predicate is sound on random maps", criterion_polarization},
      {8, "single pairing-entry mutations are always detected", criterion_mutation},
      {9, "machine-readable solve output is byte-deterministic", criterion_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str(), seconds);
    const std::string detail = log.str();
    if (!detail.empty()) std::fputs(detail.c_str(), stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
