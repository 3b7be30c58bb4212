// Acceptance checks. One PASS/FAIL line per criterion; nonzero exit if any
// criterion fails. All comparisons are exact.

#include "corpus.hpp"
#include "torifold/cli.hpp"
#include "torifold/delzant.hpp"
#include "torifold/fan.hpp"
#include "torifold/io.hpp"
#include "torifold/lattice.hpp"
#include "torifold/local_model.hpp"
#include "torifold/morse.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

using namespace torifold;
using namespace torifold::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<Integer> cyclic_factors(long n) {
  if (n == 1) return {};
  return {Integer(n)};
}

const Face& face_with(const LabeledPolytope& p, const std::vector<std::size_t>& active) {
  return p.faces().at(*p.find_face(active));
}

Outcome facet_structure_groups() {
  Outcome o;
  int checked = 0;
  for (long n = 1; n <= 6; ++n) {
    for (long m = 1; m <= 6; ++m) {
      const auto p = interval(n, m);
      const auto d = build_construction(p);
      const auto g0 = structure_group(p, face_with(p, {0}));
      const auto g1 = structure_group(p, face_with(p, {1}));
      const std::string tag = "I(" + std::to_string(n) + "," + std::to_string(m) + ")";
      if (g0.invariant_factors() != cyclic_factors(n)) o.fail(tag + " facet 0: " + g0.to_string());
      if (g1.invariant_factors() != cyclic_factors(m)) o.fail(tag + " facet 1: " + g1.to_string());
      if (face_stabilizer(d, face_with(p, {0})) != g0 || face_stabilizer(d, face_with(p, {1})) != g1) {
        o.fail(tag + ": kernel stabilizer differs");
      }
      checked += 2;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " facets of 36 footballs";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t faces = 0;
  for (const auto& [name, p] : corpus()) {
    const auto d = build_construction(p);
    for (auto fi : p.proper_face_indices()) {
      const Face& f = p.faces()[fi];
      const auto kz = face_stabilizer(d, f);
      const auto gamma = structure_group(p, f);
      if (kz != gamma) o.fail(name + ": K_z " + kz.to_string() + " vs structure group " + gamma.to_string());
      ++faces;
    }
  }
  if (corpus().size() < 50) o.fail("corpus has only " + std::to_string(corpus().size()) + " polytopes");
  if (o.pass) o.detail = std::to_string(faces) + " proper faces of " + std::to_string(corpus().size()) + " polytopes agree";
  return o;
}

Outcome manifold_case() {
  Outcome o;
  std::size_t faces = 0;
  for (const auto& [name, p] : delzant_manifolds()) {
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      IntMatrix y(p.dim(), p.dim());
      for (std::size_t k = 0; k < p.dim(); ++k)
        for (std::size_t j = 0; j < p.dim(); ++j) y(k, j) = p.facet(p.vertex_facets(v)[k]).normal[j];
      if (abs(determinant(y)) != 1) o.fail(name + ": vertex normals not unimodular");
    }
    const auto d = build_construction(p);
    for (auto fi : p.proper_face_indices()) {
      const Face& f = p.faces()[fi];
      if (!structure_group(p, f).is_trivial() || !face_stabilizer(d, f).is_trivial()) {
        o.fail(name + ": nontrivial group at a face");
      }
      ++faces;
    }
    if (!kernel_group(d).component_group.is_trivial()) o.fail(name + ": nontrivial component group");
  }
  const std::vector<std::pair<LabeledPolytope, std::vector<Integer>>> hand{
      {interval(1, 1), {}},
      {interval(2, 1), {}},
      {interval(2, 2), {Integer(2)}},
      {interval(6, 4), {Integer(2)}},
      {unit_triangle(), {}},
  };
  for (const auto& [p, expect] : hand) {
    const auto got = kernel_group(build_construction(p)).component_group;
    if (got.invariant_factors() != expect) o.fail("component group " + got.to_string());
  }
  if (o.pass) o.detail = std::to_string(faces) + " faces trivial; component groups match hand values";
  return o;
}

Outcome weighted_triangle() {
  Outcome o;
  const auto w = w2();
  const auto top = *w.find_vertex(RatVector{Rational(0), Rational(1)});
  for (auto fi : w.proper_face_indices()) {
    const Face& f = w.faces()[fi];
    const auto g = structure_group(w, f);
    const bool is_top = f.active == w.vertex_facets(top);
    if (is_top && g.invariant_factors() != std::vector<Integer>{2}) o.fail("vertex (0, 1): " + g.to_string());
    if (!is_top && !g.is_trivial()) o.fail("unexpected " + g.to_string());
  }
  const std::vector<IntVector> rays{{Integer(-1), Integer(-2)}, {Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
  if (build_fan(w, true).rays() != rays) o.fail("fan rays differ");
  if (o.pass) o.detail = "Z/2 at (0, 1), trivial elsewhere, rays (1, 0), (0, 1), (-1, -2)";
  return o;
}

Outcome classification_semantics() {
  Outcome o;
  const auto t = unit_triangle();
  const auto t2 = unit_triangle(2, 1, 1);
  if (compare_labeled(t, t2)) o.fail("library: labeled polytopes reported isomorphic");
  if (!fans_equal(build_fan(t), build_fan(t2))) o.fail("library: fans reported different");

  const auto dir = std::filesystem::temp_directory_path() / ("torifold_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "t1.json") << polytope_to_json(t).dump();
  std::ofstream(dir / "t1_label2.json") << polytope_to_json(t2).dump();
  auto run = [&](const std::string& mode) {
    std::ostringstream out, err;
    const int code = run_cli({"torifold", "--json", "compare", mode, (dir / "t1.json").string(),
                              (dir / "t1_label2.json").string()},
                             out, err);
    if (code != kExitSuccess) o.fail("compare " + mode + " exited " + std::to_string(code));
    return code == kExitSuccess ? Json::parse(out.str()) : Json();
  };
  const Json symp = run("--symplectic");
  const Json bihol = run("--biholomorphic");
  std::filesystem::remove_all(dir);
  if (o.pass) {
    if (symp["symplectic"] != false) o.fail("compare --symplectic reported isomorphic");
    if (bihol["biholomorphic"] != true) o.fail("compare --biholomorphic reported different fans");
  }
  if (o.pass) o.detail = "NOT symplectomorphic (" + symp["reason"].get<std::string>() + "); fans equal";
  return o;
}

Outcome reduction_identity() {
  Outcome o;
  std::size_t samples = 0;
  for (const auto& [name, p] : corpus()) {
    const auto d = build_construction(p);
    const auto r = verify_reduction_invariants(d, p, random_interior_points(p, 100, 1));
    if (!r.pass) o.fail(name + ": " + r.counterexample.value_or("?"));
    if (!r.vertices_attained || r.vertices_checked != p.vertices().size()) o.fail(name + ": vertices not attained");
    samples += r.samples_checked;
  }
  if (o.pass) o.detail = std::to_string(samples) + " samples on " + std::to_string(corpus().size()) + " polytopes";
  return o;
}

Outcome morse_suite() {
  Outcome o;
  auto poly = [](const LabeledPolytope& p) { return morse_report(p, random_generic_direction(p, 1)).morse_poly; };
  if (poly(unit_triangle()) != Polynomial{1, 0, 1, 0, 1}) o.fail("T1");
  if (poly(cube(2)) != Polynomial{1, 0, 2, 0, 1}) o.fail("square");
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m)
      if (poly(interval(n, m)) != Polynomial{1, 0, 1}) o.fail("interval");

  for (const auto& [name, p] : corpus()) {
    const Polynomial first = poly(p);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto r = morse_report(p, random_generic_direction(p, seed));
      if (r.morse_poly != first) o.fail(name + ": depends on the direction");
      if (r.poincare != first) o.fail(name + ": face-number Betti numbers differ");
    }
    if (!std::equal(first.begin(), first.end(), first.rbegin())) o.fail(name + ": not palindromic");
    std::int64_t total = 0;
    for (std::size_t k = 0; k < first.size(); ++k) {
      total += first[k];
      if (k % 2 == 1 && first[k] != 0) o.fail(name + ": odd Betti number");
    }
    if (total != static_cast<std::int64_t>(p.vertices().size())) o.fail(name + ": sum differs from vertex count");
    if (morse_inequality_check(first, first) != Polynomial{}) o.fail(name + ": Q is not zero");
  }
  if (o.pass) o.detail = "20 directions on each of " + std::to_string(corpus().size()) + " polytopes";
  return o;
}

Outcome lattice_kernel() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<long>(rng() % 41) - 20;
    const auto snf = smith_normal_form(a);
    if (snf.U * a * snf.V != snf.D) o.fail("U A V != D");
    if (abs(determinant(snf.U)) != 1 || abs(determinant(snf.V)) != 1) o.fail("not unimodular");
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && snf.D(i, j) != 0) o.fail("D not diagonal");
    const auto diag = snf.diagonal();
    for (std::size_t k = 0; k < diag.size(); ++k) {
      if (diag[k] < 0) o.fail("negative diagonal entry");
      if (k + 1 < diag.size()) {
        if (diag[k] == 0 && diag[k + 1] != 0) o.fail("zero before nonzero");
        if (diag[k] != 0 && diag[k + 1] % diag[k] != 0) o.fail("divisibility chain broken");
      }
    }
  }
  if (o.pass) o.detail = "1000 random matrices";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"facet structure groups of footballs", facet_structure_groups},
      {"stabilizer and structure group oracles agree", oracle_equivalence},
      {"manifold case: trivial groups, component groups", manifold_case},
      {"weighted triangle W2", weighted_triangle},
      {"classification semantics T1 vs T1 with label 2", classification_semantics},
      {"reduction identity on samples", reduction_identity},
      {"Morse suite", morse_suite},
      {"Smith normal form on random matrices", lattice_kernel},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << ": " << o.detail << " ("
              << ms << " ms)\n";
    if (!o.pass) ++failures;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
