#include "torifold/cli.hpp"

#include "torifold/delzant.hpp"
#include "torifold/fan.hpp"
#include "torifold/io.hpp"
#include "torifold/local_model.hpp"
#include "torifold/morse.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace torifold {

namespace {

struct Options {
  bool json = false;
  std::string file;
  std::string second_file;
  bool symplectic = false;
  bool biholomorphic = false;
  std::string xi;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
};

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string format_polynomial(const Polynomial& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!s.empty()) s += " + ";
    const bool show_coeff = p[k] != 1 || k == 0;
    if (show_coeff) s += std::to_string(p[k]);
    if (k == 1) s += "x";
    if (k > 1) s += "x^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::string describe_face(const LabeledPolytope& p, const Face& f) {
  std::string s = "facets " + index_list(f.active);
  if (f.codim() == p.dim()) s += " vertex " + format_vector(p.vertices()[f.vertices.front()]);
  return s;
}

IntVector parse_direction(const std::string& text, std::size_t dim) {
  IntVector xi;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    std::stringstream ws(token);
    std::string part;
    while (ws >> part) {
      try {
        const Rational r = parse_rational(part);
        if (r.get_den() != 1) throw std::invalid_argument("not an integer");
        xi.push_back(r.get_num());
      } catch (const std::invalid_argument&) {
        throw ParseError("--xi: malformed integer '" + part + "'");
      }
    }
  }
  if (xi.size() != dim) {
    throw ParseError("--xi: expected " + std::to_string(dim) + " entries, got " + std::to_string(xi.size()));
  }
  return xi;
}

LabeledPolytope load(const std::string& path, std::ostream& err) {
  LabeledPolytope p = load_polytope(path);
  for (const auto& w : p.warnings()) err << "warning: " << path << ": " << w << "\n";
  return p;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  std::vector<std::string> labels;
  for (const auto& h : p.halfspaces()) labels.push_back(h.label.get_str());
  if (o.json) {
    Json j;
    j["valid"] = true;
    j["dim"] = p.dim();
    j["facets"] = p.facet_count();
    j["vertices"] = p.vertices().size();
    Json l = Json::array();
    for (const auto& h : p.halfspaces()) l.push_back(to_json(h.label));
    j["labels"] = std::move(l);
    j["warnings"] = p.warnings();
    emit(out, j);
    return kExitSuccess;
  }
  std::string joined;
  for (std::size_t i = 0; i < labels.size(); ++i) joined += (i ? ", " : "") + labels[i];
  out << "simple, rational, bounded; facets labeled " << joined << "\n";
  out << "dimension " << p.dim() << ", " << p.facet_count() << " facets, " << p.vertices().size() << " vertices\n";
  return kExitSuccess;
}

int cmd_vertices(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  if (o.json) {
    Json verts = Json::array();
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      Json e;
      e["point"] = to_json(p.vertices()[v]);
      e["facets"] = p.vertex_facets(v);
      verts.push_back(std::move(e));
    }
    Json j;
    j["vertices"] = std::move(verts);
    emit(out, j);
    return kExitSuccess;
  }
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    out << "v" << v << " " << format_vector(p.vertices()[v]) << " facets " << index_list(p.vertex_facets(v)) << "\n";
  }
  return kExitSuccess;
}

int cmd_faces(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  if (o.json) {
    Json faces = Json::array();
    for (const auto& f : p.faces()) {
      Json e;
      e["facets"] = f.active;
      e["codim"] = f.codim();
      e["vertices"] = f.vertices;
      faces.push_back(std::move(e));
    }
    Json j;
    j["faces"] = std::move(faces);
    emit(out, j);
    return kExitSuccess;
  }
  for (const auto& f : p.faces()) {
    out << "face " << index_list(f.active) << " codim " << f.codim() << " vertices " << index_list(f.vertices) << "\n";
  }
  return kExitSuccess;
}

int cmd_structure_groups(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  Json rows = Json::array();
  for (auto idx : p.proper_face_indices()) {
    const Face& f = p.faces()[idx];
    const FiniteAbelianGroup g = structure_group(p, f);
    if (o.json) {
      Json e;
      e["face"] = f.active;
      e["invariant_factors"] = to_json(g);
      rows.push_back(std::move(e));
    } else {
      out << describe_face(p, f) << ": " << g.to_string() << "\n";
    }
  }
  if (o.json) {
    Json j;
    j["structure_groups"] = std::move(rows);
    emit(out, j);
  }
  return kExitSuccess;
}

int cmd_fan(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  const Fan fan = build_fan(p, true);
  if (o.json) {
    emit(out, to_json(fan));
    return kExitSuccess;
  }
  std::string rays;
  for (const auto& r : fan.rays()) rays += (rays.empty() ? "" : ", ") + format_vector(r);
  out << "rays: " << rays << "\n";
  for (const auto& c : fan.cones) {
    std::string gens;
    for (const auto& g : c.generators) gens += (gens.empty() ? "" : ", ") + format_vector(g);
    out << "cone [" << gens << "]\n";
  }
  return kExitSuccess;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  const LabeledPolytope q = load(o.second_file, err);
  const IsomorphismResult iso = compare_labeled(p, q);
  const bool fans = fans_equal(build_fan(p), build_fan(q));
  if (o.json) {
    Json j;
    j["mode"] = o.symplectic ? "symplectic" : "biholomorphic";
    j["symplectic"] = iso.translation.has_value();
    j["translation"] = iso.translation ? to_json(*iso.translation) : Json(nullptr);
    j["reason"] = iso.reason;
    j["biholomorphic"] = fans;
    emit(out, j);
    return kExitSuccess;
  }
  const std::string symp = iso ? "symplectomorphic (translation " + format_vector(*iso.translation) + ")"
                               : "NOT symplectomorphic (" + iso.reason + ")";
  const std::string bihol = fans ? "fans equal" : "fans differ";
  if (o.symplectic) {
    out << symp << "; " << bihol << "\n";
  } else {
    out << bihol << "; " << symp << "\n";
  }
  return kExitSuccess;
}

int cmd_delzant(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  const DelzantData d = build_construction(p);
  const Json report = delzant_report(d, p);
  if (o.json) {
    emit(out, report);
    return kExitSuccess;
  }
  out << "projection (" << d.dim() << " x " << d.facet_count() << "):\n";
  for (std::size_t r = 0; r < d.projection.rows(); ++r) out << "  " << format_vector(d.projection.row_vector(r)) << "\n";
  out << "scaled offsets: " << format_vector(d.scaled_offsets) << "\n";
  out << "kernel basis:\n";
  for (std::size_t r = 0; r < d.kernel_basis.rows(); ++r) {
    out << "  " << format_vector(d.kernel_basis.row_vector(r)) << "\n";
  }
  out << "level: " << format_vector(d.level) << "\n";
  const KernelGroupInfo k = kernel_group(d);
  out << "K: torus dimension " << k.torus_dim << ", component group " << k.component_group.to_string() << "\n";
  const RegularityReport reg = verify_regular_level(d, p);
  out << "regular level: " << (reg.regular ? "yes" : "NO (" + reg.failure + ")") << ", max stabilizer order "
      << reg.max_stabilizer_order.get_str() << "\n";
  out << "stabilizers:\n";
  for (auto idx : p.proper_face_indices()) {
    const Face& f = p.faces()[idx];
    out << "  " << describe_face(p, f) << ": " << face_stabilizer(d, f).to_string() << "\n";
  }
  return reg.regular ? kExitSuccess : kExitInternal;
}

int cmd_stabilizers(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  const DelzantData d = build_construction(p);
  bool agree_all = true;
  Json rows = Json::array();
  for (auto idx : p.proper_face_indices()) {
    const Face& f = p.faces()[idx];
    const FiniteAbelianGroup kz = face_stabilizer(d, f);
    const FiniteAbelianGroup gamma = structure_group(p, f);
    const bool agree = kz == gamma;
    agree_all = agree_all && agree;
    if (o.json) {
      Json e;
      e["face"] = f.active;
      e["kernel_stabilizer"] = to_json(kz);
      e["structure_group"] = to_json(gamma);
      e["agree"] = agree;
      rows.push_back(std::move(e));
    } else {
      out << describe_face(p, f) << ": K_z " << kz.to_string() << ", structure group " << gamma.to_string()
          << (agree ? "" : "  <-- MISMATCH") << "\n";
    }
  }
  const std::string verdict = agree_all ? "oracles agree" : "oracles DISAGREE";
  if (o.json) {
    Json j;
    j["stabilizers"] = std::move(rows);
    j["verdict"] = verdict;
    emit(out, j);
  } else {
    out << "verdict: " << verdict << "\n";
  }
  return agree_all ? kExitSuccess : kExitInternal;
}

int cmd_betti(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  const IntVector xi = o.xi.empty() ? random_generic_direction(p, o.seed) : parse_direction(o.xi, p.dim());
  const MorseReport r = morse_report(p, xi);
  const auto q = morse_inequality_check(r.morse_poly, r.poincare);
  const bool perfect = q && q->empty();
  if (o.json) {
    emit(out, to_json(r));
  } else {
    out << "xi = " << format_vector(xi) << "\n";
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      out << "v" << v << " " << format_vector(p.vertices()[v]) << ": index " << r.indices[v] << "\n";
    }
    out << "morse polynomial: " << format_polynomial(r.morse_poly) << "\n";
    out << "poincare polynomial: " << format_polynomial(r.poincare) << "\n";
    std::string list;
    for (auto c : r.poincare) list += (list.empty() ? "" : ", ") + std::to_string(c);
    out << "betti numbers: [" << list << "]\n";
  }
  if (!perfect) {
    err << "internal error: Morse polynomial differs from the face-number Betti numbers\n";
    return kExitInternal;
  }
  return kExitSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledPolytope p = load(o.file, err);
  const DelzantData d = build_construction(p);
  const auto samples = random_interior_points(p, o.samples, o.seed);
  const ReductionReport r = verify_reduction_invariants(d, p, samples);
  if (o.json) {
    Json j;
    j["pass"] = r.pass;
    j["samples"] = r.samples_checked;
    j["seed"] = o.seed;
    j["level"] = to_json(d.level);
    j["vertices_checked"] = r.vertices_checked;
    j["vertices_attained"] = r.vertices_attained;
    j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    emit(out, j);
  } else if (r.pass) {
    out << "pass: " << r.samples_checked << " samples on level " << format_vector(d.level) << ", all "
        << r.vertices_checked << " vertices attained\n";
  } else {
    out << "FAIL: " << *r.counterexample << "\n";
  }
  return r.pass ? kExitSuccess : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Labeled polytopes and compact symplectic toric orbifolds", "torifold"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  std::function<int()> action;
  auto file_command = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Polytope JSON file")->required();
    sub->callback([&action, fn, &o, &out, &err] { action = [fn, &o, &out, &err] { return fn(o, out, err); }; });
    return sub;
  };

  file_command("validate", "Validate a labeled polytope", cmd_validate);
  file_command("vertices", "List vertices with their facets", cmd_vertices);
  file_command("faces", "List the face lattice", cmd_faces);
  file_command("structure-groups", "Orbifold structure group of every proper face", cmd_structure_groups);
  file_command("fan", "Fan of dual cones", cmd_fan);
  file_command("delzant", "Reduction data: projection, kernel, level, stabilizers", cmd_delzant);
  file_command("stabilizers", "Kernel stabilizers against structure groups", cmd_stabilizers);

  CLI::App* compare = app.add_subcommand("compare", "Compare two labeled polytopes");
  compare->add_option("file1", o.file, "First polytope")->required();
  compare->add_option("file2", o.second_file, "Second polytope")->required();
  auto* symp = compare->add_flag("--symplectic", o.symplectic, "Labeled-polytope isomorphism");
  auto* bihol = compare->add_flag("--biholomorphic", o.biholomorphic, "Fan equality");
  symp->excludes(bihol);
  compare->callback([&] {
    if (!o.symplectic && !o.biholomorphic) throw CLI::ValidationError("compare", "one of --symplectic, --biholomorphic is required");
    action = [&] { return cmd_compare(o, out, err); };
  });

  CLI::App* betti = app.add_subcommand("betti", "Morse indices and Betti numbers");
  betti->add_option("file", o.file, "Polytope JSON file")->required();
  betti->add_option("--xi", o.xi, "Generic integer direction, e.g. 1,2 (random when omitted)");
  betti->add_option("--seed", o.seed, "Seed for the random direction")->capture_default_str();
  betti->callback([&] { action = [&] { return cmd_betti(o, out, err); }; });

  CLI::App* verify = app.add_subcommand("verify", "Check the reduction invariants on random samples");
  verify->add_option("file", o.file, "Polytope JSON file")->required();
  verify->add_option("--samples", o.samples, "Number of samples")->capture_default_str();
  verify->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(o, out, err); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    return action();
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    if (o.json) {
      Json j;
      j["valid"] = false;
      j["error"] = e.what();
      emit(out, j);
    }
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace torifold
