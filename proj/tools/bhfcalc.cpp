// Command-line front end: algebra homology, the A' model, torus bimodule
// pipelines, Hochschild complexes, dualizing, structure checks, and diagram
// admissibility. All reports are deterministic text.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bhf/diagrams.hpp"
#include "bhf/hochschild.hpp"
#include "bhf/massey.hpp"
#include "bhf/morcx.hpp"
#include "bhf/torus.hpp"

using namespace bhf;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  out << text;
}

std::vector<DehnTwist> parse_word(const std::string& word) {
  std::vector<DehnTwist> out;
  for (char c : word) {
    if (c == ',' || c == ' ') continue;
    out.push_back(twist_from_letter(c));
  }
  return out;
}

Bimodule load_bimodule(const std::string& path) { return Bimodule::from_json(read_file(path), nullptr, nullptr); }

int run(int argc, char** argv) {
  CLI::App app{"bordered Heegaard Floer bimodule calculator"};
  app.require_subcommand(1);

  // algebra homology
  auto* alg = app.add_subcommand("algebra", "strands algebra computations");
  alg->require_subcommand(1);
  std::string pmc_spec = "torus";
  int strands_i = 0;
  std::string out_path;
  auto* hom = alg->add_subcommand("homology", "homology ranks of A(Z,i)");
  hom->add_option("--pmc", pmc_spec, "torus | split:k | antipodal:k | file");
  hom->add_option("--i", strands_i, "strands grading");
  hom->add_option("--out", out_path, "write a JSON report");
  hom->callback([&] {
    PointedMatchedCircle z = parse_pmc_spec(pmc_spec);
    Algebra a(z, strands_i);
    AlgebraHomology h = algebra_homology(a);
    std::cout << "algebra A(" << pmc_spec << "," << strands_i << "): dim " << a.dim() << "\n";
    std::cout << "homology rank " << h.total_rank() << "\n";
    std::ostringstream os;
    os << "{\"rank\":" << h.total_rank() << "}\n";
    write_output(out_path, os.str());
  });
  auto* aprime = alg->add_subcommand("aprime", "the multiplicity-one quotient model");
  aprime->add_option("--pmc", pmc_spec, "circle spec");
  aprime->add_option("--i", strands_i, "strands grading");
  aprime->callback([&] {
    PointedMatchedCircle z = parse_pmc_spec(pmc_spec);
    Algebra full(z, strands_i);
    Algebra quot(z, strands_i, true);
    std::cout << "dim A = " << full.dim() << ", dim A' = " << quot.dim() << "\n";
    std::cout << "homology ranks: " << algebra_homology(full).total_rank() << " and "
              << algebra_homology(quot).total_rank() << "\n";
  });

  // torus pipelines
  auto* torus = app.add_subcommand("torus", "genus-one bimodule pipelines");
  torus->require_subcommand(1);
  std::string word = "m,M";
  bool do_simplify = true;
  auto* mcg = torus->add_subcommand("mcg", "compose Dehn twist bimodules");
  mcg->add_option("--word", word, "letters m,M,l,L");
  mcg->add_flag("--simplify,!--no-simplify", do_simplify, "simplify after each step");
  mcg->add_option("--out", out_path, "write the bimodule as JSON");
  mcg->callback([&] {
    Bimodule b = mcg_word_bimodule(parse_word(word), do_simplify);
    StructureReport rep = check_structure(b);
    if (!rep.ok) throw std::runtime_error(rep.violation);
    Bimodule id = identity_DA(torus_algebra().alg);
    bool identity = b.num_gens() == 2 && b.table().size() == id.table().size();
    if (identity)
      std::cout << "identity bimodule (2 generators)\n";
    else
      std::cout << "bimodule with " << b.num_gens() << " generators, " << b.table().size()
                << " operations\n";
    write_output(out_path, b.to_json());
  });
  auto* dual_check = torus->add_subcommand("duality-check", "the genus-one duality example");
  dual_check->callback([&] {
    DualityExampleReport rep = duality_example_check();
    std::cout << "raw morphism basis: " << rep.raw_basis << "\n";
    std::cout << "homology rank: " << rep.homology_rank << "\n";
    std::cout << "relations: " << (rep.relations_ok ? "pass" : "FAIL") << "\n";
    std::cout << "simplified pattern: " << (rep.pattern_ok ? "pass" : "FAIL") << "\n";
    if (!rep.ok) throw std::runtime_error("duality example failed: " + rep.detail);
  });
  std::string constructor;
  auto* emit = torus->add_subcommand("emit", "write a built-in torus bimodule");
  emit->add_option("name", constructor, "cfaa-id | cfdd-big | cfdd-small | solid-torus-a | dd-identity")
      ->required();
  emit->add_option("--out", out_path, "output path");
  emit->callback([&] {
    const TorusAlgebra& t = torus_algebra();
    Bimodule b = constructor == "cfaa-id"        ? cfaa_id()
                 : constructor == "cfdd-big"     ? cfdd_id_big()
                 : constructor == "cfdd-small"   ? cfdd_id_small()
                 : constructor == "solid-torus-a" ? solid_torus_A()
                 : constructor == "dd-identity"  ? cfdd_identity(t.alg, t.alg_rev)
                                                  : throw std::runtime_error("unknown constructor");
    std::cout << b.describe() << "\n";
    write_output(out_path.empty() ? constructor + ".json" : out_path, b.to_json());
  });

  // hochschild
  auto* hh = app.add_subcommand("hochschild", "Hochschild complexes");
  std::string bimodule_path;
  int maxlen = 5;
  hh->add_option("--bimodule", bimodule_path, "bimodule JSON (AA or DA over one algebra)");
  hh->add_option("--word", word, "or: Dehn twist word for the DA pipeline")->excludes("--bimodule");
  hh->add_option("--maxlen", maxlen, "cyclic word truncation for AA input");
  hh->callback([&] {
    if (!bimodule_path.empty()) {
      Bimodule b = load_bimodule(bimodule_path);
      ChainComplex cx = b.left_tag() == Tag::A ? hochschild_AA(b, maxlen) : hochschild_DA(b);
      std::cout << "complex dimension " << cx.dim() << "\n";
      std::cout << "homology rank " << cx.homology_rank() << "\n";
    } else {
      Bimodule b = mcg_word_bimodule(parse_word(word), true);
      ChainComplex cx = hochschild_DA(b);
      std::cout << "tCH dimension " << cx.dim() << "\n";
      std::cout << "homology rank " << cx.homology_rank() << "\n";
    }
  });

  // dualize
  auto* dual = app.add_subcommand("dualize", "type D to type A through the diagonal bimodule");
  std::string typed_path;
  dual->add_option("--typeD", typed_path, "left type D module JSON")->required();
  dual->add_option("--pmc", pmc_spec, "circle spec of the D side");
  dual->add_option("--out", out_path, "write the simplified module");
  dual->callback([&] {
    PointedMatchedCircle z = parse_pmc_spec(pmc_spec);
    auto az = std::make_shared<Algebra>(z, 0);
    auto bz = std::make_shared<Algebra>(z.reversed(), 0);
    Bimodule n = Bimodule::from_json(read_file(typed_path), az, nullptr);
    DualizeResult r = dualize(n, az, bz);
    std::cout << "raw morphism basis " << r.raw_dim << ", homology rank " << r.homology_rank << "\n";
    Simplified s = simplify(r.module);
    std::cout << "simplified to " << s.reduced.num_gens() << " generators\n";
    write_output(out_path, s.reduced.to_json());
  });

  // structure check
  auto* check = app.add_subcommand("check", "structure equations, boundedness, optional gradings");
  check->add_option("--bimodule", bimodule_path, "bimodule JSON")->required();
  check->callback([&] {
    Bimodule b = load_bimodule(bimodule_path);
    StructureReport rep = check_structure(b);
    std::cout << b.describe() << "\n";
    std::cout << "structure equation: " << (rep.ok ? "pass" : "FAIL " + rep.violation) << "\n";
    auto name = [](Bounded v) { return v == Bounded::Yes ? "yes" : v == Bounded::No ? "no" : "unknown"; };
    std::cout << "bounded (operational/left/right): " << name(is_bounded(b, BoundFlavor::Operational)) << "/"
              << name(is_bounded(b, BoundFlavor::Left)) << "/" << name(is_bounded(b, BoundFlavor::Right))
              << "\n";
    if (!rep.ok) throw std::runtime_error("structure check failed");
  });

  // diagrams
  auto* diag = app.add_subcommand("diagram", "arced diagram computations");
  diag->require_subcommand(1);
  std::string diag_file, flavor = "full";
  auto* adm = diag->add_subcommand("admissible", "periodic domains and admissibility");
  adm->add_option("--file", diag_file, "diagram JSON or builtin name")->required();
  adm->add_option("--flavor", flavor, "full | left | right | provincial");
  adm->callback([&] {
    ArcedDiagram h = diag_file.find(".json") != std::string::npos ? ArcedDiagram::from_json(read_file(diag_file))
                                                                  : builtin_diagram(diag_file);
    DomainLattice l = periodic_domains(h);
    std::cout << "periodic domain rank " << l.basis.size() << "\n";
    AdmissibilityFlavor f = flavor == "left"        ? AdmissibilityFlavor::Left
                            : flavor == "right"     ? AdmissibilityFlavor::Right
                            : flavor == "provincial" ? AdmissibilityFlavor::Provincial
                                                     : AdmissibilityFlavor::Full;
    AdmissibilityReport rep = check_admissible(h, f);
    if (rep.admissible) {
      std::cout << "admissible; area form:";
      for (long long w : rep.area) std::cout << " " << w;
      std::cout << "\n";
    } else {
      std::cout << "not admissible; one-signed periodic domain:";
      for (long long w : rep.witness) std::cout << " " << w;
      std::cout << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
