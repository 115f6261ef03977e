// Command-line front end: generate instances, inspect them, compute and
// verify certificates, and draw plane graphs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "facecover/facecover.hpp"

using namespace facecover;

namespace {

enum Exit { ok = 0, rejected = 1, malformed = 2, precondition = 3, timed_out = 5, model_found = 10, internal = 70 };

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write '" + path + "'");
  out << text;
}

bool is_rg(const std::string& text) {
  std::istringstream is(text);
  auto lines = detail::content_lines(is);
  return !lines.empty() && detail::tokens(lines[0]) == std::vector<std::string>{"rg", "1"};
}

RotationEmbedding load_emb(const std::string& path) { return parse_emb(slurp(path)); }

RootedGraph load_graph(const std::string& path) {
  std::string text = slurp(path);
  std::istringstream is(text);
  if (is_rg(text)) return read_rg(is);
  return RootedGraph::of(read_emb(is));
}

int to_int(const std::string& s, const std::string& what) { return static_cast<int>(detail::to_int(s, what)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face covers and rooted K_{2,t} minors of embedded graphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker count (pieces are processed in order; accepted for script compatibility)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance (.emb, or .rg for abstract families)");
  std::vector<std::string> gen_args;
  std::string gen_out = "-", gen_hint;
  unsigned seed = 1;
  double root_fraction = 0.5;
  bool all_roots = false;
  gen->add_option("family", gen_args,
                  "windmill T | bagel N | wheel N | tetrahedron | icosahedron | torus M | klein M | apex K | "
                  "triangulation N | diamond R | projective R | complete N | cycle N")
      ->required()
      ->expected(1, 2);
  gen->add_option("-o,--output", gen_out, "Output file, '-' for stdout");
  gen->add_option("--seed", seed, "Seed for random families");
  gen->add_option("--root-fraction", root_fraction, "Root probability for random triangulations");
  gen->add_flag("--all-roots", all_roots, "Root every vertex");
  gen->add_option("--hint", gen_hint, "Write the K4-subdivision sidecar (projective family)");

  // info
  auto* info = app.add_subcommand("info", "Counts, genus, face-width, connectivity, polyhedrality");
  std::string info_in = "-";
  info->add_option("file", info_in, "Input .emb, '-' for stdin");

  // cover
  auto* cover = app.add_subcommand("cover", "Face cover of the roots");
  std::string cover_in = "-", cover_mode = "exact", cover_out = "-";
  cover->add_option("file", cover_in, "Input .emb, '-' for stdin");
  cover->add_option("--mode", cover_mode, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));
  cover->add_option("-o,--output", cover_out, "Certificate file");

  // dichotomy
  auto* dich = app.add_subcommand("dichotomy", "Face cover or rooted K_{2,t} model");
  std::string dich_in = "-", dich_out = "-", dich_hint, dich_report;
  int dich_t = 0;
  double dich_budget = 120;
  dich->add_option("file", dich_in, "Input .emb, '-' for stdin");
  dich->add_option("-t", dich_t, "t of K_{2,t}")->required()->check(CLI::PositiveNumber);
  dich->add_option("-o,--output", dich_out, "Certificate file");
  dich->add_option("--hint", dich_hint, "K4-subdivision sidecar for projective-plane inputs");
  dich->add_option("--report", dich_report, "Write the run report to this file");
  dich->add_option("--budget", dich_budget, "Seconds for the exhaustive endgame");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exhaustive search for a rooted K_{2,t} model");
  std::string orc_in = "-";
  int orc_t = 0;
  double orc_budget = 60;
  orc->add_option("file", orc_in, "Input .emb or .rg, '-' for stdin");
  orc->add_option("-t", orc_t, "t of K_{2,t}")->required()->check(CLI::PositiveNumber);
  orc->add_option("--budget", orc_budget, "Seconds, 0 for no limit");

  // verify
  auto* ver = app.add_subcommand("verify", "Check a certificate against an instance");
  std::string ver_in, ver_cert;
  ver->add_option("file", ver_in, "Instance .emb or .rg")->required();
  ver->add_option("certificate", ver_cert, "Certificate file, '-' for stdin")->required();

  // draw
  auto* draw = app.add_subcommand("draw", "SVG Schnyder drawing of a 3-connected plane graph");
  std::string draw_in = "-", draw_out = "-";
  draw->add_option("file", draw_in, "Input .emb, '-' for stdin");
  draw->add_option("-o,--output", draw_out, "SVG file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return malformed;
  }

  try {
    if (*gen) {
      const std::string& fam = gen_args[0];
      auto arg = [&]() {
        if (gen_args.size() < 2) throw MalformedInput("family '" + fam + "' needs a size argument");
        return to_int(gen_args[1], fam + " size");
      };
      auto finish = [&](RotationEmbedding g) {
        if (all_roots) g.set_roots(RootSet::all(g.num_vertices()));
        emit(gen_out, write_emb(g));
        return ok;
      };
      if (fam == "windmill") return finish(windmill(arg()));
      if (fam == "bagel") return finish(bagel(arg()));
      if (fam == "wheel") return finish(wheel(arg()));
      if (fam == "tetrahedron") return finish(tetrahedron());
      if (fam == "icosahedron") return finish(icosahedron());
      if (fam == "torus") return finish(torus_grid(arg()));
      if (fam == "klein") return finish(klein_grid(arg()));
      if (fam == "apex") return finish(apex_grid(arg()));
      if (fam == "triangulation") return finish(random_triangulation(arg(), seed, root_fraction));
      if (fam == "diamond") return finish(diamond_grid(arg()));
      if (fam == "projective") {
        auto pg = projective_diamond_grid(arg());
        if (!gen_hint.empty()) {
          if (pg.hint.branch.empty()) throw PreconditionError("no hint for this size (needs even r >= 8)");
          emit(gen_hint, write_hint(pg.hint));
        }
        return finish(pg.graph);
      }
      if (fam == "complete" || fam == "cycle") {
        RootedGraph g = fam == "complete" ? complete_graph(arg()) : cycle_graph(arg());
        if (all_roots) g.roots = RootSet::all(g.n);
        emit(gen_out, write_rg(g));
        return ok;
      }
      throw MalformedInput("unknown family '" + fam + "'");
    }

    if (*info) {
      RotationEmbedding g = load_emb(info_in);
      FaceTrace ft = trace_faces(g);
      auto adj = g.adjacency();
      int eg = euler_genus(g);
      std::cout << "V " << g.num_vertices() << "\nE " << g.num_edges() << "\nF " << ft.size() << "\n";
      std::cout << "euler_genus " << eg << "\norientable " << (is_orientable(g) ? "yes" : "no") << "\n";
      FaceWidth fw = face_width(g);
      std::cout << "face_width " << (fw.infinite() ? std::string("infinity") : std::to_string(fw.finite())) << "\n";
      int k = 0;
      while (k < 5 && is_k_connected(adj, k + 1)) ++k;
      std::cout << "connectivity " << (k == 5 ? ">=5" : std::to_string(k)) << "\n";
      std::cout << "simple " << (g.is_simple() ? "yes" : "no") << "\n";
      std::cout << "polyhedral " << (check_polyhedral(g) ? "yes" : "no") << "\n";
      std::cout << "roots " << g.roots().size() << "\n";
      return ok;
    }

    if (*cover) {
      RotationEmbedding g = load_emb(cover_in);
      SearchStats st;
      FaceCover c = min_face_cover(g, cover_mode == "exact" ? CoverMode::exact : CoverMode::greedy, &st);
      if (!verify_cover(g, trace_faces(g), c).ok) throw InvariantViolation("cover failed its own check");
      emit(cover_out, to_string(c) + "\n");
      std::cerr << "size " << c.size() << (st.optimal ? " (minimum)" : "") << "\n";
      return ok;
    }

    if (*dich) {
      RotationEmbedding g = load_emb(dich_in);
      Certificate cert;
      std::string report;
      if (euler_genus(g) == 0) {
        DichotomyOptions o;
        o.oracle_budget = dich_budget;
        DichotomyResult r = plane_dichotomy(g, dich_t, o);
        cert = r.certificate;
        report = "branch " + r.branch + "\n" + r.report;
      } else {
        GenusOptions o;
        o.dichotomy.oracle_budget = dich_budget;
        ProjectiveHint hint;
        if (!dich_hint.empty()) {
          std::istringstream is(slurp(dich_hint));
          hint = read_hint(is);
          o.hint = &hint;
        }
        GenusResult r = genus_face_cover(g, dich_t, o);
        cert = r.certificate;
        report = "route " + r.route + "\n" + r.report;
      }
      emit(dich_out, to_string(cert) + "\n");
      if (!dich_report.empty()) emit(dich_report, report);
      return std::holds_alternative<RootedK2tModel>(cert) ? model_found : ok;
    }

    if (*orc) {
      RootedGraph g = load_graph(orc_in);
      OracleResult r = brute_force_rooted_k2t(g, orc_t, orc_budget);
      if (r.status == OracleStatus::found) {
        std::cout << to_string(Certificate{*r.model}) << "\n";
        return model_found;
      }
      std::cout << (r.status == OracleStatus::absent ? "none" : "timeout") << "\n";
      return r.status == OracleStatus::absent ? ok : timed_out;
    }

    if (*ver) {
      std::string text = slurp(ver_in);
      Certificate c = parse_certificate(slurp(ver_cert));
      Verdict v;
      if (auto* m = std::get_if<RootedK2tModel>(&c)) {
        std::istringstream is(text);
        RootedGraph g = is_rg(text) ? read_rg(is) : RootedGraph::of(read_emb(is));
        v = verify_model(g, *m);
      } else {
        if (is_rg(text)) throw MalformedInput("a face cover needs an embedded instance");
        RotationEmbedding g = parse_emb(text);
        v = verify_cover(g, trace_faces(g), std::get<FaceCover>(c));
      }
      if (v.ok) {
        std::cout << "accepted\n";
        return ok;
      }
      std::cout << "rejected\n";
      for (auto& d : v.diagnostics) std::cout << "  " << d << "\n";
      return rejected;
    }

    if (*draw) {
      emit(draw_out, schnyder_svg(load_emb(draw_in)));
      return ok;
    }
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return malformed;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return precondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return internal;
  }
  return ok;
}
