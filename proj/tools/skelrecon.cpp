// skelrecon: generate polytopes, build lattices and skeletons, reconstruct
// facets from 2-skeletons or graphs, compare, verify and benchmark.
//
// Exit codes: 0 success, 1 negative verdict or failed check, 2 bad input.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "checks.hpp"
#include "skelrecon/constructions.hpp"
#include "skelrecon/error.hpp"
#include "skelrecon/io.hpp"
#include "skelrecon/iso.hpp"
#include "skelrecon/lattice.hpp"
#include "skelrecon/recon_2skel.hpp"
#include "skelrecon/recon_graph.hpp"

using namespace skelrecon;

namespace {

// Run report on stderr (with --report): command echo, input digests and
// phase timings. Stdout stays byte-identical between runs.
struct Report {
  bool enabled = false;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, double>> phases;

  template <class F>
  auto phase(const std::string& name, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto finish = [&] {
      phases.emplace_back(
          name, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count());
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto r = f();
      finish();
      return r;
    }
  }

  void flush() const {
    if (!enabled) return;
    std::fprintf(stderr, "# command: %s\n", command.c_str());
    for (const auto& [path, digest] : inputs)
      std::fprintf(stderr, "# input %s fnv1a64=%s\n", path.c_str(), digest.c_str());
    for (const auto& [name, ms] : phases) std::fprintf(stderr, "# time %s %.3f ms\n", name.c_str(), ms);
  }
};

Report report;

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string load(const std::string& path) {
  auto text = read_file(path);
  report.inputs.emplace_back(path, digest(text));
  return text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
  out << text;
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::string facets_text(int d, int n, const std::vector<VertexSet>& facets) {
  return write_incidence(PolytopeSpec{d, n, facets});
}

std::string commented(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) out += "# " + line + "\n";
  return out;
}

// ---- gen

struct GenArgs {
  std::string family;
  int dim = 0, size = 0, pyramids = 0, wedge = -1;
  bool prism = false, bipyramid = false;
  std::vector<int> truncate_at;
  std::string format = "incidence";
  int rank = 2;
  std::string out;
};

int run_gen(const GenArgs& a) {
  PolytopeSpec s;
  if (a.family == "simplex") s = simplex(a.dim);
  else if (a.family == "cube") s = cube(a.dim);
  else if (a.family == "polygon") s = polygon(a.size);
  else if (a.family == "polygon-prism") s = polygon_prism(a.size);
  else if (a.family == "q1") s = q1(a.dim).spec;
  else if (a.family == "q2") s = q2(a.dim).spec;
  else throw Error(ErrorCode::ParseError, "unknown family " + a.family);
  if (a.prism) s = prism(s);
  if (a.wedge >= 0) s = wedge(s, a.wedge);
  if (a.bipyramid) s = bipyramid(s);
  if (a.pyramids > 0) s = multifold_pyramid(s, a.pyramids);
  if (!a.truncate_at.empty()) {
    VertexSet face(a.truncate_at.begin(), a.truncate_at.end());
    std::sort(face.begin(), face.end());
    s = truncate(build_face_lattice(s), face).spec;
  }
  if (a.format == "incidence") {
    emit(write_incidence(s), a.out);
  } else if (a.format == "graph") {
    emit(write_edge_list(build_face_lattice(s).graph(), s.d), a.out);
  } else if (a.format == "skeleton") {
    emit(write_skeleton(k_skeleton(build_face_lattice(s), a.rank)), a.out);
  } else {
    throw Error(ErrorCode::ParseError, "unknown format " + a.format);
  }
  return 0;
}

// ---- lattice / skeleton

int run_lattice(const std::string& path) {
  const auto spec = parse_incidence(load(path));
  LatticeBuildOptions lenient;
  lenient.require_polytope_spec = false;
  std::cout << "d " << spec.d << "\nvertices " << spec.n << "\n";
  FaceLattice lat;
  try {
    lat = report.phase("lattice", [&] { return build_face_lattice(spec, lenient); });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGraded) throw;
    std::cout << "check graded fail " << e.what() << "\nverdict fail\n";
    return 1;
  }
  std::cout << "f-vector";
  for (long long f : lat.f_vector()) std::cout << ' ' << f;
  std::cout << "\n";
  const Graph g = lat.graph();
  VertexSet nonsimple;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) > spec.d) nonsimple.push_back(v);
  std::cout << "nonsimple " << join(nonsimple) << "\n";
  const auto rep = report.phase("validate", [&] { return validate(lat); });
  for (const auto& c : rep.checks)
    std::cout << "check " << c.name << ' ' << (c.passed ? "pass" : "fail")
              << (c.detail.empty() ? "" : " " + c.detail) << "\n";
  std::cout << "# necessary conditions only; passing does not certify polytopality\n";
  std::cout << "verdict " << (rep.passed() ? "pass" : "fail") << "\n";
  return rep.passed() ? 0 : 1;
}

int run_skeleton(const std::string& path, int rank, const std::string& out) {
  const auto spec = parse_incidence(load(path));
  const auto lat = report.phase("lattice", [&] { return build_face_lattice(spec); });
  if (rank == 1)
    emit(write_edge_list(lat.graph(), spec.d), out);
  else
    emit(write_skeleton(k_skeleton(lat, rank)), out);
  return 0;
}

// ---- recon2

int run_recon2(const std::string& path, const std::string& parity) {
  const auto sk = parse_skeleton(load(path));
  std::optional<Parity> p;
  if (parity == "even") p = Parity::Even;
  else if (parity == "odd") p = Parity::Odd;
  else if (!parity.empty()) throw Error(ErrorCode::ParseError, "parity must be even or odd");
  const auto out = report.phase("reconstruct", [&] { return reconstruct(sk, sk.d, p); });
  const int n = sk.graph.num_vertices();
  if (out.status == ReconstructionOutcome::Status::Complete) {
    std::cout << facets_text(sk.d, n, out.facets);
    return 0;
  }
  const auto& amb = *out.ambiguity;
  std::cout << "# ambiguous: traced sets {" << join(amb.first) << "} and {" << join(amb.second)
            << "} meet in the nonsimple vertices {" << join(amb.separator) << "}\n"
            << "# rerun with --parity even|odd to choose a completion\n"
            << "# completion with " << amb.split.size() << " facets\n"
            << commented(facets_text(sk.d, n, amb.split)) << "# completion with "
            << amb.merged.size() << " facets\n"
            << commented(facets_text(sk.d, n, amb.merged));
  return 1;
}

// ---- recong

struct RecongArgs {
  std::string path;
  int dim = 0;
  std::string method = "claims";
  bool certificate = false;
  bool force = false;
};

int run_recong(const RecongArgs& a) {
  const auto el = parse_edge_list(load(a.path));
  const int d = a.dim > 0 ? a.dim : el.d.value_or(0);
  if (d <= 0) throw Error(ErrorCode::ParseError, "dimension missing: pass --dim or a 'd' line");
  const Graph& g = el.graph;
  const int n = g.num_vertices();
  const auto classes = classify_vertices(g, d);

  if (classes.nonsimple.size() <= 1) {
    const auto ts = report.phase("two-system", [&] { return max_two_system(g, d); });
    const auto facets = report.phase("reconstruct", [&] {
      return reconstruct(two_skeleton(d, g, ts.sets), d).facets;
    });
    std::cout << facets_text(d, n, facets);
    if (a.certificate)
      std::cout << "# 2-system size " << ts.sets.size() << "\n# min f2 over orientations "
                << ts.certificate << "\n";
    return 0;
  }

  GraphReconOptions options;
  if (a.force) options.max_vertices = std::numeric_limits<std::size_t>::max();
  else if (static_cast<std::size_t>(n) > options.max_vertices)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds the sweep bound of " +
                                         std::to_string(options.max_vertices) +
                                         " (use --force or SKELRECON_MAX_N)");

  std::optional<TwoNonsimpleReport> claims;
  std::optional<TruncationReport> trunc;
  if (a.method == "claims" || a.method == "both")
    claims = report.phase("claims", [&] { return reconstruct_two_nonsimple(g, d, options); });
  if (a.method == "truncation" || a.method == "both")
    trunc = report.phase("truncation",
                         [&] { return reconstruct_two_nonsimple_via_truncation(g, d, options); });
  if (!claims && !trunc) throw Error(ErrorCode::ParseError, "unknown method " + a.method);

  const auto& facets = claims ? claims->facets : trunc->facets;
  std::cout << facets_text(d, n, facets);
  if (a.certificate && claims) {
    const auto& c = *claims;
    const auto& f = c.families;
    std::cout << "# nonsimple u=" << c.u << " v=" << c.v << "\n"
              << "# min with u source, v sink: " << c.min_u << "\n"
              << "# min with v source, u sink: " << c.min_v << "\n"
              << "# facets avoiding u and v, expected: " << c.expected_empty << "\n";
    if (c.min_empty) std::cout << "# min for facets avoiding u and v: " << *c.min_empty << "\n";
    if (c.min_uv) std::cout << "# min unconstrained: " << *c.min_uv << "\n";
    std::cout << "# facets = " << f.u_minus_v.size() << " (u not v) + " << f.v_minus_u.size()
              << " (v not u) + " << f.empty.size() << " (neither) + " << f.uv.size()
              << " (both) = " << c.facets.size() << "\n";
  }
  if (a.certificate && trunc)
    std::cout << "# truncation at " << (trunc->adjacent ? "edge" : "vertex") << ", "
              << trunc->two_faces.size() << " 2-faces found, " << trunc->truncated_vertices
              << " vertices after truncation" << (trunc->repaired_edge ? ", one edge added" : "")
              << "\n";
  if (claims && trunc && claims->facets != trunc->facets) {
    std::cerr << "methods disagree\n" << commented(facets_text(d, n, trunc->facets));
    return 1;
  }
  return 0;
}

// ---- iso

int run_iso(const std::string& pa, const std::string& pb, const std::string& rank) {
  const auto a = parse_incidence(load(pa)), b = parse_incidence(load(pb));
  const auto la = build_face_lattice(a), lb = build_face_lattice(b);
  IsoResult r;
  if (rank == "lattice") {
    r = report.phase("iso", [&] { return isomorphic(la, lb); });
  } else {
    int k = 0;
    try {
      k = std::stoi(rank);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "--rank takes an integer or 'lattice'");
    }
    if (k == 1)
      r = report.phase("iso", [&] { return isomorphic(la.graph(), lb.graph()); });
    else
      r = report.phase("iso", [&] { return isomorphic(k_skeleton(la, k), k_skeleton(lb, k)); });
  }
  if (r.isomorphic) {
    std::cout << "isomorphic\n";
    for (int v = 0; v < static_cast<int>(r.witness.size()); ++v)
      std::cout << "map " << v << ' ' << r.witness[v] << "\n";
    return 0;
  }
  std::cout << "not isomorphic: " << to_string(r.obstruction)
            << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
  return 1;
}

// ---- verify / bench

int run_verify(const std::string& dims, bool timing) {
  checks::SuiteOptions o;
  o.timing = timing;
  const auto dots = dims.find("..");
  try {
    if (dots == std::string::npos) {
      o.dmin = o.dmax = std::stoi(dims);
    } else {
      o.dmin = std::stoi(dims.substr(0, dots));
      o.dmax = std::stoi(dims.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "--dims takes a..b");
  }
  if (o.dmin > o.dmax) throw Error(ErrorCode::ParseError, "--dims range is empty");
  bool ok = true;
  for (const auto& line : report.phase("verify", [&] { return checks::run_all(o); })) {
    std::cout << line.id << ' ' << (line.pass ? "PASS" : "FAIL") << ' ' << line.detail << "\n";
    ok &= line.pass;
  }
  return ok ? 0 : 1;
}

int run_bench(const std::vector<int>& sizes, int repeats) {
  for (int m : sizes)
    if (m < 3) throw Error(ErrorCode::ParseError, "sizes must be >= 3");
  if (repeats < 1) throw Error(ErrorCode::ParseError, "--repeats must be positive");
  const auto rows = checks::bench_prisms(sizes, repeats);
  std::cout << "m,vertices,median_ms\n";
  for (const auto& r : rows) std::printf("%d,%d,%.4f\n", r.m, r.vertices, r.median_ms);
  if (rows.size() >= 2) std::printf("# slope %.3f\n", checks::loglog_slope(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial polytope reconstruction from skeletons and graphs"};
  app.require_subcommand(1);
  app.add_flag("--report", report.enabled, "Print command, input digests and timings to stderr");
  for (int i = 0; i < argc; ++i) report.command += (i ? " " : "") + std::string(argv[i]);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a polytope from a family");
  gen_cmd->add_option("--family", gen.family, "simplex|cube|polygon|polygon-prism|q1|q2")->required();
  gen_cmd->add_option("--dim", gen.dim, "Dimension (simplex, cube, q1, q2)");
  gen_cmd->add_option("--size", gen.size, "Polygon size (polygon, polygon-prism)");
  gen_cmd->add_flag("--prism", gen.prism, "Take the prism");
  gen_cmd->add_option("--wedge", gen.wedge, "Wedge over the facet with this index");
  gen_cmd->add_flag("--bipyramid", gen.bipyramid, "Take the bipyramid");
  gen_cmd->add_option("--pyramids", gen.pyramids, "Iterated pyramid count");
  gen_cmd->add_option("--truncate", gen.truncate_at, "Truncate at the face with these vertices")
      ->delimiter(',');
  gen_cmd->add_option("--format", gen.format, "incidence|skeleton|graph");
  gen_cmd->add_option("--rank", gen.rank, "Skeleton rank for --format skeleton");
  gen_cmd->add_option("-o,--out", gen.out, "Output file");

  std::string lattice_path;
  auto* lattice_cmd = app.add_subcommand("lattice", "Print f-vector and validation report");
  lattice_cmd->add_option("file", lattice_path)->required();

  std::string skel_path, skel_out;
  int skel_rank = 2;
  auto* skel_cmd = app.add_subcommand("skeleton", "Extract the faces of rank <= k");
  skel_cmd->add_option("file", skel_path)->required();
  skel_cmd->add_option("--rank", skel_rank)->check(CLI::PositiveNumber);
  skel_cmd->add_option("-o,--out", skel_out, "Output file");

  std::string r2_path, parity;
  auto* r2_cmd = app.add_subcommand("recon2", "Facets from a 2-skeleton");
  r2_cmd->add_option("file", r2_path)->required();
  r2_cmd->add_option("--parity", parity, "even|odd facet count for the ambiguous case");

  RecongArgs rg;
  auto* rg_cmd = app.add_subcommand("recong", "Facets from a graph with <= 2 nonsimple vertices");
  rg_cmd->add_option("file", rg.path)->required();
  rg_cmd->add_option("--dim", rg.dim, "Dimension (else the file's d line)");
  rg_cmd->add_option("--method", rg.method, "claims|truncation|both");
  rg_cmd->add_flag("--certificate", rg.certificate, "Print objective minima and facet counts");
  rg_cmd->add_flag("--force", rg.force, "Lift the vertex bound on orientation sweeps");

  std::string iso_a, iso_b, iso_rank = "lattice";
  auto* iso_cmd = app.add_subcommand("iso", "Compare two polytopes up to rank k");
  iso_cmd->add_option("a", iso_a)->required();
  iso_cmd->add_option("b", iso_b)->required();
  iso_cmd->add_option("--rank", iso_rank, "k or 'lattice'");

  std::string dims = "4..7";
  bool no_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_option("--dims", dims, "Dimension range a..b");
  verify_cmd->add_flag("--no-timing", no_timing, "Skip the scaling check");

  std::vector<int> sizes{1024, 2048, 4096, 8192, 16384};
  int repeats = 5;
  auto* bench_cmd = app.add_subcommand("bench", "Time 2-skeleton reconstruction on prisms (CSV)");
  bench_cmd->add_option("--sizes", sizes)->delimiter(',');
  bench_cmd->add_option("--repeats", repeats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  try {
    if (*gen_cmd) code = run_gen(gen);
    else if (*lattice_cmd) code = run_lattice(lattice_path);
    else if (*skel_cmd) code = run_skeleton(skel_path, skel_rank, skel_out);
    else if (*r2_cmd) code = run_recon2(r2_path, parity);
    else if (*rg_cmd) code = run_recong(rg);
    else if (*iso_cmd) code = run_iso(iso_a, iso_b, iso_rank);
    else if (*verify_cmd) code = run_verify(dims, !no_timing);
    else if (*bench_cmd) code = run_bench(sizes, repeats);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  report.flush();
  return code;
}
