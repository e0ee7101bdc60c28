// permpow: command-line front end.
//
// Exit codes: 0 success (power: symmetric; equal: equal), 1 negative verdict
// (power: not symmetric; equal: different; reduce: quotient not symmetric),
// 2 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "permpow/error.hpp"
#include "permpow/families.hpp"
#include "permpow/io.hpp"
#include "permpow/partition.hpp"
#include "permpow/power.hpp"
#include "permpow/reduction.hpp"
#include "permpow/scan.hpp"
#include "permpow/zigzag.hpp"

namespace {

namespace fs = std::filesystem;
using namespace permpow;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
  std::string graph;
  std::string second;
  std::size_t k = 1;
  std::string perm;
  std::string perm2;
  std::string mode = "exhaustive";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::uint64_t cap = 0;
  std::string out_dir = ".";
};

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << text;
}

void write_graph(const Options& o, const std::string& stem, const Graph& g, std::size_t block) {
  const fs::path dir(o.out_dir);
  write_text(dir / (stem + ".json"), io::graph_to_json(g).dump(2) + "\n");
  write_text(dir / (stem + ".dot"), io::graph_to_dot(g, block));
  std::cout << "wrote " << (dir / (stem + ".json")).string() << " and "
            << (dir / (stem + ".dot")).string() << "\n";
}

Graph load_graph(const std::string& path) { return io::graph_from_json(io::read_json_file(path)); }

Permutation load_perm(const std::string& text, std::size_t n) {
  if (text.empty()) throw Error(Errc::ParseError, "--perm is required");
  return Permutation::parse(text, n);
}

int cmd_power(const Options& o) {
  const Graph h = load_graph(o.graph);
  const Permutation p = load_perm(o.perm, h.size() * o.k);
  const PowerResult r = permutational_power(h, o.k, p);
  std::cout << "symmetric: " << (r.symmetric ? "true" : "false") << "\n";
  if (!r.symmetric) return kNegative;
  std::cout << "vertices: " << r.graph->size() << "\n";
  write_graph(o, "power", *r.graph, h.size());
  return kOk;
}

int cmd_zigzag(const Options& o) {
  const LabeledGraph g = io::labeled_graph_from_json(io::read_json_file(o.graph));
  const LabeledGraph h = io::labeled_graph_from_json(io::read_json_file(o.second));
  const Graph z = zigzag_product(g, h);
  std::cout << "vertices: " << z.size() << "\n"
            << "degree: " << h.degree() * h.degree() << "\n";
  write_graph(o, "zigzag", z, g.degree());
  return kOk;
}

int cmd_equal(const Options& o) {
  const Graph h = load_graph(o.graph);
  const std::size_t n = h.size() * o.k;
  const bool equal = products_equal(h, o.k, load_perm(o.perm, n), load_perm(o.perm2, n));
  std::cout << "products equal: " << (equal ? "true" : "false") << "\n";
  return equal ? kOk : kNegative;
}

int cmd_reduce(const Options& o) {
  const Graph h = load_graph(o.graph);
  const Permutation p = load_perm(o.perm, h.size() * o.k);
  Permutation q;
  try {
    q = reduce_to_involution(h, o.k, p);
  } catch (const Error& e) {
    if (e.code() != Errc::QuotientNotSymmetric) throw;
    std::cout << "quotient not symmetric: " << e.what() << "\n";
    return kNegative;
  }
  const Partition pi = neighborhood_partition(disjoint_copies(h, o.k));
  std::cout << "q: " << q.to_cycle_string() << "\n"
            << "order: " << q.order() << "\n"
            << "products equal: " << (products_equal(h, o.k, p, q) ? "true" : "false") << "\n"
            << "formula count: " << count_involution_candidates(p, pi) << "\n";
  if (o.cap > 0) {
    const auto systems = enumerate_bijection_systems(p, pi, o.cap);
    const auto brute = brute_force_equivalent_involutions(h, o.k, p, o.cap);
    std::cout << "bijection systems: " << systems.size() << "\n"
              << "equivalent involutions: " << brute.size() << "\n";
  }
  return kOk;
}

int cmd_partition(const Options& o) {
  const Partition pi = neighborhood_partition(load_graph(o.graph));
  std::cout << io::partition_to_json(pi).dump() << "\n";
  return kOk;
}

int cmd_quotient(const Options& o) {
  const Graph g = load_graph(o.graph);
  const QuotientMatrix q = quotient_adjacency(g, neighborhood_partition(g));
  std::cout << io::quotient_to_json(q).dump(2) << "\n";
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const Graph h = load_graph(o.graph);
  ScanOptions opts;
  if (o.mode == "exhaustive") {
    opts.mode = ScanMode::Exhaustive;
  } else if (o.mode == "sample") {
    opts.mode = ScanMode::Sample;
    opts.samples = o.samples;
  } else {
    throw Error(Errc::ParseError, "--mode must be exhaustive or sample");
  }
  opts.seed = o.seed;
  const ScanSummary s = scan_powers(h, o.k, opts);
  std::cout << "scanned: " << s.scanned << "\n"
            << "symmetric: " << s.symmetric << "\n"
            << "involutive: " << s.involutive << "\n"
            << "non-involutive valid: " << s.noninvolutive_valid << "\n";
  for (const Permutation& p : s.noninvolutive) std::cout << "  " << p.to_cycle_string() << "\n";
  return kOk;
}

int cmd_catalog() {
  for (const Permutation& p : c8_all_valid_noninvolutions()) std::cout << p.to_cycle_string() << "\n";
  return kOk;
}

int cmd_gap(const Options& o) {
  const SpectralEstimate e = spectral_gap_estimate(load_graph(o.graph));
  std::cout << "degree: " << e.degree << "\n"
            << std::setprecision(12) << "lambda2: " << e.second_eigenvalue << "\n"
            << "iterations: " << e.iterations << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutational powers and zig-zag products of graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&o](CLI::App* sub) {
    sub->add_option("graph", o.graph, "graph JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_k = [&o](CLI::App* sub) {
    sub->add_option("--k", o.k, "number of copies")->check(CLI::PositiveNumber);
  };
  auto add_out = [&o](CLI::App* sub) {
    sub->add_option("--out-dir", o.out_dir, "directory for JSON and DOT output");
  };

  auto* power = app.add_subcommand("power", "decide symmetry of the permutational power");
  add_graph(power);
  add_k(power);
  power->add_option("--perm", o.perm, "permutation: cycles or w:<images>")->required();
  add_out(power);

  auto* zigzag = app.add_subcommand("zigzag", "zig-zag product of two labeled graphs");
  zigzag->add_option("G", o.graph, "labeled graph G")->required()->check(CLI::ExistingFile);
  zigzag->add_option("H", o.second, "labeled graph H")->required()->check(CLI::ExistingFile);
  add_out(zigzag);

  auto* equal = app.add_subcommand("equal", "compare two permutational products");
  add_graph(equal);
  add_k(equal);
  equal->add_option("--perm", o.perm)->required();
  equal->add_option("--perm2", o.perm2)->required();

  auto* reduce = app.add_subcommand("reduce", "find an equivalent involution");
  add_graph(reduce);
  add_k(reduce);
  reduce->add_option("--perm", o.perm)->required();
  reduce->add_option("--cap", o.cap, "also enumerate candidates up to this many involutions");

  auto* partition = app.add_subcommand("partition", "neighborhood partition");
  add_graph(partition);

  auto* quotient = app.add_subcommand("quotient", "quotient by the neighborhood partition");
  add_graph(quotient);

  auto* enumerate = app.add_subcommand("enumerate", "scan permutations for symmetric powers");
  add_graph(enumerate);
  add_k(enumerate);
  enumerate->add_option("--mode", o.mode, "exhaustive or sample");
  enumerate->add_option("--samples", o.samples);
  enumerate->add_option("--seed", o.seed);

  auto* catalog = app.add_subcommand("catalog-c8", "the generated non-involutive C8 catalog");

  auto* gap = app.add_subcommand("gap", "second eigenvalue of the normalized adjacency");
  add_graph(gap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*power) return cmd_power(o);
    if (*zigzag) return cmd_zigzag(o);
    if (*equal) return cmd_equal(o);
    if (*reduce) return cmd_reduce(o);
    if (*partition) return cmd_partition(o);
    if (*quotient) return cmd_quotient(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*catalog) return cmd_catalog();
    if (*gap) return cmd_gap(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
