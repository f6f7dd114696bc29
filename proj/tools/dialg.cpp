// Command-line front end: enumeration, products, composition, FI functors,
// verification suites, rank computations and rendering.
//
// Exit status: 0 success, 1 verification failure, 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dialg/dialg.hpp"

namespace {

using dialg::Family;
using dialg::io::Json;

constexpr int kVerificationFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string family = "brauer";
  int m = 1;
  int n = 2;
  bool count = false;
  bool unsafe_large = false;
  bool probe = false;
  std::string delta = "0";
  std::string eps = "0";
  std::string check;
  std::string op = "F";
  std::string map = "[]";
  std::string format = "ascii";
  std::size_t samples = 0;
  std::vector<std::string> files;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dialg::InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return dialg::io::parse(ss.str());
}

int enumeration_limit(Family f) { return f == Family::Partition ? 6 : 7; }

void guard(bool exceeded, const Options& o, const std::string& what) {
  if (exceeded && !o.unsafe_large) {
    throw dialg::BoundExceeded(what + " exceeds the desk-scale limit (use --unsafe-large)");
  }
}

int run_basis(const Options& o) {
  Family f = dialg::parse_family(o.family);
  guard(o.n > enumeration_limit(f), o, "basis size");
  if (o.count) {
    std::cout << dialg::count_basis(o.n, f) << '\n';
    return 0;
  }
  for (const auto& d : dialg::enumerate_basis(o.n, f)) std::cout << dialg::io::to_json(d, f).dump() << '\n';
  return 0;
}

int run_hom_basis(const Options& o) {
  Family f = dialg::parse_family(o.family);
  guard(o.n > enumeration_limit(f), o, "hom-basis size");
  if (o.count) {
    std::cout << dialg::count_hom_basis(o.m, o.n, f) << '\n';
    return 0;
  }
  for (const auto& x : dialg::enumerate_hom_basis(o.m, o.n, f)) std::cout << dialg::io::to_json(x).dump() << '\n';
  return 0;
}

int run_mul(const Options& o) {
  if (o.files.size() != 2) throw dialg::InvalidInput("mul needs exactly two input files");
  Family f = dialg::parse_family(o.family);
  auto a = dialg::io::lincomb_from_json(read_json_file(o.files[0]));
  auto b = dialg::io::lincomb_from_json(read_json_file(o.files[1]));
  if (a.family() != f || b.family() != f) throw dialg::InvalidInput("input family differs from --family");
  std::cout << dialg::io::to_json(dialg::lin_multiply(a, b)).dump() << '\n';
  return 0;
}

int run_compose(const Options& o) {
  if (o.files.size() != 2) throw dialg::InvalidInput("compose needs exactly two input files");
  auto x = dialg::io::hom_from_json(read_json_file(o.files[0]));
  auto y = dialg::io::hom_from_json(read_json_file(o.files[1]));
  std::cout << dialg::io::to_json(dialg::compose(x, y)).dump() << '\n';
  return 0;
}

int run_fi(const Options& o) {
  auto map = dialg::io::parse(o.map);
  if (!map.is_array()) throw dialg::InvalidInput("--map must be a JSON array");
  dialg::FIMorphism a(o.n, map.get<std::vector<int>>());
  dialg::BlobDiagram x;
  if (o.op == "G") {
    x = dialg::functor_G(a);
  } else if (o.op == "F") {
    x = dialg::functor_F(a, dialg::parse_family(o.family));
  } else {
    throw dialg::InvalidInput("--op must be F or G");
  }
  std::cout << dialg::io::to_json(x).dump() << '\n';
  return 0;
}

dialg::Report run_check(const Options& o) {
  const Family f = dialg::parse_family(o.family);
  const auto delta = dialg::parse_rational(o.delta);
  const auto eps = dialg::parse_rational(o.eps);
  if (o.check == "factor") return dialg::check_factorizations(o.n, f);
  if (o.check == "lemma-p") return dialg::check_lemma_partition(o.m, o.n, o.probe);
  if (o.check == "lemma-o") return dialg::check_lemma_blob(o.m, o.n, f);
  if (o.check == "gen") return dialg::check_generation(o.m, o.n, f);
  if (o.check == "span") return dialg::check_spanning(o.m, o.n, f, delta, eps);
  if (o.check == "rank-agree") {
    dialg::RankOptions ro;
    ro.unsafe_large = o.unsafe_large;
    auto r = dialg::check_rank_agreement(o.m, o.n, f, {{delta, eps}}, ro);
    r.parameters = {{"delta", dialg::to_string(delta)}, {"eps", dialg::to_string(eps)}};
    return r;
  }
  if (o.check == "assoc") return dialg::check_associativity(o.n, f, o.samples);
  if (o.check == "functorial") return dialg::check_functoriality(o.n, f);
  throw dialg::InvalidInput("unknown check '" + o.check + "'");
}

int run_verify(const Options& o) {
  if (o.check == "factor" || o.check == "assoc") {
    guard(o.n > dialg::rank_size_limit(dialg::parse_family(o.family)), o, "verify size");
  }
  auto report = run_check(o);
  std::cout << dialg::io::to_json(report).dump() << '\n';
  return report.passed() ? 0 : kVerificationFailed;
}

int run_rank(const Options& o) {
  dialg::RankOptions ro;
  ro.unsafe_large = o.unsafe_large;
  std::cout << dialg::rank_oracle(o.m, o.n, dialg::parse_family(o.family), dialg::parse_rational(o.delta),
                                  dialg::parse_rational(o.eps), ro)
            << '\n';
  return 0;
}

int run_render(const Options& o) {
  if (o.files.size() != 1) throw dialg::InvalidInput("render needs one input file");
  if (o.format != "ascii" && o.format != "dot") throw dialg::InvalidInput("--format must be ascii or dot");
  auto j = read_json_file(o.files[0]);
  const bool ascii = o.format == "ascii";
  if (j.is_object() && j.contains("m")) {
    auto x = dialg::io::blob_from_json(j);
    std::cout << (ascii ? dialg::render::ascii(x) : dialg::render::dot(x));
  } else {
    auto d = dialg::io::diagram_from_json(j).first;
    std::cout << (ascii ? dialg::render::ascii(d) : dialg::render::dot(d));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagram algebras, their linear categories and FI functors"};
  app.require_subcommand(1);
  Options o;

  auto add_family = [&](CLI::App* s) { s->add_option("--family", o.family, "partition|brauer|rookbrauer|rook"); };
  auto add_sizes = [&](CLI::App* s) {
    s->add_option("--m", o.m, "target degree m");
    s->add_option("--n", o.n, "source degree n (j for lemma and generation checks)");
  };
  auto add_params = [&](CLI::App* s) {
    s->add_option("--delta", o.delta, "delta specialization, p/q");
    s->add_option("--eps", o.eps, "epsilon specialization, p/q");
  };

  auto* basis = app.add_subcommand("basis", "list or count basis diagrams of A_n");
  add_family(basis);
  basis->add_option("--n", o.n)->required();
  basis->add_flag("--count", o.count);
  basis->add_flag("--unsafe-large", o.unsafe_large);

  auto* hom = app.add_subcommand("hom-basis", "list blob diagrams of Hom(m, n)");
  add_family(hom);
  add_sizes(hom);
  hom->add_flag("--count", o.count);
  hom->add_flag("--unsafe-large", o.unsafe_large);

  auto* mul = app.add_subcommand("mul", "product of two diagrams or linear combinations");
  add_family(mul);
  mul->add_option("files", o.files)->required();

  auto* comp = app.add_subcommand("compose", "composite X o Y of two hom elements");
  comp->add_option("files", o.files)->required();

  auto* fi = app.add_subcommand("fi", "image of an injection under F or G");
  fi->add_option("--op", o.op, "F or G");
  fi->add_option("--map", o.map, "images of 1..m as a JSON array")->required();
  fi->add_option("--n", o.n, "target size")->required();
  add_family(fi);

  auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  verify->add_option("--check", o.check, "factor|lemma-p|lemma-o|gen|span|rank-agree|assoc|functorial")
      ->required();
  add_family(verify);
  add_sizes(verify);
  add_params(verify);
  verify->add_option("--samples", o.samples, "assoc: random triples instead of exhaustive");
  verify->add_flag("--probe", o.probe, "lemma-p: allow j below 5m without asserting");
  verify->add_flag("--unsafe-large", o.unsafe_large);

  auto* rank = app.add_subcommand("rank", "dimension of A_n (x) R over the rationals");
  add_family(rank);
  add_sizes(rank);
  add_params(rank);
  rank->add_flag("--unsafe-large", o.unsafe_large);

  auto* render = app.add_subcommand("render", "draw a diagram or blob diagram");
  render->add_option("--format", o.format, "ascii|dot");
  render->add_option("files", o.files)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (*basis) return run_basis(o);
    if (*hom) return run_hom_basis(o);
    if (*mul) return run_mul(o);
    if (*comp) return run_compose(o);
    if (*fi) return run_fi(o);
    if (*verify) return run_verify(o);
    if (*rank) return run_rank(o);
    if (*render) return run_render(o);
  } catch (const dialg::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
