// Command-line front end: classification, generation, root reports,
// characteristic angles, geodesic periods, embedding verification, and the
// curvature-oracle sweep, all with JSON input/output.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include "cq/json_doc.hpp"
#include "cq/rng.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

cq::LtsType type_from_options(const std::string& tag_string, int k, int k1,
                              int k2) {
  const cq::Tag tag = cq::tag_from_name(tag_string);
  switch (tag) {
    case cq::Tag::G1:
    case cq::Tag::P1:
    case cq::Tag::I1:
    case cq::Tag::I2:
      if (k <= 0) throw std::invalid_argument("type " + tag_string + " requires --k");
      return cq::LtsType::with_k(tag, k);
    case cq::Tag::G2:
      if (k1 <= 0 || k2 <= 0) {
        throw std::invalid_argument("type G2 requires --k1 and --k2");
      }
      return cq::LtsType::g2(k1, k2);
    default:
      return cq::LtsType::simple(tag);
  }
}

int run_classify(const std::string& input, double tol_override) {
  cq::SubspaceDocument doc = cq::parse_subspace_document(read_file(input));
  if (tol_override > 0.0) doc.tol = tol_override;
  const cq::Classification c = cq::classify(doc.to_subspace());
  std::cout << cq::emit_classification(c);
  return 0;
}

int run_generate(const std::string& tag, int k, int k1, int k2, int m,
                 std::uint64_t seed, const std::string& output) {
  const cq::LtsType t = type_from_options(tag, k, k1, k2);
  const cq::RealSubspace s = cq::generate(t, m, seed);
  cq::SubspaceDocument doc;
  doc.m = m;
  doc.tol = s.tol();
  doc.basis = s.basis();
  const std::string text = cq::emit_subspace_document(doc);
  if (!output.empty()) {
    write_file(output, text);
  } else {
    std::cout << text;
  }
  return 0;
}

int run_roots(int m) {
  const cq::CartanFrame frame = cq::canonical_cartan(m);
  std::cout << cq::emit_root_table(cq::root_table(frame, m), m);
  return 0;
}

int run_decompose(const std::string& input, int m) {
  const cq::SubspaceDocument doc = cq::parse_subspace_document(read_file(input));
  if (m != 0 && m != doc.m) {
    throw std::invalid_argument("-m disagrees with the document's m");
  }
  const cq::RealSubspace s = doc.to_subspace();
  // prefer the canonical frame when it is adapted, otherwise reduce the
  // gauge automatically
  cq::CartanFrame frame = cq::canonical_cartan(doc.m);
  try {
    std::cout << cq::emit_decomposition(cq::decompose_by_roots(s, frame), frame);
    return 0;
  } catch (const std::invalid_argument&) {
    frame = cq::adapted_cartan_frame(s);
  }
  std::cout << cq::emit_decomposition(cq::decompose_by_roots(s, frame), frame);
  return 0;
}

int run_angle(const std::string& input) {
  const cq::SubspaceDocument doc = cq::parse_subspace_document(read_file(input));
  std::vector<double> angles;
  for (const cq::CVec& v : doc.basis) angles.push_back(cq::characteristic_angle(v));
  std::cout << cq::emit_angles(angles);
  return 0;
}

int run_period(int num, int den) {
  const cq::PeriodCase c{num, den};
  const double formula = cq::minimal_period(c);
  const double oracle = cq::minimal_period_oracle(c);
  std::cout << cq::emit_period(formula, oracle);
  return std::abs(formula - oracle) <= 1e-9 ? 0 : 1;
}

int run_verify_embedding(const std::string& tag, int k, int k1, int k2, int m,
                         int samples, std::uint64_t seed) {
  cq::EmbeddingDescriptor e;
  using Kind = cq::EmbeddingDescriptor::Kind;
  if (tag == "G1") {
    if (k < 2) throw std::invalid_argument("G1 embedding requires --k >= 2");
    e.kind = Kind::QuadricInclusion;
    e.k = k;
  } else if (tag == "P2") {
    e.kind = Kind::QuadricInclusion;
    e.k = 1;
  } else if (tag == "G2") {
    if (k1 <= 0 || k2 <= 0) throw std::invalid_argument("G2 embedding requires --k1 and --k2");
    e.kind = Kind::SphereProduct;
    e.k1 = k1;
    e.k2 = k2;
  } else if (tag == "P1") {
    if (k < 1) throw std::invalid_argument("P1 embedding requires --k >= 1");
    e.kind = Kind::SphereProduct;
    e.k1 = k;
    e.k2 = 0;
  } else if (tag == "torus") {
    e.kind = Kind::Torus;
  } else if (tag == "I1" || tag == "I2") {
    if (k < 1) throw std::invalid_argument(tag + " embedding requires --k >= 1");
    e.kind = tag == "I1" ? Kind::Projective : Kind::ProjectiveReal;
    e.k = k;
  } else if (tag == "G3") {
    e.kind = Kind::SegreG3;
  } else {
    throw std::invalid_argument(
        "unknown embedding type (expected G1, P2, G2, P1, torus, I1, I2, G3)");
  }
  const cq::EmbeddingCheck check = cq::verify_embedding(e, m, samples, seed);
  std::cout << cq::emit_embedding_check(check);
  return check.pass ? 0 : 1;
}

int run_oracle(const std::string& check, int m, int trials, std::uint64_t seed) {
  if (check != "curvature") {
    throw std::invalid_argument("unknown oracle check: " + check);
  }
  cq::rng::Engine eng(seed);
  double max_dev = 0.0;
  for (int j = 0; j < trials; ++j) {
    const cq::CVec u = cq::rng::gaussian_cvec(m, eng);
    const cq::CVec v = cq::rng::gaussian_cvec(m, eng);
    const cq::CVec w = cq::rng::gaussian_cvec(m, eng);
    const cq::CVec a = cq::curvature(u, v, w, cq::CurvatureMode::Formula);
    const cq::CVec b = cq::curvature(u, v, w, cq::CurvatureMode::Bracket);
    max_dev = std::max(max_dev, (a - b).norm() / std::max(1.0, a.norm()));
  }
  std::cout << cq::emit_oracle_result(m, trials, max_dev);
  return max_dev <= 1e-9 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Totally geodesic submanifold toolkit for the complex quadric"};
  app.require_subcommand(1);

  std::string input, output, tag, check = "curvature";
  int m = 0, k = 0, k1 = 0, k2 = 0, num = 0, den = 1;
  int trials = 200, samples = 50;
  double tol = 0.0;
  std::uint64_t seed = cq::rng::kDefaultSeed;

  CLI::App* classify = app.add_subcommand("classify", "Classify a subspace document");
  classify->add_option("-i,--input", input)->required();
  classify->add_option("--tol", tol);

  CLI::App* generate = app.add_subcommand("generate", "Generate a canonical instance of a type");
  generate->add_option("--type", tag)->required();
  generate->add_option("--k", k);
  generate->add_option("--k1", k1);
  generate->add_option("--k2", k2);
  generate->add_option("-m", m)->required();
  generate->add_option("--seed", seed);
  generate->add_option("-o,--output", output);

  CLI::App* roots = app.add_subcommand("roots", "Print the restricted root table");
  roots->add_option("-m", m)->required();

  CLI::App* decompose = app.add_subcommand("decompose", "Restricted-root decomposition relative to the canonical frame");
  decompose->add_option("-i,--input", input)->required();
  decompose->add_option("-m", m);

  CLI::App* angle = app.add_subcommand("angle", "Characteristic angles of the vectors in a document");
  angle->add_option("-i,--input", input)->required();

  CLI::App* period = app.add_subcommand("period", "Closed-geodesic period, formula and lattice oracle");
  period->add_option("--num", num)->required();
  period->add_option("--den", den)->required();

  CLI::App* verify = app.add_subcommand("verify-embedding", "Sampled verification of a totally geodesic embedding");
  verify->add_option("--type", tag)->required();
  verify->add_option("--k", k);
  verify->add_option("--k1", k1);
  verify->add_option("--k2", k2);
  verify->add_option("-m", m)->required();
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);

  CLI::App* oracle = app.add_subcommand("oracle", "Curvature two-route oracle sweep");
  oracle->add_option("--check", check);
  oracle->add_option("-m", m)->required();
  oracle->add_option("--trials", trials);
  oracle->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(input, tol);
    if (app.got_subcommand(generate)) return run_generate(tag, k, k1, k2, m, seed, output);
    if (app.got_subcommand(roots)) return run_roots(m);
    if (app.got_subcommand(decompose)) return run_decompose(input, m);
    if (app.got_subcommand(angle)) return run_angle(input);
    if (app.got_subcommand(period)) return run_period(num, den);
    if (app.got_subcommand(verify)) return run_verify_embedding(tag, k, k1, k2, m, samples, seed);
    if (app.got_subcommand(oracle)) return run_oracle(check, m, trials, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
