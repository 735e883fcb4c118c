#include "e7/discrim.hpp"
#include "e7/field.hpp"
#include "e7/parse.hpp"
#include "e7/singclass.hpp"
#include "e7/verify.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

using namespace e7;

namespace {

std::string read_arg_or_file(const std::string& s) {
  std::error_code ec;
  if (s.size() < 4096 && std::filesystem::is_regular_file(s, ec)) {
    std::ifstream in(s);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return s;
}

int cmd_classify(const std::string& poly, const std::string& vars, const std::string& field) {
  const ExtField* F = nullptr;
  if (field == "Q")
    F = &ExtField::rationals();
  else if (field == "Qw")
    F = &ExtField::eisenstein();
  else {
    std::cerr << "unknown field " << field << "\n";
    return 3;
  }
  MPoly f;
  try {
    f = parse_poly(read_arg_or_file(poly), make_ring(vars, *F));
  } catch (const AlgebraError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  }
  try {
    auto rep = classify_surface(f);
    std::cout << "point | mu | type | corank\n";
    for (const auto& g : rep.germs) {
      std::cout << "(";
      for (std::size_t i = 0; i < g.point.size(); ++i) std::cout << (i ? ", " : "") << g.point[i].str();
      std::cout << ") | " << (g.milnor ? std::to_string(*g.milnor) : std::string("inf")) << " | " << g.type.str() << " | "
                << g.corank << "\n";
    }
    if (rep.germs.empty()) std::cout << "smooth\n";
    if (!rep.complete) std::cout << "note: singular points outside the coefficient field were not listed\n";
    return 0;
  } catch (const UnsupportedShape& e) {
    std::cerr << "unsupported shape: " << e.what() << "\n";
    return 2;
  } catch (const NonIsolatedLocus& e) {
    std::cerr << "non-isolated singular locus: " << e.what() << "\n";
    return 4;
  }
}

int cmd_verify(const std::string& suite, const std::string& eta, const std::string& out, const std::string& delta) {
  SuiteOptions opt;
  opt.threads = threads_from_env();
  try {
    opt.eta = parse_rational(eta);
  } catch (const AlgebraError& e) {
    std::cerr << "bad --eta: " << e.what() << "\n";
    return 3;
  }
  if (sgn(opt.eta) == 0) {
    std::cerr << "--eta must be nonzero\n";
    return 3;
  }
  if (!delta.empty()) opt.delta_file = delta;
  std::vector<VerificationReport> reports;
  try {
    reports = run_suite(suite, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  bool ok = true;
  for (const auto& r : reports) {
    std::size_t pass = 0;
    for (const auto& c : r.checks) {
      if (c.status == CheckStatus::Pass) ++pass;
      std::cout << r.suite << " | " << c.id << " | " << to_string(c.status) << " | " << c.detail << "\n";
    }
    std::cout << r.suite << ": " << pass << "/" << r.checks.size() << " pass\n";
    ok = ok && r.passed();
  }
  if (!out.empty()) {
    std::ofstream f(out);
    if (reports.size() == 1) {
      f << reports.front().to_json() << "\n";
    } else {
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& r : reports) all.push_back(nlohmann::ordered_json::parse(r.to_json()));
      f << all.dump(2) << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_discriminant(const std::string& emit, const std::string& format, const std::string& out) {
  std::string text;
  try {
    text = discriminant_text(emit);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const ClaimViolation& e) {
    std::cerr << "claim violation: " << e.what() << "\n";
    return 5;
  }
  std::string payload;
  if (format == "text") {
    payload = text + "\n";
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "e7m.poly/1";
    j["name"] = emit;
    j["variables"] = param_ring()->vars();
    std::vector<std::string> w;
    for (const auto& x : param_weights()) w.push_back(to_string(x));
    j["weights"] = w;
    j["polynomial"] = text;
    j["sha256"] = sha256_hex(text);
    payload = j.dump(2) + "\n";
  } else {
    std::cerr << "unknown format " << format << "\n";
    return 3;
  }
  if (out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out, std::ios::binary);
    f << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E7 singularities: classification, discriminants and verification"};
  app.require_subcommand(1);

  std::string poly, vars = "x,y,z", field = "Q";
  auto* c = app.add_subcommand("classify", "classify the singular points of g(x,y) + c z^2");
  c->add_option("--poly", poly, "polynomial or file")->required();
  c->add_option("--vars", vars, "variables");
  c->add_option("--field", field, "Q or Qw");

  std::string suite, eta = "1", out, delta;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", suite, "adjacency | st34 | discriminant | shioda | wdvv | all")->required();
  v->add_option("--eta", eta, "rational scale");
  v->add_option("--out", out, "JSON report");
  v->add_option("--delta", delta, "delta~ file (text or json) for the wdvv suite");

  std::string emit, format = "text", dout;
  auto* d = app.add_subcommand("discriminant", "emit delta~ or delta_ST34");
  d->add_option("--emit", emit, "delta_tilde | delta_st34")->required();
  d->add_option("--format", format, "text | json");
  d->add_option("--out", dout, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }
  try {
    if (c->parsed()) return cmd_classify(poly, vars, field);
    if (v->parsed()) return cmd_verify(suite, eta, out, delta);
    if (d->parsed()) return cmd_discriminant(emit, format, dout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 3;
}
