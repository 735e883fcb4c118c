#include "e7/verify.hpp"

#include "e7/discrim.hpp"
#include "e7/e7family.hpp"
#include "e7/parse.hpp"
#include "e7/singclass.hpp"
#include "e7/wdvv.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace e7 {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status != CheckStatus::Fail; });
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "e7m.verify/1";
  j["suite"] = suite;
  j["status"] = passed() ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}, {"elapsed_ms", c.elapsed_ms}});
  j["artifact_hashes"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : artifact_hashes) j["artifact_hashes"][k] = v;
  return j.dump(2);
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

unsigned threads_from_env() {
  const char* s = std::getenv("E7M_THREADS");
  if (!s) return 1;
  int n = std::atoi(s);
  return n < 1 ? 1u : static_cast<unsigned>(n);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"adjacency", "st34", "discriminant", "shioda", "wdvv"};
  return n;
}

std::string discriminant_text(const std::string& which) {
  const auto& d = discriminant();
  if (which == "delta_tilde") return to_text(d.delta_tilde);
  if (which == "delta_st34") return to_text(d.delta_st34);
  throw std::invalid_argument("unknown discriminant artifact: " + which);
}

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};
using Thunk = std::function<Outcome()>;

CheckResult run_check(const std::string& id, const Thunk& f) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult c;
  c.id = id;
  try {
    Outcome o = f();
    c.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.detail = o.detail;
  } catch (const std::exception& e) {
    c.status = CheckStatus::Fail;
    c.detail = std::string("error: ") + e.what();
  }
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

void run_pool(VerificationReport& r, const std::vector<std::pair<std::string, Thunk>>& jobs, unsigned threads) {
  std::vector<CheckResult> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) out[i] = run_check(jobs[i].first, jobs[i].second);
  };
  unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  r.checks.insert(r.checks.end(), out.begin(), out.end());
}

std::string germ_list(const SurfaceReport& rep) {
  std::string s;
  for (const auto& g : rep.germs) {
    if (!s.empty()) s += " + ";
    s += g.type.str() + "@(" + g.point[0].str() + ", " + g.point[1].str() + ", " + g.point[2].str() + ")";
  }
  return s.empty() ? "smooth" : s;
}

Outcome compare_germs(const SurfaceReport& rep, const std::vector<TableGerm>& expect, const FieldElem& eta) {
  std::string detail = germ_list(rep);
  if (!rep.complete) return {false, detail + " (incomplete)"};
  std::vector<std::string> got, want;
  for (const auto& g : rep.germs) got.push_back(g.type.str());
  for (const auto& g : expect) want.push_back(g.type.str());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) return {false, detail + "; expected types differ"};
  std::vector<FieldElem> pt{eta};
  for (const auto& e : expect) {
    FieldElem x = e.point[0].evaluate(pt), y = e.point[1].evaluate(pt);
    bool hit = false;
    for (const auto& g : rep.germs)
      if (g.type == e.type && g.point[0] == x && g.point[1] == y) hit = true;
    if (!hit) return {false, detail + "; no " + e.type.str() + " at (" + x.str() + ", " + y.str() + ")"};
  }
  return {true, detail};
}

VerificationReport adjacency_suite(const SuiteOptions& opt) {
  VerificationReport r{"adjacency", {}, {}};
  std::vector<std::pair<std::string, Thunk>> jobs;
  for (int i = 1; i <= 7; ++i)
    jobs.emplace_back("E7(" + std::to_string(i) + ")", [i, &opt]() -> Outcome {
      RingPtr er = eta_ring();
      FieldElem eta(opt.eta);
      LambdaParams l = lambda_case(i, MPoly(er, eta));
      RingPtr R = make_ring("x,y,z");
      for (auto& p : l.v) p = p.to_ring(R);
      return compare_germs(classify_surface(f_e7(l, R)), case_germs(i, er), eta);
    });
  run_pool(r, jobs, opt.threads);
  return r;
}

VerificationReport st34_suite(const SuiteOptions& opt) {
  VerificationReport r{"st34", {}, {}};
  std::vector<std::pair<std::string, Thunk>> jobs;
  for (int i = 1; i <= 6; ++i)
    jobs.emplace_back("ST34(" + std::to_string(i) + ")", [i, &opt]() -> Outcome {
      const ExtField& F = st34_field(i);
      RingPtr er = eta_ring(F);
      FieldElem eta = FieldElem(opt.eta).in(F);
      FamilyParams tau = st34_tau(i, MPoly(er, eta));
      RingPtr R = make_ring("x,y,z", F);
      return compare_germs(classify_surface(f_tilde(tau, R)), st34_germs(i, er), eta);
    });
  run_pool(r, jobs, opt.threads);
  return r;
}

VerificationReport shioda_suite(const SuiteOptions& opt) {
  VerificationReport r{"shioda", {}, {}};
  std::vector<std::pair<std::string, Thunk>> jobs;
  for (int i = 1; i <= 7; ++i)
    jobs.emplace_back("Phi=Psi E7(" + std::to_string(i) + ")", [i]() -> Outcome {
      FieldElem one(1);
      Rational eta = eta_of_xi(i).evaluate(std::span<const FieldElem>(&one, 1)).rational();
      MPoly phi = shioda_phi(lambda_case(i, eta));
      bool ok = phi == psi_poly(case_weight_vector(i));
      return {ok, "eta = " + to_string(eta) + ", degree " + std::to_string(phi.degree(0))};
    });
  run_pool(r, jobs, opt.threads);
  return r;
}

VerificationReport discriminant_suite(const SuiteOptions& opt) {
  VerificationReport r{"discriminant", {}, {}};
  const DiscriminantBundle* d = nullptr;
  r.checks.push_back(run_check("pipeline", [&]() -> Outcome {
    d = &discriminant();
    return {true, "k0 = " + to_string(d->k0) + ", " + std::to_string(d->delta_tilde.size()) + " terms"};
  }));
  if (!d) return r;
  RingPtr pr = param_ring();
  const std::size_t it7 = pr->index("t7");
  MPoly t7 = MPoly::variable(pr, it7);
  auto w = param_weights();
  MPoly one(pr, FieldElem(1));
  MPoly d0 = delta_tilde_0(d->delta_tilde);
  std::vector<std::pair<std::string, Thunk>> jobs;
  jobs.emplace_back("det A = k0 t7 delta~", [&]() -> Outcome {
    bool ok = d->det_A == d->delta_tilde * t7 * FieldElem(d->k0) && d->delta_tilde.degree(it7) == 7 &&
              d->delta_tilde.coefficient(it7, 7) == one && weighted_degree(d->delta_tilde, w) == Rational(49) &&
              !d->delta_tilde.coefficient(it7, 0).is_zero();
    return {ok, "monic of degree 7 in t7, weight 49"};
  });
  jobs.emplace_back("A|t1..t4=0 = B", [&]() -> Outcome {
    PolyMatrix B = matrix_B_fixture();
    std::vector<std::pair<std::string, FieldElem>> z{{"t1", 0}, {"t2", 0}, {"t3", 0}, {"t4", 0}};
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        if (d->A(i, j).specialize(z) != B(i, j))
          return {false, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
    return {true, "49 entries"};
  });
  jobs.emplace_back("det(B) expansion", [&]() -> Outcome {
    auto shown = det_B_display();
    for (int k = 0; k < 4; ++k)
      if (d0.coefficient(it7, 7 - k) != shown[k]) return {false, "t7^" + std::to_string(7 - k)};
    return {true, "t7^7 .. t7^4"};
  });
  jobs.emplace_back("delta_ST34", [&]() -> Outcome {
    bool ok = d->delta_st34.degree(it7) == 6 && d->delta_st34.coefficient(it7, 6) == one &&
              weighted_degree(d->delta_st34, w) == Rational(42) &&
              try_divide(d->delta_st34.coefficient(it7, 0), MPoly::variable(pr, "t4").pow(3)).has_value();
    return {ok, "monic of degree 6, weight 42, t4^3 | delta_ST34(t7=0)"};
  });
  jobs.emplace_back("uv congruences", [&]() -> Outcome {
    auto rem = uv_remainders(d0);
    for (int k = 0; k < 4; ++k)
      if (!rem[k].is_zero()) return {false, "remainder " + std::to_string(k) + " nonzero"};
    return {true, "f~0 and partials vanish mod delta~0"};
  });
  jobs.emplace_back("det audit", [&]() -> Outcome { return {audit_det(*d, 20, 1), "20 random rational points"}; });
  jobs.emplace_back("row weights", [&]() -> Outcome { return {audit_row_weights(d->A), "wt(x)=2, wt(y)=3"}; });
  jobs.emplace_back("tau vanishing", [&]() -> Outcome {
    for (int i = 1; i <= 6; ++i) {
      RingPtr er = eta_ring(st34_field(i));
      auto vals = values_of(st34_tau(i, MPoly(er, FieldElem(opt.eta).in(st34_field(i)))).v);
      bool ok = (i == 2 || i == 3 || i == 6) ? vals[6].is_zero() : d->delta_st34.evaluate(vals).is_zero();
      if (!ok) return {false, "tau[" + std::to_string(i) + "]"};
    }
    return {true, "delta_ST34(tau[1,4,5]) = 0, t7(tau[2,3,6]) = 0"};
  });
  run_pool(r, jobs, opt.threads);
  r.artifact_hashes["delta_tilde"] = sha256_hex(to_text(d->delta_tilde));
  r.artifact_hashes["delta_st34"] = sha256_hex(to_text(d->delta_st34));
  return r;
}

MPoly load_delta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '{') s = nlohmann::json::parse(s).at("polynomial").get<std::string>();
  return parse_poly(s, param_ring());
}

VerificationReport wdvv_suite(const SuiteOptions& opt) {
  VerificationReport r{"wdvv", {}, {}};
  const PotentialE7& f = potential();
  FrobMatrices m;
  bool built = false;
  r.checks.push_back(run_check("matrices", [&]() -> Outcome {
    m = frob_matrices(f, opt.threads);
    built = true;
    return {true, "C, B~1..B~7, T"};
  }));
  r.checks.push_back(run_check("EF = 15/7 F", [&]() -> Outcome {
    return {f.F.euler() == f.F * FieldElem(Rational(15, 7)), "weights j/7"};
  }));
  r.checks.push_back(run_check("x1^15 coefficient", [&]() -> Outcome {
    FieldElem c = f.F_poly.coefficient(0, 15).constant_term();
    return {c == FieldElem(Rational(3939238656, 1092455)), c.str()};
  }));
  if (!built) return r;
  const auto& ctx = f.ctx;
  std::vector<std::pair<std::string, Thunk>> jobs;
  jobs.emplace_back("B~7 = I", [&]() -> Outcome {
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        if (m.B[6][i][j] != AlgElem(ctx, MPoly(ctx->ring, FieldElem(i == j ? 1 : 0)))) return {false, "entry mismatch"};
    return {true, "identity"};
  });
  jobs.emplace_back("C symmetry", [&]() -> Outcome {
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        if (m.C[i][j] != m.C[6 - j][6 - i]) return {false, "C(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
    return {true, "C_ij = C_(8-j)(8-i)"};
  });
  run_pool(r, jobs, opt.threads);
  r.checks.push_back(run_check("commutators", [&]() -> Outcome {
    auto fails = check_commutators(m, opt.threads);
    if (fails.empty()) return {true, "21 commutators vanish"};
    const auto& e = fails.front();
    return {false, std::to_string(fails.size()) + " nonzero entries, first [B~" + std::to_string(e.j) + ",B~" +
                       std::to_string(e.k) + "](" + std::to_string(e.row) + "," + std::to_string(e.col) + ")"};
  }));
  MPoly delta;
  r.checks.push_back(run_check("delta~ input", [&]() -> Outcome {
    delta = opt.delta_file ? load_delta(*opt.delta_file) : discriminant().delta_tilde;
    return {true, opt.delta_file ? *opt.delta_file : std::string("computed")};
  }));
  if (delta.is_zero()) return r;
  r.checks.push_back(run_check("pointwise kappa", [&]() -> Outcome {
    auto ks = pointwise_kappa(m, delta, 20, 3);
    for (const auto& k : ks)
      if (k != ks.front()) return {false, "ratio varies: " + ks.front().str() + " vs " + k.str()};
    return {!ks.front().is_zero(), "kappa = " + ks.front().str() + " at 20 points over Q(c7)"};
  }));
  MPoly G;
  r.checks.push_back(run_check("det T", [&]() -> Outcome {
    G = det_T(m);
    return {!G.is_zero(), std::to_string(G.size()) + " terms in x1..x5, x7, z"};
  }));
  if (G.is_zero()) return r;
  r.checks.push_back(run_check("det T = kappa delta~", [&]() -> Outcome {
    auto t = transform_and_compare(G, delta);
    return {t.matches && !t.kappa.is_zero(), "kappa = " + t.kappa.str()};
  }));
  r.artifact_hashes["det_T"] = sha256_hex(to_text(G));
  r.artifact_hashes["delta_tilde"] = sha256_hex(to_text(delta));
  return r;
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const auto& n : suite_names()) {
      auto r = run_suite(n, opt);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  if (name == "adjacency") return {adjacency_suite(opt)};
  if (name == "st34") return {st34_suite(opt)};
  if (name == "discriminant") return {discriminant_suite(opt)};
  if (name == "shioda") return {shioda_suite(opt)};
  if (name == "wdvv") return {wdvv_suite(opt)};
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace e7
