// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "jacobi/groebner.hpp"
#include "jacobi/hilbert.hpp"
#include "jacobi/parallel.hpp"
#include "jacobi/symmetric.hpp"
#include "support.hpp"

using namespace jacobi;

namespace {

constexpr unsigned kThreads = 4;

/// Throws with a description when `ok` is false.
void expect(bool ok, const std::string &what) {
  if (!ok) throw std::runtime_error(what);
}

template <class T> std::string str(const T &v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// 1
void headline() {
  const auto &r = support::lambda_1_8();
  auto d = r.basis.dims();
  expect(d[0] == 1 && d[1] == 9 && d[2] == 9 && d[3] == 1, "graded basis sizes differ from (1,9,9,1)");
  expect(r.basis.total_dim() == 20, "total dimension " + str(r.basis.total_dim()));
  expect(r.plethysm.u33 == 78, "dim U33 = " + str(r.plethysm.u33));
  expect(r.plethysm.bound == 65 && !r.plethysm.modular_consistent, "modular_consistent should be false");
}

// 2
void bijections() {
  for (std::size_t deg : {2u, 3u}) {
    for (std::size_t n : {9u, 20u}) {
      if (deg == 3 && n == 20) continue;
      SymIndexer ix(n, deg);
      const std::size_t expected = deg == 2 ? n * (n + 1) / 2 : n * (n + 1) * (n + 2) / 6;
      expect(ix.size() == expected, "indexer size");
      for (std::size_t p = 0; p < ix.size(); ++p) {
        const auto &t = ix.tuple_of(p);
        expect(std::is_sorted(t.begin(), t.end()), "tuple not sorted");
        expect(ix.pos_of(t) == p, "round trip fails at position " + str(p));
      }
    }
  }
  std::mt19937_64 rng(2);
  SymIndexer i2(20, 2), i3(9, 3);
  std::uniform_int_distribution<std::size_t> d20(0, 19), d9(0, 8);
  for (int n = 0; n < 1000; ++n) {
    if (n % 2 == 0) {
      std::size_t a = d20(rng), b = d20(rng);
      expect(i2.pos_of_pair(a, b) == i2.pos_of_pair(b, a), "pair not symmetric");
    } else {
      std::array<std::size_t, 3> t{d9(rng), d9(rng), d9(rng)};
      const std::size_t p = i3.pos_of_triple(t[0], t[1], t[2]);
      std::sort(t.begin(), t.end());
      do {
        expect(i3.pos_of_triple(t[0], t[1], t[2]) == p, "triple not symmetric");
      } while (std::next_permutation(t.begin(), t.end()));
    }
  }
}

// 3
void groebner_properties() {
  const auto &jr = support::lambda_1_8().jacobian;
  const auto &gi = jr.ideal;
  const auto basis = gi.basis();
  for (const auto &g : gi.generators()) expect(gi.normal_form(g).is_zero(), "generator not in the ideal");

  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    auto f = support::random_polynomial(rng, jr.ring, 12, 6);
    auto g = support::random_polynomial(rng, jr.ring, 12, 6);
    auto c = support::random_rational(rng, 9);
    auto nf = gi.normal_form(f);
    expect(gi.normal_form(nf) == nf, "normal form not idempotent");
    expect(gi.normal_form(f + g.scaled(c)) == nf + gi.normal_form(g).scaled(c), "normal form not linear");
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  std::atomic<std::size_t> bad{0};
  parallel_for(pairs.size(), kThreads, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    if (!gi.normal_form(s_polynomial(basis[i], basis[j])).is_zero()) ++bad;
  });
  expect(bad == 0, str(bad.load()) + " of " + str(pairs.size()) + " S-polynomials do not reduce to 0");
}

// 4
void higgs_consistency() {
  const auto &r = support::lambda_1_8();
  const auto &t = r.theta;
  expect(t.size() == 9, "expected nine theta matrices");
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j) expect(t[i] * t[j] == t[j] * t[i], "commutator nonzero");

  std::vector<ExactMatrix> two;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) two.push_back(t[i] * t[j]);
  std::atomic<std::size_t> bad{0};
  parallel_for(two.size() * two.size(), kThreads, [&](std::size_t k) {
    if (!(two[k / two.size()] * two[k % two.size()]).is_zero()) ++bad;
  });
  expect(bad == 0, str(bad.load()) + " products of four theta matrices are nonzero");

  // e_k * theta_i * theta_j against the normal form of w_i w_j b_k
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> d9(0, 8), d20(0, 19);
  const FieldConfig &q = r.jacobian.ring->field();
  const auto &r1 = r.basis.component(1);
  for (int n = 0; n < 200; ++n) {
    const std::size_t i = d9(rng), j = d9(rng), k = d20(rng);
    auto matrix_path = apply_theta(t, j, apply_theta(t, i, unit_vector(20, k, q)));
    auto poly = Polynomial::monomial(r.jacobian.ring, r1[i] * r1[j] * r.basis.element(k));
    auto poly_path = coordinate_vector(poly, r.jacobian, r.basis);
    expect(matrix_path == poly_path, "paths disagree at (" + str(i) + "," + str(j) + "," + str(k) + ")");
  }
}

// 5
void evaluation_oracles() {
  const auto &r = support::lambda_1_8();
  const auto &r1 = r.basis.component(1);
  std::mt19937_64 rng(5);
  std::atomic<std::size_t> bad{0};
  std::vector<std::vector<Scalar>> points(100);
  for (auto &z : points)
    for (int i = 0; i < 9; ++i) z.push_back(support::random_rational(rng, 12));
  parallel_for(points.size(), kThreads, [&](std::size_t n) {
    const auto &z = points[n];
    Polynomial w(r.jacobian.ring);
    for (std::size_t i = 0; i < 9; ++i) w = w + Polynomial::term(r.jacobian.ring, r1[i], z[i]);
    auto sq = coordinate_vector(w * w, r.jacobian, r.basis);
    auto cube = coordinate_vector(w * w * w, r.jacobian, r.basis);
    bool ok = r.second.equations[0].evaluate(z) == cube[19];
    for (std::size_t l = 0; l < 9; ++l) ok = ok && r.first.equations[l].evaluate(z) == sq[10 + l];
    if (!ok) ++bad;
  });
  expect(bad == 0, str(bad.load()) + " of 100 points disagree");
}

// 6
void hilbert_oracle() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> nv(1, 6), ng(1, 8);
  std::uniform_int_distribution<unsigned> deg(1, 4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = nv(rng);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::vector<Monomial> gens;
    for (std::size_t g = ng(rng); g-- > 0;) {
      Monomial x(n);
      for (unsigned d = deg(rng); d-- > 0;) {
        std::size_t v = var(rng);
        x.set(v, x[v] + 1);
      }
      gens.push_back(x);
    }
    auto h = hilbert_series(gens, n);
    for (unsigned d = 0; d <= 12; ++d)
      expect(h.series_coefficient(d) == hilbert_function_bruteforce(gens, n, d),
             "ideal " + str(t) + " differs at degree " + str(d));
  }
  auto p8 = hilbert_series({}, 9);
  expect(p8.dimension == 8 && p8.genus && *p8.genus == 0, "P^8 invariants are not (8, 0)");
}

// 7
void derived_fixtures() {
  const auto &r = support::lambda_1_8();
  const auto &o = support::oracle();
  expect(r.plethysm.u42 == o["U42"].get<std::size_t>(), "dim U42 = " + str(r.plethysm.u42));
  expect(r.plethysm.u51 == o["U51"].get<std::size_t>(), "dim U51 = " + str(r.plethysm.u51));
  const FieldConfig f = FieldConfig::prime_field(o["charvar1_field_modulus"].get<std::uint64_t>());
  auto inv = charvar_dimension_genus(r.first, f);
  expect(inv.dimension() == o["charvar1_dimension"].get<int>(), "dimension " + str(inv.dimension()));
  expect(inv.hilbert.genus && *inv.hilbert.genus == o["charvar1_genus"].get<long>(),
         "genus " + (inv.hilbert.genus ? inv.hilbert.genus->get_str() : std::string("none")));
  const auto &hf = o["charvar1_hilbert_function"];
  for (std::size_t d = 0; d < hf.size(); ++d)
    expect(inv.hilbert.series_coefficient(d) == hf[d].get<long>(), "Hilbert function at " + str(d));
}

std::string cli_output(const std::string &args) {
  namespace fs = std::filesystem;
  fs::path out = fs::temp_directory_path() / ("jacobi_acceptance_" + std::to_string(::getpid()) + ".json");
  const std::string cmd = std::string(JACOBI_CLI_PATH) + " " + args + " -o " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  expect(WIFEXITED(raw) && WEXITSTATUS(raw) == 0, "command failed: " + args);
  std::ifstream in(out, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(out);
  return ss.str();
}

// 8
void determinism() {
  for (const std::string args : {"all --lambda 1,2,3,4,5,6,7,8 --threads 1", "all --random --seed 42 --threads 3",
                                 "all --random --seed 7 --field gfp --modulus 32003"}) {
    const auto a = cli_output(args), b = cli_output(args);
    expect(!a.empty() && a == b, "reports differ for: " + args);
  }
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"hyperelliptic headline: dims (1,9,9,1), U33 = 78 > 65", headline},
      {"symmetric index bijections", bijections},
      {"Groebner basis properties", groebner_properties},
      {"Higgs field consistency", higgs_consistency},
      {"characteristic variety evaluation oracles", evaluation_oracles},
      {"Hilbert series against brute force", hilbert_oracle},
      {"U42 and first-variety invariants against fixtures", derived_fixtures},
      {"byte-identical reports", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      criteria[i].second();
    } catch (const std::exception &e) {
      reason = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (reason.empty() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!reason.empty()) std::cout << " -- " << reason;
    std::cout << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    if (!reason.empty()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
