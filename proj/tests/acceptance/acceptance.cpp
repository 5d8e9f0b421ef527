// Runs acceptance criteria 1-11 and prints one line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "motive/dsl.hpp"
#include "motive/errors.hpp"
#include "motive/incidence.hpp"
#include "motive/level_arithmetic.hpp"
#include "motive/motive_report.hpp"
#include "motive/report.hpp"
#include "motive/surface_calculus.hpp"
#include "motive/symmetry_algebra.hpp"
#include "motive/threefold_calculus.hpp"

using namespace motive;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  Outcome& outcome() { return out_; }

 private:
  Outcome out_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds_since(t0);
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

Outcome group_ring_suite() {
  Check c;
  double t = timed([&] {
    for (int N : {3, 4, 5, 7}) {
      std::string at = " at N=" + std::to_string(N);
      QG eps = epsilon_projector(N);
      auto [lambda, theta] = lambda_theta(N);
      auto [a2, s2] = symmetrizers(N);
      QG one = QG::unit(GElem::identity(N));
      c.require(eps * eps == eps, "eps idempotent" + at);
      c.require(lambda * lambda == lambda, "lambda idempotent" + at);
      c.require(theta * theta == theta, "theta idempotent" + at);
      c.require(lambda * theta == theta * lambda, "lambda, theta commute" + at);
      c.require(eps * lambda == eps && eps * theta == eps, "eps absorbs lambda, theta" + at);
      c.require((eps * (one - lambda)).is_zero(), "eps orthogonal to 1 - lambda" + at);
      c.require(a2 * a2 == a2 && s2 * s2 == s2, "A2, S2 idempotent" + at);
      c.require((a2 * s2).is_zero() && (s2 * a2).is_zero(), "A2, S2 orthogonal" + at);
      QG2 e2 = epsilon2_projector(N);
      c.require(e2 * a2 == a2 * e2, "A2 commutes with eps2" + at);
    }
  });
  c.require(t < 10.0, "runtime " + fmt_seconds(t) + " >= 10s");
  c.outcome().detail += std::string(c.outcome().detail.empty() ? "" : "; ") + fmt_seconds(t);
  return c.outcome();
}

Outcome surface_certificates() {
  Check c;
  double t8 = 0;
  for (int N : {3, 4, 5, 7, 8}) {
    std::string at = " at N=" + std::to_string(N);
    double t = timed([&] {
      SurfaceProjectors p = build_pi_bars(N);
      std::vector<SurfCorr> ps(p.pi.begin(), p.pi.end());
      for (long k = 0; k < cusp_count(N); ++k) ps.push_back(build_pi_cusp(N, static_cast<int>(k)));
      ps.push_back(residual_projector(N));
      // pi_inf = Delta - pi_f contains each pi_c; the remaining pairs are orthogonal.
      const std::size_t res = ps.size() - 1;
      auto is_cusp = [&](std::size_t i) { return i >= 3 && i < res; };
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
          SurfCorr prod = compose(ps[i], ps[j]);
          bool ok;
          if (i == j)
            ok = prod == ps[i];
          else if ((i == res && is_cusp(j)) || (j == res && is_cusp(i)))
            ok = prod == ps[i == res ? j : i];
          else
            ok = prod.is_zero();
          c.require(ok, "product " + std::to_string(i) + "," + std::to_string(j) + at);
        }
      Certificate cert = surface_certificate(N);
      for (const auto& e : cert.entries) c.require(e.status != Status::Fail, e.name + at);
    });
    if (N == 8) t8 = t;
  }
  c.require(t8 < 30.0, "N=8 runtime " + fmt_seconds(t8));
  c.outcome().detail += std::string(c.outcome().detail.empty() ? "" : "; ") + "N=8 in " + fmt_seconds(t8);
  return c.outcome();
}

Outcome neron() {
  Check c;
  for (int N = 3; N <= 12; ++N) {
    NeronLattice L = neron_lattice(N);
    c.require(L.rank == static_cast<std::size_t>(N - 1), "rank at N=" + std::to_string(N));
    c.require(L.reduced_inverse * L.reduced_block == RatMatrix::identity(N - 1), "inverse at N=" + std::to_string(N));
  }
  return c.outcome();
}

bool coherent(int N, const SurfAtom& x, const SurfAtom& y, const DivBasis& z) {
  SurfCorr cx = surf_atom(N, x), cy = surf_atom(N, y);
  DivClass dz = DivClass::of(N, z);
  auto side = [&](auto&& f) -> std::string {
    try {
      return f().to_string();
    } catch (const DegreeOverflow&) {
      return "overflow";
    }
  };
  return side([&] { return act_on_divisor(compose(cx, cy), dz); }) ==
         side([&] { return act_on_divisor(cx, act_on_divisor(cy, dz)); });
}

Outcome coherence() {
  Check c;
  std::size_t n3 = 0;
  {
    auto atoms = surface_atom_universe(3);
    auto basis = divisor_basis(3);
    for (const auto& x : atoms)
      for (const auto& y : atoms)
        for (const auto& z : basis) {
          c.require(coherent(3, x, y, z), x.to_string() + " o " + y.to_string() + " on " + z.to_string());
          ++n3;
        }
  }
  auto atoms = surface_atom_universe(5);
  auto basis = divisor_basis(5);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pa(0, atoms.size() - 1), pb(0, basis.size() - 1);
  const int n5 = 10000;
  for (int i = 0; i < n5; ++i) {
    const auto &x = atoms[pa(rng)], &y = atoms[pa(rng)];
    const auto& z = basis[pb(rng)];
    c.require(coherent(5, x, y, z), x.to_string() + " o " + y.to_string() + " on " + z.to_string() + " at N=5");
  }
  c.outcome().detail += std::string(c.outcome().detail.empty() ? "" : "; ") + std::to_string(n3) + " triples at N=3, " +
                        std::to_string(n5) + " at N=5";
  return c.outcome();
}

Outcome word_algebra() {
  Check c;
  for (int N : {3, 5}) {
    SurfCorr p0 = p_bar_zero(N), p2 = p_bar_two(N);
    for (int len = 1; len <= 6; ++len)
      for (int bits = 0; bits < (1 << len); ++bits) {
        std::string w, r;
        SurfCorr value = surf_identity(N);
        for (int i = 0; i < len; ++i) {
          bool two = (bits >> i) & 1;
          w.push_back(two ? '2' : '0');
          value = compose(value, two ? p2 : p0);
          if (r.empty() || r.back() != w.back()) r.push_back(w.back());
        }
        SurfCorr expected(N);
        if (r.find("20") == std::string::npos) {
          if (r == "0") expected = p0;
          if (r == "2") expected = p2;
          if (r == "02") expected = vertical(N);
        }
        c.require(value == expected, "word " + w + " at N=" + std::to_string(N));
      }
  }
  return c.outcome();
}

Outcome threefold() {
  Check c;
  double t5 = 0;
  for (int N : {3, 4, 5}) {
    std::string at = " at N=" + std::to_string(N);
    double t = timed([&] {
      Certificate cert = threefold_certificate(N);
      for (const auto& e : cert.entries) c.require(e.status != Status::Fail, e.name + at);
      SurfaceProjectors bar = build_pi_bars(N);
      ThreefoldProjectors p = build_pi_tildes(N);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          c.require(expand(transpose(p.pi[i][j])) == expand(p.pi[2 - i][2 - j]), "transpose" + at);
          c.require(expand(restrict_factored(p.pi[i][j])) ==
                        open_tensor(restrict_to_open(bar.pi[i]), restrict_to_open(bar.pi[j])),
                    "restriction of pi~" + std::to_string(i) + std::to_string(j) + at);
        }
    });
    if (N == 5) t5 = t;
  }
  c.require(t5 < 60.0, "N=5 runtime " + fmt_seconds(t5));
  c.outcome().detail += std::string(c.outcome().detail.empty() ? "" : "; ") + "N=5 in " + fmt_seconds(t5);
  return c.outcome();
}

Outcome multiplicities() {
  Check c;
  for (long q = 0; q <= 4; ++q) {
    long sum = 0;
    for (long r = 0; r <= 4; ++r) {
      sum += local_multiplicity(q, r) * (r + 1);
      if ((q + r) % 2) c.require(local_multiplicity(q, r) == 0, "parity q=" + std::to_string(q));
    }
    c.require(sum == binomial(4, q), "dimension q=" + std::to_string(q));
  }
  return c.outcome();
}

Outcome betti() {
  Check c;
  auto table = [](int N) {
    std::vector<long> v;
    for (const Count& x : realize_betti(decompose_surface(N), true).b) v.push_back(x.value());
    return v;
  };
  c.require(table(3) == std::vector<long>{1, 0, 10, 0, 1}, "N=3 table");
  c.require(table(4) == std::vector<long>{1, 0, 22, 0, 1}, "N=4 table");
  for (int N = 3; N <= 10; ++N) {
    std::string at = " at N=" + std::to_string(N);
    LevelInvariants inv = level_invariants(N);
    BettiTable t = realize_betti(decompose_surface(N), true);
    c.require(t.euler().value() == N * inv.cusp_count, "Euler" + at);
    c.require(t.poincare_symmetric(), "Poincare" + at);
    SurfaceMultiplicity m = surface_multiplicity(N);
    c.require(m.assembly == m.from_betti, "m routes" + at);
  }
  return c.outcome();
}

Outcome discrepancy() {
  Check c;
  std::string values;
  for (int N = 3; N <= 10; ++N) {
    SurfaceMultiplicity m = surface_multiplicity(N);
    c.require(m.discrepancy() == 2, "difference at N=" + std::to_string(N));
    std::string text = report::decompose_text(N, false);
    c.require(text.find("[flagged]") != std::string::npos, "flag missing at N=" + std::to_string(N));
    if (N <= 5) values += (values.empty() ? "" : ", ") + std::to_string(m.assembly) + " vs " + std::to_string(m.closed_form);
  }
  c.outcome().detail += std::string(c.outcome().detail.empty() ? "" : "; ") + "flagged: " + values + ", ...";
  return c.outcome();
}

Outcome experimental_n() {
  Check c;
  std::string values;
  for (int N : {3, 4, 5}) {
    NEstimate e = estimate_n(N);
    c.require(e.consistent && e.n_euler > 0, "routes disagree at N=" + std::to_string(N));
    c.require(e.euler_fiber == 4L * N * N, "euler_fiber at N=" + std::to_string(N));
    values += (values.empty() ? "n = " : ", ") + std::to_string(e.n_euler);
  }
  c.outcome().detail += std::string(c.outcome().detail.empty() ? "" : "; ") + values;
  return c.outcome();
}

Outcome dsl_checks() {
  using namespace motive::dsl;
  Check c;
  auto zero = [](const std::string& s, int N) { return is_zero(eval_expr(*parse_expr(s), N, Mode::Surface)); };
  c.require(zero("pi1 . pi2", 3), "pi1 . pi2");
  c.require(zero("piC(0) . piC(1)", 4), "piC(0) . piC(1)");
  for (const char* s : {"pi0 . pi0 - pi0", "pi1 . pi1 - pi1", "pi2 . pi2 - pi2", "piC(0) . piC(0) - piC(0)",
                        "piInf . piInf - piInf"})
    c.require(zero(s, 3), s);
  c.require(is_zero(eval_expr(*parse_expr("ptilde(1,1) . ptilde(1,1) - ptilde(1,1)"), 3, Mode::Threefold)),
            "threefold idempotency");
  std::string a = report::run_report(3).json.dump(2);
  std::string b = report::run_report(3).json.dump(2);
  c.require(a == b, "report JSON differs across runs");
  return c.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    bool experimental;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "group-ring suite", false, group_ring_suite},
      {2, "surface certificate", false, surface_certificates},
      {3, "Neron lattice", false, neron},
      {4, "coherence oracle", false, coherence},
      {5, "word-algebra equivalence", false, word_algebra},
      {6, "threefold certificate", false, threefold},
      {7, "multiplicity formula", false, multiplicities},
      {8, "Betti/Euler", false, betti},
      {9, "documented discrepancy", false, discrepancy},
      {10, "experimental n", true, experimental_n},
      {11, "DSL and report determinism", false, dsl_checks},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const char* tag = o.ok ? "PASS" : (cr.experimental ? "WARN" : "FAIL");
    if (!o.ok && !cr.experimental) ++failed;
    std::cout << "[" << tag << "] criterion " << cr.id << ": " << cr.name << (cr.experimental ? " (experimental)" : "");
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
