// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "liedec/cartan.hpp"
#include "liedec/closure.hpp"
#include "liedec/dynamics.hpp"
#include "liedec/ideals.hpp"
#include "liedec/levi.hpp"
#include "liedec/primary.hpp"
#include "liedec/repr.hpp"
#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace liedec;
using namespace liedec::test;
using Segments = std::vector<ControlSchedule::Segment>;

namespace {

int failures = 0;

void report(int id, const std::string& what, const std::function<std::string()>& check) {
  std::string detail;
  try {
    detail = check();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const bool ok = detail.empty();
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(), ok ? "" : " -- ",
              detail.c_str());
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

LieBasis span3(const std::array<SkewHermitian, 3>& t) { return orthonormal_span({t[0], t[1], t[2]}, 4); }

LieBasis two_spin_cartan_span() {
  return orthonormal_span({ih(kron(sx(), one2())), ih(kron(one2(), sx()))}, 4);
}

// mutual membership of two spans: worst residual of either basis against the other
double mutual(const LieBasis& a, const LieBasis& b) {
  if (a.size() != b.size()) return INFINITY;
  double r = 0.0;
  for (const auto& x : a) r = std::max(r, b.residual(x));
  for (const auto& x : b) r = std::max(r, a.residual(x));
  return r;
}

RMatrix reference_ad(int which) {
  RMatrix m = RMatrix::Zero(6, 6);
  if (which == 0) {
    m(2, 5) = 1;
    m(3, 4) = -1;
    m(4, 3) = 1;
    m(5, 2) = -1;
  } else {
    m(2, 4) = 1;
    m(3, 5) = -1;
    m(4, 2) = -1;
    m(5, 3) = 1;
  }
  return m;
}

std::size_t component_of(const ComponentDecomposition& d, const LieBasis& target) {
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    if (mutual(d.components[k].basis, target) <= 1e-8) return k;
  }
  throw std::runtime_error("ideal not found among the components");
}

struct RandomCase {
  LieBasis algebra;
  LeviResult levi;
};

std::vector<RandomCase> random_cases() {
  std::mt19937_64 rng(2024);
  std::vector<RandomCase> out;
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + trial % 3;
    const int count = 1 + (trial / 3) % 3;
    const Index block = (trial % 4 == 3 && n > 2) ? n / 2 : 0;
    std::vector<SkewHermitian> gens;
    for (int k = 0; k < count; ++k) gens.push_back(random_skew(rng, n, trial % 5 == 0, block));
    const LieBasis l = generate_closure(gens).basis;
    out.push_back({l, levi_decompose(l)});
  }
  return out;
}

}  // namespace

int main() {
  const ControlSystem sys = two_spin_system();
  const LieBasis basis = two_spin_basis();

  report(1, "two-spin closure has dimension 6 and contains the reference basis", [&] {
    const auto r = generate_closure(sys.lie_generators());
    if (r.basis.size() != 6) return fmt("dimension %.0f", static_cast<double>(r.basis.size()));
    double worst = 0.0;
    for (const auto& e : two_spin_elements()) worst = std::max(worst, r.basis.residual(e));
    return worst <= 1e-9 ? std::string() : fmt("membership residual %.3g", worst);
  });

  report(2, "two-spin system is uncontrollable (6 < 15)", [&] {
    const auto r = generate_closure(sys.lie_generators());
    const auto v = is_controllable(r);
    return v == Controllability::uncontrollable ? std::string() : "verdict " + std::string(to_string(v));
  });

  report(3, "radical is 0, derived algebra has dimension 6", [&] {
    const auto l = levi_decompose(basis);
    if (!l.radical.empty()) return fmt("radical dimension %.0f", static_cast<double>(l.radical.size()));
    const auto d = derived_algebra(basis);
    return d.size() == 6 ? std::string() : fmt("derived dimension %.0f", static_cast<double>(d.size()));
  });

  report(4, "Cartan subalgebra from pivot i x(x)1 is span{i x(x)1, i 1(x)x}", [&] {
    const std::vector<SkewHermitian> pivots{ih(kron(sx(), one2()))};
    const auto r = cartan_subalgebra(basis, pivots);
    const double m = mutual(r.cartan, two_spin_cartan_span());
    return m <= 1e-9 ? std::string() : fmt("mutual membership residual %.3g", m);
  });

  report(5, "adjoint matrices match the reference 6x6 matrices", [&] {
    const auto raw = two_spin_elements();
    double worst = 0.0;
    for (int k = 0; k < 2; ++k) {
      worst = std::max(worst, (adjoint_matrix(basis, raw[k]) - reference_ad(k)).cwiseAbs().maxCoeff());
    }
    return worst <= 1e-12 ? std::string() : fmt("max entry error %.3g", worst);
  });

  report(6, "(1,2) splits with 0, +-i, +-3i; (1,0), (0,1), (1,1) do not", [&] {
    const LieBasis a = two_spin_cartan_span();
    RVector c(2);
    c << 1, 2;
    const auto hit = try_splitting(basis, a, c);
    if (!hit) return std::string("(1,2) rejected");
    if (hit->distinct_eigenvalues != 5 || hit->frequencies.size() != 2 ||
        std::abs(hit->frequencies[0] - 3.0) > 1e-9 || std::abs(hit->frequencies[1] - 1.0) > 1e-9) {
      return std::string("unexpected spectrum for (1,2)");
    }
    for (const auto& [x, y] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{1.0, 1.0}}) {
      c << x, y;
      if (try_splitting(basis, a, c)) return fmt("(%.0f,%.0f) accepted", x, y);
    }
    return std::string();
  });

  report(7, "primary components match V1 and V2", [&] {
    const auto r = primary_decompose(basis, two_spin_cartan_span());
    if (r.components.size() != 2) return std::string("wrong number of components");
    const auto ia = ideal_a();
    const auto ib = ideal_b();
    const double m1 = mutual(r.components[0].basis, orthonormal_span({ia[1], ia[2]}, 4));
    const double m2 = mutual(r.components[1].basis, orthonormal_span({ib[1], ib[2]}, 4));
    const double m = std::max(m1, m2);
    return m <= 1e-8 ? std::string() : fmt("mutual membership residual %.3g", m);
  });

  report(8, "two su(2) ideals S_A, S_B that commute", [&] {
    const auto d = decompose_system(sys);
    if (d.components.size() != 2) return std::string("wrong number of ideals");
    for (const auto& c : d.components) {
      if (c.kind != ComponentKind::simple || c.basis.size() != 3) return std::string("ideal is not 3-dimensional");
    }
    const double br = max_bracket_norm(d.components[0].basis, d.components[1].basis);
    if (br > 1e-8) return fmt("[S_A, S_B] residual %.3g", br);
    for (const auto& ref : {ideal_a(), ideal_b()}) {
      const auto t = recognize_su2(d.components[component_of(d, span3(ref))].basis);
      if (!t) return std::string("su(2) not recognized");
      if (t->relation_residual > 1e-8) return fmt("relation residual %.3g", t->relation_residual);
      // each E_k is a multiple of a different reference element
      std::vector<bool> hit(3, false);
      for (const auto& e : t->e) {
        double best = INFINITY;
        std::size_t arg = 0;
        for (std::size_t j = 0; j < 3; ++j) {
          const double r = dist(e, (hs_inner(e, ref[j]) / hs_inner(ref[j], ref[j])) * ref[j]);
          if (r < best) best = r, arg = j;
        }
        if (best > 1e-8) return fmt("element off the reference lines by %.3g", best);
        hit[arg] = true;
      }
      if (!(hit[0] && hit[1] && hit[2])) return std::string("triple does not cover all reference directions");
    }
    return std::string();
  });

  report(9, "projected generators on S_A and S_B", [&] {
    const auto d = decompose_system(sys);
    const auto ia = ideal_a();
    const auto ib = ideal_b();
    const std::size_t ka = component_of(d, span3(ia));
    const std::size_t kb = component_of(d, span3(ib));
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> g(-2.0, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::vector<double> u{g(rng), g(rng)};
      const auto p = project_generator(d, sys, u);
      worst = std::max(worst, dist(p[ka], -1.0 * ((u[0] - u[1]) * ia[2] + ia[0])));
      worst = std::max(worst, dist(p[kb], -1.0 * ((u[0] + u[1]) * ib[2] - ib[0])));
    }
    return worst <= 1e-9 ? std::string() : fmt("worst error %.3g", worst);
  });

  report(10, "X(T) = U_A U_B = U_B U_A and each factor sees only its own control combination", [&] {
    const auto d = decompose_system(sys);
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> g(-2.0, 2.0), dur(0.01, 1.0);
    std::uniform_int_distribution<int> segs(1, 8);
    double fact = 0.0, comm = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<ControlSchedule::Segment> s;
      const int m = segs(rng);
      for (int k = 0; k < m; ++k) s.push_back({dur(rng), {g(rng), g(rng)}});
      const auto r = propagate(d, sys, ControlSchedule(s));
      fact = std::max(fact, dist(r.total, r.factors[0] * r.factors[1]));
      comm = std::max(comm, dist(r.factors[0] * r.factors[1], r.factors[1] * r.factors[0]));
    }
    if (fact > 1e-8) return fmt("factorization error %.3g", fact);
    if (comm > 1e-8) return fmt("commutation residual %.3g", comm);
    const std::size_t ka = component_of(d, span3(ideal_a()));
    const std::size_t kb = component_of(d, span3(ideal_b()));
    double rep = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const double diff = g(rng), sum1 = g(rng), sum2 = g(rng), t = dur(rng);
      // same u1 - u2, different u1 + u2
      const auto r1 = propagate(d, sys, ControlSchedule(Segments{{t, {(sum1 + diff) / 2, (sum1 - diff) / 2}}}));
      const auto r2 = propagate(d, sys, ControlSchedule(Segments{{t, {(sum2 + diff) / 2, (sum2 - diff) / 2}}}));
      rep = std::max(rep, dist(r1.factors[ka], r2.factors[ka]));
      // same u1 + u2, different u1 - u2
      const auto r3 = propagate(d, sys, ControlSchedule(Segments{{t, {(sum1 + sum2) / 2, (sum1 - sum2) / 2}}}));
      rep = std::max(rep, dist(r1.factors[kb], r3.factors[kb]));
    }
    return rep <= 1e-9 ? std::string() : fmt("reparameterization error %.3g", rep);
  });

  const auto cases = random_cases();

  report(11, "random subalgebras: Abelian central radical, dimensions add up", [&] {
    for (const auto& c : cases) {
      const auto& l = c.levi;
      if (l.radical.size() + l.semisimple.size() != c.algebra.size()) return std::string("dimensions do not add up");
      const double ab = max_bracket_norm(l.radical, l.radical);
      if (ab > 1e-8) return fmt("radical not Abelian: %.3g", ab);
      const double cm = max_bracket_norm(l.radical, l.semisimple);
      if (cm > 1e-8) return fmt("radical does not commute with S: %.3g", cm);
    }
    return std::string();
  });

  report(12, "ad is antisymmetric in a Killing-orthonormal basis", [&] {
    std::mt19937_64 rng(12);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (const auto& c : cases) {
      if (c.levi.semisimple.empty()) continue;
      const KillingFrame f = killing_orthonormalize(c.levi.semisimple);
      for (int k = 0; k < 5; ++k) {
        RVector coef(c.levi.semisimple.size());
        for (Index i = 0; i < coef.size(); ++i) coef[i] = g(rng);
        const RMatrix ad = f.adjoint(c.levi.semisimple.combine(coef));
        worst = std::max(worst, (ad + ad.transpose()).norm());
      }
    }
    return worst <= 1e-8 ? std::string() : fmt("worst ||ad + ad^T|| %.3g", worst);
  });

  report(13, "primary decomposition conditions on random semisimple parts", [&] {
    const double tau = Tolerances{}.eig;
    int used = 0;
    for (const auto& c : cases) {
      const LieBasis& s = c.levi.semisimple;
      if (s.empty()) continue;
      ++used;
      const auto p = primary_decompose(s, cartan_subalgebra(s).cartan);
      const auto& freq = p.splitting.frequencies;
      for (std::size_t k = 0; k < freq.size(); ++k) {
        const double next = k + 1 < freq.size() ? freq[k + 1] : 0.0;
        if (freq[k] - next <= tau * freq.front()) return fmt("frequencies %.6g and %.6g not separated", freq[k], next);
      }
      for (const auto& v : p.components) {
        if (v.basis.size() != 2) return std::string("component is not 2-dimensional");
        const double inv = invariance_residual(p.cartan, v.basis);
        if (inv > 1e-8) return fmt("invariance residual %.3g", inv);
        for (const auto& a : p.cartan) {
          const RMatrix m = restricted_adjoint(v.basis, a);
          const double rot = std::max({std::abs(m(0, 0)), std::abs(m(1, 1)), std::abs(m(0, 1) + m(1, 0))});
          if (rot > 1e-8) return fmt("restriction not a rotation generator: %.3g", rot);
        }
      }
    }
    return used > 0 ? std::string() : std::string("no semisimple cases generated");
  });

  return failures == 0 ? 0 : 1;
}
