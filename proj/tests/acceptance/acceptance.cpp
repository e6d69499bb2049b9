// Acceptance suite: one PASS/FAIL line per criterion. `--only N` runs a single
// criterion. Exit status is nonzero iff a selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "quatsurf/kernels.hpp"
#include "quatsurf/poly.hpp"
#include "quatsurf/pythagorean.hpp"
#include "quatsurf/qmat.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/torus.hpp"

using namespace quatsurf;
namespace t = quatsurf::testing;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

/// deg_u <= du, deg_v <= dv with a nonzero term at (du, dv).
QPolyUV exact_bidegree(t::Rng& rng, int du, int dv, long bound) {
  QPolyUV p = t::qpoly_uv(rng, du, dv, bound, 0.6);
  p = p - QPolyUV::monomial({du, dv}, p.coeff({du, dv}));
  return p + QPolyUV::monomial({du, dv}, t::nonzero_quaternion(rng, bound));
}

Verdict ore_division() {
  t::Rng rng(1001);
  int bad = 0;
  for (int n = 0; n < 1000; ++n) {
    const QPolyU a = t::qpoly_u(rng, 6, 1000);
    const QPolyU b = t::qpoly_u(rng, 6, 1000);
    const DivRem l = left_div_rem(a, b);
    const DivRem r = right_div_rem(a, b);
    const bool ok = b * l.quotient + l.remainder == a && l.remainder.degree() < b.degree() &&
                    r.quotient * b + r.remainder == a && r.remainder.degree() < b.degree();
    bad += !ok;
  }
  return {bad == 0, "1000 pairs, " + std::to_string(bad) + " violations"};
}

Verdict split_round_trip() {
  t::Rng rng(1002);
  std::vector<Mat2> batch;
  for (int n = 0; n < 500; ++n) {
    const Vec2 x{t::qpoly_uv(rng, 2, 0, 20, 0.7), t::qpoly_uv(rng, 2, 0, 20, 0.7)};
    const Vec2 y{t::qpoly_uv(rng, 2, 1, 20, 0.6), t::qpoly_uv(rng, 2, 1, 20, 0.6)};
    batch.push_back(kron(x, y));
  }
  const auto outcomes = split_batch(batch);
  int ok = 0;
  for (std::size_t k = 0; k < batch.size(); ++k)
    ok += outcomes[k].certificate && kron(outcomes[k].certificate->x, outcomes[k].certificate->y) == batch[k];
  return {ok == 500, std::to_string(ok) + "/500 split and reproduce"};
}

Verdict degeneracy_iff_pythagorean() {
  t::Rng rng(1003);
  std::vector<PyTuple> tuples;
  for (int n = 0; n < 500; ++n) {
    PyTuple tup = tuple_from_pair(t::qpoly_uv(rng, 1, 1, 10, 0.7), t::qpoly_uv(rng, 1, 1, 10, 0.7));
    if (n % 2 == 1) {
      const int slot = static_cast<int>(t::uniform(rng, 0, 5));
      tup[slot] = tup[slot] + RPolyUV::monomial({static_cast<int>(t::uniform(rng, 0, 2)), static_cast<int>(t::uniform(rng, 0, 2))},
                                                t::nonzero_rational(rng, 10));
    }
    tuples.push_back(std::move(tup));
  }
  std::vector<Mat2> matrices;
  for (const auto& tup : tuples) matrices.push_back(tuple_to_matrix(tup));
  const auto degenerate = degenerate_batch(matrices);
  int agree = 0, identity_holds = 0;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const bool p = is_pythagorean(tuples[k]);
    identity_holds += p;
    agree += p == degenerate[k];
  }
  return {agree == 500 && identity_holds >= 250,
          std::to_string(agree) + "/500 agree, identity holds on " + std::to_string(identity_holds)};
}

/// Degree splits (da, db) of a total of at most 2.
constexpr std::array<std::pair<int, int>, 6> kSumAtMost2{{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}};
constexpr std::array<std::pair<int, int>, 4> kEachAtMost1{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

template <std::size_t N>
Verdict degree_bound(const std::array<std::pair<int, int>, N>& splits, std::uint64_t seed) {
  t::Rng rng(seed);
  int bad = 0, worst_u = 0, worst_v = 0;
  for (int n = 0; n < 200; ++n) {
    const auto [au, bu] = splits[static_cast<std::size_t>(t::uniform(rng, 0, N - 1))];
    const auto [av, bv] = splits[static_cast<std::size_t>(t::uniform(rng, 0, N - 1))];
    const PyTuple tup = tuple_from_pair(exact_bidegree(rng, au, av, 10), exact_bidegree(rng, bu, bv, 10));
    worst_u = std::max(worst_u, tup.max_deg_u());
    worst_v = std::max(worst_v, tup.max_deg_v());
    bad += tup.max_deg_u() > 2 || tup.max_deg_v() > 2;
  }
  return {bad == 0, "200 pairs, " + std::to_string(bad) + " exceed bidegree (2,2); max degrees (" +
                        std::to_string(worst_u) + "," + std::to_string(worst_v) + ")"};
}

template <class Payload>
Verdict families(std::uint64_t seed, bool check_norm) {
  t::Rng rng(seed);
  const auto params = grid_parameters(9);
  int curves = 0, circles = 0, norm_bad = 0, masked = 0;
  for (int n = 0; n < 20; ++n) {
    const Payload payload = [&] {
      if constexpr (std::is_same_v<Payload, EPayload>)
        return Payload{t::circle3(rng, 9), t::circle3(rng, 9)};
      else
        return Payload{t::circle_s3(rng, 9), t::circle_s3(rng, 9)};
    }();
    const SurfaceSpec spec{payload};
    if (check_norm) {
      if constexpr (std::is_same_v<Payload, CPayload>)
        for (const auto& u : params)
          for (const auto& v : params) norm_bad += eval_c(payload, u, v).norm2() != 1;
    }
    const SurfaceGrid grid = sample_grid(spec, 9);
    masked += static_cast<int>(grid.cells.size() - grid.valid_count());
    for (const auto& c : check_coordinate_curves(spec, params, params)) {
      ++curves;
      circles += c.circle && c.points >= 7;
    }
  }
  std::string detail = std::to_string(circles) + "/" + std::to_string(curves) + " curves are circles";
  if (check_norm) detail += ", " + std::to_string(norm_bad) + " samples off S^3, " + std::to_string(masked) + " masked";
  return {circles == curves && norm_bad == 0, detail};
}

Verdict torus() {
  const Quadric4 q = t::torus_quadric();
  const Poly4 quartic = cyclide_implicit(q);
  const auto ratio = quartic.ratio_to(t::torus_quartic());
  t::Rng rng(1007);
  int off = 0;
  for (int n = 0; n < 200; ++n) {
    const Point3 p = t::torus_point(t::rational(rng, 30), t::rational(rng, 30));
    const Quaternion s = stereo_inv(p);
    off += q.value({s.w(), s.x(), s.y(), s.z(), Rational(1)}) != 0;
    off += quartic.eval<Rational>({p[0], p[1], p[2], Rational(1)}) != 0;
  }
  int villarceau = 0;
  const t::Surd3 root3(Rational(0), Rational(1));
  for (int sign : {1, -1}) {
    const auto h = t::homogeneous_circle({t::Surd3(0), t::Surd3(sign), t::Surd3(0)}, {root3, t::Surd3(0), t::Surd3(sign)},
                                         {t::Surd3(0), t::Surd3(2), t::Surd3(0)});
    villarceau += quartic.eval<t::SurdPoly>(h).is_zero();
  }
  const bool scalar = ratio && sgn(*ratio) != 0;
  return {scalar && off == 0 && villarceau == 2,
          std::string(scalar ? "quartic = " + to_string(*ratio) + " x known" : "quartic not proportional") + ", " +
              std::to_string(off) + " of 400 membership checks fail, " + std::to_string(villarceau) +
              "/2 Villarceau circles vanish"};
}

Verdict sphere_map() {
  t::Rng rng(1008);
  int bad = 0, skipped = 0;
  for (int n = 0; n < 100; ++n) {
    const PyTuple tup = tuple_from_pair(t::nonzero_qpoly_uv(rng, 1, 1, 10), t::nonzero_qpoly_uv(rng, 1, 1, 10));
    for (int k = 0; k < 25;) {
      const Rational u0 = t::rational(rng, 50), v0 = t::rational(rng, 50);
      try {
        const auto y = tuple_to_sphere_map(tup, u0, v0);
        Rational s;
        for (const auto& c : y) s += c * c;
        bad += s != 1;
        ++k;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BasePoint) throw;
        ++skipped;
      }
    }
  }
  return {bad == 0, "2500 points, " + std::to_string(bad) + " off S^4, " + std::to_string(skipped) + " base points redrawn"};
}

Verdict determinism_and_round_trips() {
  int bad_files = 0, bad_runs = 0;
  const auto files = t::corpus_files();
  for (const auto& f : files) bad_files += !t::check_fixture_round_trip(f).empty();
  const auto dir = t::fs::temp_directory_path() / "quatsurf_acceptance";
  t::fs::create_directories(dir);
  const auto cmds = t::corpus_commands();
  for (const auto& [args, code] : cmds) {
    const auto a = t::run_cli(args, dir / "a"), b = t::run_cli(args, dir / "b");
    bad_runs += !(a == b) || a.code != code;
  }
  t::fs::remove_all(dir);
  t::Rng rng(1009);
  const int fuzz_bad = t::fuzz_round_trips(rng, 100);
  return {bad_files == 0 && bad_runs == 0 && fuzz_bad == 0 && !files.empty(),
          std::to_string(files.size()) + " fixtures (" + std::to_string(bad_files) + " bad), " +
              std::to_string(cmds.size()) + " commands run twice (" + std::to_string(bad_runs) + " differ), fuzz " +
              std::to_string(fuzz_bad) + " failures"};
}

struct Criterion {
  int id;
  const char* label;
  std::function<Verdict()> run;
  bool counts = true;  // companion lines are informational
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--only") == 0 && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "Ore division contract", ore_division},
      {2, "Kronecker split round trip", split_round_trip},
      {3, "degeneracy iff Pythagorean", degeneracy_iff_pythagorean},
      {4, "degree bound, deg a + deg b <= 2", [] { return degree_bound(kSumAtMost2, 1004); }},
      {4, "degree bound, deg a, deg b <= 1 (companion)", [] { return degree_bound(kEachAtMost1, 1004); }, false},
      {5, "family E coordinate curves", [] { return families<EPayload>(1005, false); }},
      {6, "family C unit norm and curves", [] { return families<CPayload>(1006, true); }},
      {7, "family D torus quartic", torus},
      {8, "sphere map", sphere_map},
      {9, "determinism and JSON round trips", determinism_and_round_trips},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d%s: %s  %s  [%s] (%.2f s)\n", c.id, c.counts ? "" : "b", v.pass ? "PASS" : "FAIL", c.label,
                v.detail.c_str(), secs);
    std::fflush(stdout);
    if (c.counts) all = all && v.pass;
  }
  return all ? 0 : 1;
}
