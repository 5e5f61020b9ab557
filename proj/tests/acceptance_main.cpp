// Acceptance gate: one line per criterion, PASS only when every check in the
// criterion holds (and the timed criteria finish inside their budgets).
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fiberforge/bundle.hpp"
#include "fiberforge/euler_lcf.hpp"
#include "fiberforge/game.hpp"
#include "fiberforge/homology.hpp"
#include "fiberforge/presets.hpp"
#include "fiberforge/sphere_enum.hpp"
#include "fiberforge/total_space.hpp"

using namespace fiberforge;

namespace {

struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() %
                                           static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool flip() { return next() & 1; }
};

struct Criterion {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 8) failures.push_back(what);
        if (!ok && failures.size() == 8) failures.push_back("...");
    }
};

bool run(int number, const std::string& description, double budget_seconds,
         const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                   start)
                         .count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        std::ostringstream b;
        b << "took " << elapsed << "s, budget " << budget_seconds << "s";
        c.expect(false, b.str());
    }
    std::ostringstream line;
    line << "CRITERION " << number << ": " << (c.failures.empty() ? "PASS" : "FAIL")
         << " — " << description;
    if (!c.failures.empty()) {
        line << " (";
        for (std::size_t i = 0; i < c.failures.size(); ++i)
            line << (i ? "; " : "") << c.failures[i];
        line << ")";
    }
    std::cout << line.str() << std::endl;
    return c.failures.empty();
}

std::string group_str(const HomologyGroup& h) { return homology_to_string(h); }

// all admissible Euler numbers for the surface: 4|e| <= f
std::vector<long long> admissible_eulers(const SimplicialComplex& b) {
    long long f = b.count(2);
    long long cap = f / 4;
    std::vector<long long> out;
    for (long long e = -cap; e <= cap; ++e) out.push_back(e);
    return out;
}

Cochain random_orientation(const SimplicialComplex& b, Lcg& rng) {
    Cochain a;
    a.degree = 1;
    for (const Simplex& e : b.simplices(1))
        a.values[e] = Rational(rng.flip() ? 1 : -1);
    return a;
}

} // namespace

int main() {
    int passed = 0, total = 0;
    auto tally = [&](bool ok) {
        ++total;
        if (ok) ++passed;
    };

    // ---------------------------------------------------------------- 1
    tally(run(1, "Euler-number-one bundle over the boundary tetrahedron", 1.0,
              [](Criterion& c) {
                  SimplicialComplex base = generate("tetrahedron_boundary");
                  NecklaceBundle bundle = build_with_euler(base, 1);
                  c.expect(euler_number(bundle) == 1, "euler number != 1");
                  TotalSpace t = reconstruct(bundle);
                  c.expect(t.complex.vertex_count() == 12,
                           "expected 12 vertices, got " +
                               std::to_string(t.complex.vertex_count()));
                  c.expect(t.complex.count(3) == 36,
                           "expected 36 tetrahedra, got " +
                               std::to_string(t.complex.count(3)));
                  HomologyGroup h1 = homology(t.complex, 1);
                  c.expect(h1.betti == 0 && h1.torsion.empty(),
                           "H1 = " + group_str(h1) + ", expected 0");
                  HomologyGroup h2 = homology(t.complex, 2);
                  c.expect(h2.betti == 0 && h2.torsion.empty(),
                           "H2 = " + group_str(h2) + ", expected 0");
                  HomologyGroup h3 = homology(t.complex, 3);
                  c.expect(h3.betti == 1 && h3.torsion.empty(),
                           "H3 = " + group_str(h3) + ", expected Z");
              }));

    // ---------------------------------------------------------------- 2
    std::vector<std::pair<SimplicialComplex, long long>> built_cases;
    std::vector<NecklaceBundle> built_bundles;
    tally(run(2, "prescribed Euler numbers across the base family", 10.0,
              [&](Criterion& c) {
                  std::vector<SimplicialComplex> bases;
                  bases.push_back(generate("octahedron"));
                  bases.push_back(generate("icosahedron"));
                  for (int n = 3; n <= 8; ++n)
                      bases.push_back(generate("suspension_ngon", n));
                  int builds = 0;
                  for (const SimplicialComplex& base : bases) {
                      for (long long e : admissible_eulers(base)) {
                          NecklaceBundle bundle = build_with_euler(base, e);
                          ++builds;
                          std::string tag = "f=" + std::to_string(base.count(2)) +
                                            ", e=" + std::to_string(e) + ": ";
                          c.expect(verify_consistency(bundle).ok(),
                                   tag + "inconsistent");
                          c.expect(check_bundle_classical(bundle).ok,
                                   tag + "not classical");
                          long long fiber = 0;
                          for (int v = 0; v < base.vertex_count(); ++v)
                              fiber += static_cast<long long>(
                                  bundle.necklace({v}).size());
                          c.expect(fiber == 3LL * base.vertex_count(),
                                   tag + "fiber vertices != 3v");
                          for (const Simplex& t : base.simplices(2))
                              if (bundle.necklace(t).size() != 9) {
                                  c.expect(false, tag + "triangle necklace != 9");
                                  break;
                              }
                          c.expect(euler_number(bundle) == e,
                                   tag + "wrong Euler number");
                          built_cases.emplace_back(base, e);
                          built_bundles.push_back(std::move(bundle));
                      }
                  }
                  c.expect(builds == 52,
                           "expected 52 builds, ran " + std::to_string(builds));
              }));

    // ---------------------------------------------------------------- 3
    tally(run(3, "first homology of every total space matches the Euler number",
              0.0, [&](Criterion& c) {
                  c.expect(!built_bundles.empty(), "no bundles from criterion 2");
                  for (std::size_t i = 0; i < built_bundles.size(); ++i) {
                      long long e = built_cases[i].second;
                      TotalSpace t = reconstruct(built_bundles[i]);
                      HomologyGroup h1 = homology(t.complex, 1);
                      std::string tag = "f=" +
                                        std::to_string(built_cases[i].first.count(2)) +
                                        ", e=" + std::to_string(e) + ": H1 = " +
                                        group_str(h1);
                      long long ae = e < 0 ? -e : e;
                      if (e == 0)
                          c.expect(h1.betti == 1 && h1.torsion.empty(),
                                   tag + ", expected Z");
                      else if (ae == 1)
                          c.expect(h1.betti == 0 && h1.torsion.empty(),
                                   tag + ", expected the trivial group");
                      else
                          c.expect(h1.betti == 0 && h1.torsion.size() == 1 &&
                                       h1.torsion.front() == ae,
                                   tag + ", expected Z/" + std::to_string(ae));
                  }
              }));

    // ---------------------------------------------------------------- 4
    tally(run(4, "Euler number three over every eight-vertex sphere", 0.0,
              [](Criterion& c) {
                  int spheres = 0;
                  for (const SimplicialComplex& base : enumerate_spheres(8)) {
                      if (base.vertex_count() != 8) continue;
                      ++spheres;
                      NecklaceBundle bundle = build_with_euler(base, 3);
                      c.expect(euler_number(bundle) == 3, "wrong Euler number");
                      TotalSpace t = reconstruct(bundle);
                      c.expect(t.complex.vertex_count() == 24,
                               "expected 24 vertices");
                      c.expect(t.complex.count(3) == 108, "expected 108 tetrahedra");
                      c.expect(verify_bundle_triangulation(t, bundle).ok(),
                               "triangulation verification failed");
                      HomologyGroup h1 = homology(t.complex, 1);
                      c.expect(h1.betti == 0 && h1.torsion.size() == 1 &&
                                   h1.torsion.front() == 3,
                               "H1 = " + group_str(h1) + ", expected Z/3");
                  }
                  c.expect(spheres == 14, "expected 14 eight-vertex spheres, saw " +
                                              std::to_string(spheres));
              }));

    // ---------------------------------------------------------------- 5
    tally(run(5, "obstructions are detected and reported", 0.0, [](Criterion& c) {
        SimplicialComplex tet = generate("tetrahedron_boundary");
        bool threw = false;
        try {
            build_with_euler(tet, 2);
        } catch (const ObstructionError& e) {
            threw = true;
            c.expect(std::string(e.what()).find("f(B)=4 < 4|E|=8") !=
                         std::string::npos,
                     std::string("message was: ") + e.what());
        }
        c.expect(threw, "build_with_euler(tet, 2) did not throw");

        // the Hopf bundle over the boundary of the solid 3-simplex
        Cochain target = choose_target_cochain(tet, 1);
        Cochain a = solve_orientation_for_target(tet, target,
                                                 tet.simplices(2).front());
        SimplicialComplex solid = SimplicialComplex::from_maximal({{0, 1, 2, 3}});
        NecklaceBundle partial = small_skeleton_bundle(solid, a);
        threw = false;
        try {
            extend_to_skeleton(partial);
        } catch (const ObstructionError& e) {
            threw = true;
            c.expect(std::string(e.what()).find("Hopf") != std::string::npos,
                     std::string("message was: ") + e.what());
        }
        c.expect(threw, "extend_to_skeleton over the Hopf boundary did not throw");
    }));

    // ---------------------------------------------------------------- 6
    tally(run(6, "winning strategies on all small spheres; sharpness at eleven "
                 "vertices",
              60.0, [](Criterion& c) {
                  LemmaWinReport report = verify_lemma_win(8);
                  c.expect(report.entries.size() == 23,
                           "expected 23 spheres, saw " +
                               std::to_string(report.entries.size()));
                  c.expect(report.all_winning, "some sphere has no winning strategy");
                  for (const LemmaWinEntry& e : report.entries)
                      c.expect(4 * e.best_green >= e.face_count,
                               "non-winning green count on a small sphere");

                  SolveResult sub = solve(generate("subdivided_bipyramid"), true);
                  c.expect(sub.best_green == 4,
                           "subdivided bipyramid best green = " +
                               std::to_string(sub.best_green) + ", expected 4");
                  c.expect(!sub.winning, "subdivided bipyramid should not be winning");
              }));

    // ---------------------------------------------------------------- 7
    tally(run(7, "randomized property suites (500 cases each)", 0.0,
              [](Criterion& c) {
                  // (a) restriction functoriality
                  {
                      Lcg rng(1001);
                      for (int t = 0; t < 500; ++t) {
                          int k = static_cast<int>(rng.range(2, 4));
                          std::set<int> carrier_set;
                          while (static_cast<int>(carrier_set.size()) < k)
                              carrier_set.insert(static_cast<int>(rng.range(0, 6)));
                          Simplex carrier(carrier_set.begin(), carrier_set.end());
                          Necklace n;
                          n.carrier = carrier;
                          long long len = rng.range(k, 12);
                          for (long long i = 0; i < len; ++i) {
                              int color = carrier[static_cast<std::size_t>(
                                  rng.range(0, k - 1))];
                              n.beads.push_back({i, color, false});
                          }
                          std::vector<Simplex> mids = proper_faces(carrier);
                          Simplex mid = mids[static_cast<std::size_t>(
                              rng.range(0, static_cast<long long>(mids.size()) - 1))];
                          Necklace via = restrict_necklace(n, mid);
                          for (const Simplex& small :
                               mid.size() > 1 ? proper_faces(mid)
                                              : std::vector<Simplex>{mid}) {
                              Necklace direct = restrict_necklace(n, small);
                              Necklace stepped = restrict_necklace(via, small);
                              bool same = direct.size() == stepped.size();
                              for (std::size_t i = 0; same && i < direct.size(); ++i)
                                  same = direct.beads[i] == stepped.beads[i];
                              c.expect(same, "restriction functoriality failed");
                              if (!same) return;
                          }
                      }
                  }
                  // (b) the coboundary squares to zero
                  {
                      Lcg rng(2002);
                      for (int t = 0; t < 500; ++t) {
                          std::vector<Simplex> maximal;
                          int pieces = static_cast<int>(rng.range(2, 5));
                          for (int p = 0; p < pieces; ++p) {
                              std::set<int> verts;
                              int size = static_cast<int>(rng.range(2, 4));
                              while (static_cast<int>(verts.size()) < size)
                                  verts.insert(static_cast<int>(rng.range(0, 6)));
                              maximal.push_back(Simplex(verts.begin(), verts.end()));
                          }
                          SimplicialComplex b =
                              SimplicialComplex::from_maximal(maximal);
                          int degree = static_cast<int>(rng.range(0, 1));
                          if (b.dimension() < degree + 2) {
                              --t;
                              continue;
                          }
                          Cochain x = zero_cochain(b, degree);
                          for (auto& [s, v] : x.values)
                              v = Rational(rng.range(-5, 5));
                          Cochain ddx = coboundary(b, coboundary(b, x));
                          bool zero = true;
                          for (const auto& [s, v] : ddx.values)
                              if (!v.is_zero()) zero = false;
                          c.expect(zero, "dd != 0 on a random complex");
                          if (!zero) return;
                      }
                  }
                  // (c) G_a lands in {+-1, +-2} and the F(da) sum is an integer
                  {
                      Lcg rng(3003);
                      std::vector<SimplicialComplex> spheres = enumerate_spheres(8);
                      for (int t = 0; t < 500; ++t) {
                          const SimplicialComplex& b = spheres[static_cast<std::size_t>(
                              rng.range(0, static_cast<long long>(spheres.size()) - 1))];
                          Cochain a = random_orientation(b, rng);
                          Cochain g = g_of_a(b, a);
                          bool in_range = true;
                          for (const auto& [s, v] : g.values) {
                              Rational av = v.abs();
                              if (!(av == Rational(1) || av == Rational(2)))
                                  in_range = false;
                          }
                          c.expect(in_range, "G_a outside {+-1, +-2}");
                          Cochain f = apply_F(coboundary(b, a));
                          Rational sum = surface_sum(b, f);
                          c.expect(sum.is_integer(), "F(da) sum " + sum.to_string() +
                                                         " is not an integer");
                          if (!in_range || !sum.is_integer()) return;
                      }
                  }
                  // (d) the local formula is bounded by 1/2, strictly on
                  //     classical necklaces with classical edge restrictions
                  {
                      Lcg rng(4004);
                      int strict_seen = 0;
                      for (int t = 0; t < 500; ++t) {
                          Necklace n;
                          n.carrier = {0, 1, 2};
                          long long len = rng.range(3, 15);
                          for (long long i = 0; i < len; ++i)
                              n.beads.push_back(
                                  {i, static_cast<int>(rng.range(0, 2)), false});
                          bool all_colors = n.count_color(0) > 0 &&
                                            n.count_color(1) > 0 &&
                                            n.count_color(2) > 0;
                          if (!all_colors) {
                              --t;
                              continue;
                          }
                          Rational v = lcf_value(n, {0, 1, 2});
                          c.expect(v.abs() <= Rational(1, 2), "|LCF| > 1/2");
                          bool classical = check_classical(n).ok;
                          for (const Simplex& e :
                               {Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}})
                              classical = classical &&
                                          check_classical(restrict_necklace(n, e)).ok;
                          if (classical) {
                              ++strict_seen;
                              c.expect(v.abs() < Rational(1, 2),
                                       "|LCF| = 1/2 on a classical necklace");
                          }
                      }
                      c.expect(strict_seen >= 50,
                               "too few classical samples: " +
                                   std::to_string(strict_seen));
                  }
                  // (e) doubling beads never changes the Euler number
                  {
                      Lcg rng(5005);
                      const char* names[] = {"tetrahedron_boundary", "octahedron"};
                      int checks = 0;
                      for (int t = 0; t < 125; ++t) {
                          SimplicialComplex base = generate(names[rng.range(0, 1)]);
                          long long cap = base.count(2) / 4;
                          long long e = rng.range(-cap, cap);
                          NecklaceBundle bundle = build_with_euler(base, e);
                          for (int step = 0; step < 4; ++step) {
                              int v = static_cast<int>(
                                  rng.range(0, base.vertex_count() - 1));
                              const Necklace& fiber = bundle.necklace({v});
                              BeadId id = fiber
                                              .beads[static_cast<std::size_t>(rng.range(
                                                  0, static_cast<long long>(
                                                         fiber.size()) -
                                                         1))]
                                              .id;
                              double_bead(bundle, v, id);
                              ++checks;
                              if (euler_number(bundle) != e) {
                                  c.expect(false, "Euler number drifted after "
                                                  "doubling");
                                  return;
                              }
                          }
                          if (t % 25 == 0)
                              c.expect(verify_consistency(bundle).ok(),
                                       "doubling broke consistency");
                      }
                      c.expect(checks == 500, "expected 500 doubling checks");
                  }
                  // (f) reconstruction verifies against its own bundle
                  {
                      Lcg rng(6006);
                      for (int t = 0; t < 500; ++t) {
                          SimplicialComplex base = generate("tetrahedron_boundary");
                          long long e = rng.range(-1, 1);
                          NecklaceBundle bundle = build_with_euler(base, e);
                          int extra = static_cast<int>(rng.range(0, 3));
                          for (int step = 0; step < extra; ++step) {
                              int v = static_cast<int>(
                                  rng.range(0, base.vertex_count() - 1));
                              const Necklace& fiber = bundle.necklace({v});
                              BeadId id = fiber
                                              .beads[static_cast<std::size_t>(rng.range(
                                                  0, static_cast<long long>(
                                                         fiber.size()) -
                                                         1))]
                                              .id;
                              double_bead(bundle, v, id);
                          }
                          TotalSpace ts = reconstruct(bundle);
                          BundleCheckReport report =
                              verify_bundle_triangulation(ts, bundle);
                          if (!report.ok()) {
                              c.expect(false, "verification failed: " +
                                                  report.violations.front());
                              return;
                          }
                      }
                  }
                  // (g) reconstruction succeeds exactly on classical bundles
                  {
                      Lcg rng(7007);
                      const char* names[] = {"tetrahedron_boundary", "octahedron",
                                             "bipyramid"};
                      for (int t = 0; t < 500; ++t) {
                          SimplicialComplex base = generate(names[rng.range(0, 2)]);
                          Cochain a = random_orientation(base, rng);
                          NecklaceBundle bundle =
                              small_bundle_from_orientation(base, a);
                          bool all_doubled = true;
                          for (int v = 0; v < base.vertex_count(); ++v) {
                              if (rng.range(0, 3) == 0) {
                                  all_doubled = false;
                                  continue;
                              }
                              double_bead(bundle, v,
                                          bundle.necklace({v}).bold_bead(v));
                          }
                          bool classical = check_bundle_classical(bundle).ok;
                          c.expect(classical == all_doubled,
                                   "classicality disagrees with doubling");
                          bool threw = false;
                          try {
                              reconstruct(bundle);
                          } catch (const ObstructionError&) {
                              threw = true;
                          }
                          c.expect(threw != classical,
                                   "reconstruct outcome disagrees with "
                                   "classicality");
                          if (threw == classical) return;
                      }
                  }
              }));

    // ---------------------------------------------------------------- 8
    tally(run(8, "the trivial bundle over the octahedron has the product "
                 "homology",
              0.0, [](Criterion& c) {
                  NecklaceBundle bundle = trivial_bundle(generate("octahedron"));
                  TotalSpace t = reconstruct(bundle);
                  for (int k : {1, 2, 3}) {
                      HomologyGroup h = homology(t.complex, k);
                      c.expect(h.betti == 1 && h.torsion.empty(),
                               "H" + std::to_string(k) + " = " + group_str(h) +
                                   ", expected Z");
                  }
                  c.expect(verify_bundle_triangulation(t, bundle).ok(),
                           "triangulation verification failed");
              }));

    std::cout << (passed == total ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " ("
              << passed << "/" << total << " criteria)" << std::endl;
    return passed == total ? 0 : 1;
}
