// Acceptance gate. Each criterion prints exactly one [PASS]/[FAIL] line
// with the measured quantities; the exit code is the number of failures.
//
//   acceptance                  runs criteria 1..7
//   acceptance --criterion N    runs criterion N only (8 is the long q=3
//                               census and is opt-in)
//   acceptance --threads T      worker shards for criterion 8 (default 8)
#include <segre233/oracle.hpp>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace segre233;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Criterion 1: the full q=2 census finds exactly 21 h-classes and 18
// g-classes, every class nonempty, counts summing to 2^18, in under a
// minute on one thread.
Outcome criterion_1() {
  Gf f = Gf::from_order(2);
  auto t0 = Clock::now();
  CensusResult c = full_census(f, 1);
  double dt = seconds_since(t0);

  std::uint64_t sum = 0;
  for (auto v : c.h_counts) sum += v;
  bool pass = c.total == 262144 && sum == c.total &&
              c.h_labels_present() == kNumLabels &&
              c.g_labels_present() == kNumGLabels && dt < 60.0;
  std::ostringstream d;
  d << "q=2 census: total " << c.total << ", " << c.h_labels_present()
    << " h-classes, " << c.g_labels_present() << " g-classes, "
    << fmt_seconds(dt) << " single-threaded (limit 60s)";
  return {pass, d.str()};
}

// Criterion 2: breadth-first orbits grown from the 21 canonical forms are
// disjoint, label-homogeneous, cover the q=2 space, and match the census
// counts, in under five minutes.
Outcome criterion_2() {
  Gf f = Gf::from_order(2);
  auto t0 = Clock::now();
  CrossCheckReport r = census_matches_bfs(f);
  double dt = seconds_since(t0);

  std::uint64_t bfs_sum = 0;
  for (auto v : r.bfs_sizes) bfs_sum += v;
  bool pass = r.ok && bfs_sum == 262144 && dt < 300.0;
  std::ostringstream d;
  d << "q=2 orbit flood vs census: disjoint=" << r.disjoint
    << " covers=" << r.covers << " homogeneous=" << r.homogeneous
    << " sizes_match=" << r.sizes_match << " divisibility=" << r.divisibility
    << " g_orbits_match=" << r.g_orbits_match << ", " << bfs_sum
    << " tensors visited, " << fmt_seconds(dt) << " (limit 300s)";
  if (!r.problems.empty()) d << "; first problem: " << r.problems.front();
  return {pass, d.str()};
}

// Criterion 3: the 2x2x3 space over F2 splits into exactly 10 fine classes
// and 9 once the two 2-dimensional factors may be swapped, the only fusion
// being o2 with o4 (o4T stays separate), in under a second.
Outcome criterion_3() {
  Gf f = Gf::from_order(2);
  auto t0 = Clock::now();
  Census223Result c = full_census_223(f, 1);
  CrossCheck223Report r = cross_check_223(f);
  double dt = seconds_since(t0);

  bool pass = c.total == 4096 && c.h_labels_present() == 10 &&
              c.g_labels_present() == 9 && r.ok && r.h_orbits == 10 &&
              r.g_orbits == 9 && dt < 1.0;
  std::ostringstream d;
  d << "q=2 2x2x3: census " << c.total << " tensors, "
    << c.h_labels_present() << "/" << c.g_labels_present()
    << " labels, BFS partition " << r.h_orbits << "/" << r.g_orbits
    << " orbits with only o2~o4 fused, " << fmt_seconds(dt) << " (limit 1s)";
  if (!r.problems.empty()) d << "; first problem: " << r.problems.front();
  return {pass, d.str()};
}

// Criterion 4: for every class and q in {2,3,4,5,7,8,9} the rank
// distribution of the canonical form equals the table row evaluated at q.
Outcome criterion_4() {
  int checked = 0, wrong = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    Gf f = Gf::from_order(q);
    for (OrbitLabel l : all_labels()) {
      ++checked;
      if (!(rank_distribution(f, canonical_form(f, l)) ==
            expected_rank_distribution(l, q)))
        ++wrong;
    }
  }
  std::ostringstream d;
  d << "rank distributions of canonical forms: " << checked - wrong << "/"
    << checked << " table rows match over q in {2,3,4,5,7,8,9}";
  return {wrong == 0, d.str()};
}

// Criterion 5: for q in {2,3,5} there are (q^3-q)/3 monic irreducible
// cubics, the Mobius action is transitive on them and every stabilizer has
// order exactly 3, in under ten seconds.
Outcome criterion_5() {
  auto t0 = Clock::now();
  int wrong = 0;
  std::ostringstream counts;
  for (int q : {2, 3, 5}) {
    Gf f = Gf::from_order(q);
    auto cubics = irreducible_monic_cubics(f);
    std::size_t expected = static_cast<std::size_t>((q * q * q - q) / 3);
    if (cubics.size() != expected) ++wrong;
    if (pgl_orbit_of_cubic(f, cubics.front()).size() != cubics.size()) ++wrong;
    for (const Poly& p : cubics)
      if (pgl_stabilizer_of_cubic(f, p).size() != 3) ++wrong;
    counts << (q == 2 ? "" : ", ") << "q=" << q << ": " << cubics.size();
  }
  double dt = seconds_since(t0);
  std::ostringstream d;
  d << "monic irreducible cubics (" << counts.str()
    << "), one orbit each, all stabilizers of order 3, " << fmt_seconds(dt)
    << " (limit 10s)";
  return {wrong == 0 && dt < 10.0, d.str()};
}

// Criterion 6: 10^4 random group elements per representative and per q in
// {2,3,4,5} never change the fine label, and the factor swap permutes
// labels exactly by the three T-pairs.
Outcome criterion_6() {
  int pair_errors = 0;
  for (OrbitLabel l : all_labels()) {
    OrbitLabel p = transpose_partner(l);
    bool is_pair = l == OrbitLabel::o4 || l == OrbitLabel::o4T ||
                   l == OrbitLabel::o7 || l == OrbitLabel::o7T ||
                   l == OrbitLabel::o11 || l == OrbitLabel::o11T;
    if (transpose_partner(p) != l) ++pair_errors;
    if (is_pair == (p == l)) ++pair_errors;
  }

  std::uint64_t trials = 0, violations = 0;
  std::mt19937_64 rng(20260816);
  for (int q : {2, 3, 4, 5}) {
    Gf f = Gf::from_order(q);
    for (OrbitLabel l : all_labels()) {
      Tensor233 rep = canonical_form(f, l);
      for (int i = 0; i < 10000; ++i) {
        GroupElementH g = random_h_element(f, rng);
        g.transpose_flag = (i % 2) == 1;
        OrbitLabel expect = g.transpose_flag ? transpose_partner(l) : l;
        ++trials;
        if (classify_h(f, act(f, rep, g)) != expect) ++violations;
      }
    }
  }
  std::ostringstream d;
  d << "label invariance: " << violations << " violations in " << trials
    << " random group actions (21 representatives, q in {2,3,4,5}, half "
       "with the factor swap)";
  return {pair_errors == 0 && violations == 0, d.str()};
}

// Criterion 7: on sampled q=2 tensor pairs, same orbit of the tensors is
// equivalent to same orbit of their first contraction spaces, both
// partitions computed by independent breadth-first searches.
Outcome criterion_7() {
  Gf f = Gf::from_order(2);
  auto t0 = Clock::now();
  LemmaCheckReport r = contraction_equivalence_check(f, 1000, 20260816);
  double dt = seconds_since(t0);
  std::ostringstream d;
  d << "contraction-space equivalence: " << r.pairs
    << " sampled pairs, tensor-orbit and subspace-orbit verdicts agree, "
    << fmt_seconds(dt);
  if (!r.problems.empty()) d << "; first problem: " << r.problems.front();
  return {r.ok && r.pairs == 1000, d.str()};
}

// Criterion 8 (long, opt-in): the q=3 census covers all 3^18 tensors with
// all 21 classes present, within half an hour.
Outcome criterion_8(int threads) {
  Gf f = Gf::from_order(3);
  auto t0 = Clock::now();
  CensusResult c = full_census(f, threads);
  double dt = seconds_since(t0);

  std::uint64_t sum = 0;
  for (auto v : c.h_counts) sum += v;
  const std::uint64_t space = 387420489;  // 3^18
  bool pass = c.total == space && sum == space &&
              c.h_labels_present() == kNumLabels &&
              c.g_labels_present() == kNumGLabels && dt < 1800.0;
  std::ostringstream d;
  d << "q=3 census: total " << c.total << ", " << c.h_labels_present()
    << " h-classes, " << c.g_labels_present() << " g-classes, " << threads
    << " shards, " << fmt_seconds(dt) << " (limit 1800s)";
  return {pass, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  int threads = 8;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N] [--threads T]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > 8 || threads < 1) {
    std::fprintf(stderr, "criterion must be 1..8 and threads positive\n");
    return 2;
  }

  int failures = 0;
  for (int n = 1; n <= 8; ++n) {
    if (only != 0 ? n != only : n == 8) continue;  // 8 is opt-in
    Outcome o;
    switch (n) {
      case 1: o = criterion_1(); break;
      case 2: o = criterion_2(); break;
      case 3: o = criterion_3(); break;
      case 4: o = criterion_4(); break;
      case 5: o = criterion_5(); break;
      case 6: o = criterion_6(); break;
      case 7: o = criterion_7(); break;
      case 8: o = criterion_8(threads); break;
    }
    std::printf("[%s] criterion %d: %s\n", o.pass ? "PASS" : "FAIL", n,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures;
}
