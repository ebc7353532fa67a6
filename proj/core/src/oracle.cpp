#include <segre233/oracle.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace segre233 {

// ---- group generators ------------------------------------------------

std::vector<Mat> gl_generators(const Gf& f, int n) {
  std::vector<Mat> gens;
  Mat t = Mat::identity(n);
  t.at(0, 1) = 1;  // transvection
  gens.push_back(t);
  if (f.q() > 2) {
    Mat d = Mat::identity(n);
    d.at(0, 0) = f.generator();
    gens.push_back(d);
  }
  Mat c = Mat::zero(n, n);  // full cycle e_i -> e_{i+1}
  for (int i = 0; i < n; ++i) c.at(i, (i + 1) % n) = 1;
  gens.push_back(c);
  return gens;
}

std::uint64_t gl_order(int q, int n) {
  std::uint64_t o = 1, qn = 1;
  for (int i = 0; i < n; ++i) qn *= std::uint64_t(q);
  std::uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    o *= qn - qi;
    qi *= std::uint64_t(q);
  }
  return o;
}

namespace {

std::uint64_t pack_mat(const Gf& f, const Mat& m) {
  std::uint64_t code = 0;
  for (int i = m.rows * m.cols; i-- > 0;) code = code * f.q() + m.e[i];
  return code;
}

}  // namespace

std::uint64_t generated_matrix_group_order(const Gf& f, const std::vector<Mat>& gens) {
  if (gens.empty()) return 1;
  int n = gens[0].rows;
  std::unordered_set<std::uint64_t> seen;
  std::deque<Mat> frontier;
  Mat id = Mat::identity(n);
  seen.insert(pack_mat(f, id));
  frontier.push_back(id);
  while (!frontier.empty()) {
    Mat m = frontier.front();
    frontier.pop_front();
    for (const Mat& g : gens) {
      Mat next = matmul(f, m, g);
      if (seen.insert(pack_mat(f, next)).second) frontier.push_back(next);
    }
  }
  return seen.size();
}

std::vector<GroupElementH> h_generators(const Gf& f, bool with_swap) {
  std::vector<GroupElementH> gens;
  Mat i2 = Mat::identity(2), i3 = Mat::identity(3);
  for (const Mat& g : gl_generators(f, 2)) gens.push_back({g, i3, i3, false});
  for (const Mat& g : gl_generators(f, 3)) {
    gens.push_back({i2, g, i3, false});
    gens.push_back({i2, i3, g, false});
  }
  if (with_swap) gens.push_back({i2, i3, i3, true});
  return gens;
}

std::uint64_t h_order(int q) {
  return gl_order(q, 2) * gl_order(q, 3) * gl_order(q, 3);
}

std::uint64_t h_kernel_order(int q) {
  return std::uint64_t(q - 1) * std::uint64_t(q - 1);
}

// ---- randomness ------------------------------------------------------

Mat random_matrix(const Gf& f, int rows, int cols, std::mt19937_64& rng) {
  Mat m = Mat::zero(rows, cols);
  for (int i = 0; i < rows * cols; ++i) m.e[i] = Fel(rng() % f.q());
  return m;
}

Mat random_invertible(const Gf& f, int n, std::mt19937_64& rng) {
  for (;;) {
    Mat m = random_matrix(f, n, n, rng);
    if (is_invertible(f, m)) return m;
  }
}

GroupElementH random_h_element(const Gf& f, std::mt19937_64& rng) {
  return {random_invertible(f, 2, rng), random_invertible(f, 3, rng),
          random_invertible(f, 3, rng), false};
}

Tensor233 random_tensor(const Gf& f, std::mt19937_64& rng) {
  Tensor233 t;
  for (auto& x : t.a) x = Fel(rng() % f.q());
  return t;
}

std::size_t oracle_memory_cap_bytes() {
  static const std::size_t cap = [] {
    if (const char* s = std::getenv("TOK_MEMORY_CAP_MB")) {
      char* end = nullptr;
      unsigned long mb = std::strtoul(s, &end, 10);
      if (end != s && mb > 0) return std::size_t(mb) * 1024 * 1024;
    }
    return std::size_t(2048) * 1024 * 1024;
  }();
  return cap;
}

// ---- orbit enumeration -------------------------------------------------

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// visited-code set: a dense bitmap over the whole code space when that fits
// the memory budget, otherwise a hash set whose growth is metered against it
class VisitedSet {
 public:
  VisitedSet(std::uint64_t space, std::size_t cap_bytes)
      : cap_(cap_bytes ? cap_bytes : oracle_memory_cap_bytes()) {
    std::uint64_t words = space / 64 + 1;
    if (words * 8 <= cap_) {
      bits_.assign(words, 0);
      dense_ = true;
    }
  }

  bool insert(std::uint64_t code) {
    if (dense_) {
      std::uint64_t& w = bits_[code >> 6];
      std::uint64_t m = std::uint64_t(1) << (code & 63);
      if (w & m) return false;
      w |= m;
      return true;
    }
    if ((sparse_.size() + 1) * kBytesPerEntry > cap_)
      throw std::runtime_error("orbit enumeration exceeds the memory budget");
    return sparse_.insert(code).second;
  }

 private:
  static constexpr std::size_t kBytesPerEntry = 48;  // rough node footprint
  std::size_t cap_;
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> sparse_;
};

template <typename OnVisit>
std::uint64_t flood(const Gf& f, const Tensor233& seed,
                    const std::vector<GroupElementH>& gens, VisitedSet& visited,
                    OnVisit&& on_visit) {
  std::deque<std::uint64_t> frontier;
  std::uint64_t start = pack(f, seed);
  if (!visited.insert(start)) return 0;
  on_visit(start);
  frontier.push_back(start);
  std::uint64_t n = 1;
  while (!frontier.empty()) {
    Tensor233 t = unpack(f, frontier.front());
    frontier.pop_front();
    for (const GroupElementH& g : gens) {
      std::uint64_t code = pack(f, act(f, t, g));
      if (visited.insert(code)) {
        on_visit(code);
        frontier.push_back(code);
        ++n;
      }
    }
  }
  return n;
}

}  // namespace

OrbitRecord orbit_bfs(const Gf& f, const Tensor233& seed,
                      const std::vector<GroupElementH>& gens,
                      std::size_t memory_cap_bytes) {
  VisitedSet visited(pow_u64(f.q(), 18), memory_cap_bytes);
  OrbitRecord rec;
  rec.representative = pack(f, seed);
  rec.seed_label = classify_h(f, seed);
  rec.size = flood(f, seed, gens, visited, [](std::uint64_t) {});
  return rec;
}

std::vector<std::uint64_t> orbit_elements(const Gf& f, const Tensor233& seed,
                                          const std::vector<GroupElementH>& gens,
                                          std::size_t max_elements) {
  VisitedSet visited(pow_u64(f.q(), 18), 0);
  std::vector<std::uint64_t> out;
  flood(f, seed, gens, visited, [&](std::uint64_t code) {
    if (out.size() >= max_elements)
      throw std::runtime_error("orbit exceeds the requested element limit");
    out.push_back(code);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ---- exhaustive census ---------------------------------------------------

namespace {

template <typename Result>
int labels_present(const Result& r) {
  int n = 0;
  for (std::uint64_t c : r.h_counts)
    if (c) ++n;
  return n;
}

template <typename Result>
std::array<std::uint64_t, kNumLabels> project_counts(const Result& r,
                                                     OrbitLabel (*proj)(OrbitLabel)) {
  std::array<std::uint64_t, kNumLabels> g{};
  for (OrbitLabel l : all_labels()) g[int(proj(l))] += r.h_counts[int(l)];
  return g;
}

// walks codes [begin, end) in ascending order, bumping the digit odometer
// instead of re-dividing, and tallies classifier labels
template <typename Tensor, typename ClassifyFn>
std::array<std::uint64_t, kNumLabels> census_range(const Gf& f, std::uint64_t begin,
                                                   std::uint64_t end, ClassifyFn&& cls) {
  std::array<std::uint64_t, kNumLabels> counts{};
  Tensor t;
  std::uint64_t code = begin;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    t.a[i] = Fel(code % f.q());
    code /= f.q();
  }
  for (code = begin; code < end; ++code) {
    counts[int(cls(f, t))]++;
    for (std::size_t i = 0; i < t.a.size(); ++i) {  // odometer step
      if (++t.a[i] < f.q()) break;
      t.a[i] = 0;
    }
  }
  return counts;
}

template <typename Tensor, typename ClassifyFn>
std::array<std::uint64_t, kNumLabels> sharded_census(const Gf& f, std::uint64_t space,
                                                     int threads, ClassifyFn&& cls) {
  if (threads <= 1)
    return census_range<Tensor>(f, 0, space, cls);
  int n = std::min<std::uint64_t>(threads, space);
  std::vector<std::array<std::uint64_t, kNumLabels>> parts(n);
  std::vector<std::thread> pool;
  for (int s = 0; s < n; ++s) {
    std::uint64_t begin = space * s / n, end = space * (s + 1) / n;
    pool.emplace_back([&, s, begin, end] {
      parts[s] = census_range<Tensor>(f, begin, end, cls);
    });
  }
  for (auto& th : pool) th.join();
  std::array<std::uint64_t, kNumLabels> counts{};
  for (const auto& p : parts)
    for (int i = 0; i < kNumLabels; ++i) counts[i] += p[i];
  return counts;
}

}  // namespace

int CensusResult::h_labels_present() const { return labels_present(*this); }
std::array<std::uint64_t, kNumLabels> CensusResult::g_counts() const {
  return project_counts(*this, g_projection);
}
int CensusResult::g_labels_present() const {
  auto g = g_counts();
  int n = 0;
  for (std::uint64_t c : g)
    if (c) ++n;
  return n;
}

int Census223Result::h_labels_present() const { return labels_present(*this); }
std::array<std::uint64_t, kNumLabels> Census223Result::g_counts() const {
  return project_counts(*this, g_projection_223);
}
int Census223Result::g_labels_present() const {
  auto g = g_counts();
  int n = 0;
  for (std::uint64_t c : g)
    if (c) ++n;
  return n;
}

CensusResult full_census(const Gf& f, int threads) {
  if (f.q() > 3)
    throw std::invalid_argument("full_census: the 2x3x3 space is exhaustive for q <= 3 only");
  CensusResult r;
  r.total = pow_u64(f.q(), 18);
  r.h_counts = sharded_census<Tensor233>(
      f, r.total, threads,
      [](const Gf& fq, const Tensor233& t) { return classify_h(fq, t); });
  return r;
}

Census223Result full_census_223(const Gf& f, int threads) {
  if (f.q() > 5)
    throw std::invalid_argument("full_census_223: the 2x2x3 space is exhaustive for q <= 5 only");
  Census223Result r;
  r.total = pow_u64(f.q(), 12);
  r.h_counts = sharded_census<Tensor223>(
      f, r.total, threads,
      [](const Gf& fq, const Tensor223& t) { return classify_223(fq, t).first; });
  return r;
}

// ---- cross validation ----------------------------------------------------

namespace {

constexpr std::uint8_t kNoOrbit = 0xFF;

// floods orbit ids over the packed space from each seed in turn
std::uint64_t flood_ids(const Gf& f, const Tensor233& seed,
                        const std::vector<GroupElementH>& gens,
                        std::vector<std::uint8_t>& ids, std::uint8_t id) {
  std::deque<std::uint64_t> frontier;
  std::uint64_t start = pack(f, seed);
  if (ids[start] != kNoOrbit) return 0;
  ids[start] = id;
  frontier.push_back(start);
  std::uint64_t n = 1;
  while (!frontier.empty()) {
    Tensor233 t = unpack(f, frontier.front());
    frontier.pop_front();
    for (const GroupElementH& g : gens) {
      std::uint64_t code = pack(f, act(f, t, g));
      if (ids[code] == kNoOrbit) {
        ids[code] = id;
        frontier.push_back(code);
        ++n;
      }
    }
  }
  return n;
}

}  // namespace

CrossCheckReport census_matches_bfs(const Gf& f, const Classifier& classifier) {
  if (f.q() != 2)
    throw std::invalid_argument("census_matches_bfs: exhaustive only at q = 2");
  Classifier cls = classifier;
  if (!cls) cls = [](const Gf& fq, const Tensor233& t) { return classify_h(fq, t); };

  CrossCheckReport rep;
  auto note = [&rep](std::string msg) {
    if (rep.problems.size() < 32) rep.problems.push_back(std::move(msg));
  };
  const std::uint64_t space = pow_u64(2, 18);
  std::vector<GroupElementH> gens = h_generators(f, false);

  // flood the whole space from the 21 canonical representatives
  std::vector<std::uint8_t> ids(space, kNoOrbit);
  for (OrbitLabel l : all_labels()) {
    Tensor233 seed = canonical_form(f, l);
    if (ids[pack(f, seed)] != kNoOrbit) {
      rep.disjoint = false;
      note(std::string("representative of ") + to_string(l) +
           " was already reached from an earlier class");
      continue;
    }
    rep.bfs_sizes[int(l)] = flood_ids(f, seed, gens, ids, std::uint8_t(int(l)));
  }

  // one exhaustive pass: census counts plus per-code agreement with the ids
  std::uint64_t mismatches = 0, holes = 0;
  {
    Tensor233 t;
    for (std::uint64_t code = 0; code < space; ++code) {
      OrbitLabel l = cls(f, t);
      rep.census_counts[int(l)]++;
      if (ids[code] == kNoOrbit) {
        ++holes;
      } else if (ids[code] != std::uint8_t(int(l))) {
        if (++mismatches <= 3)
          note("code " + std::to_string(code) + " classifies to " + to_string(l) +
               " but sits in the orbit of " + to_string(OrbitLabel(ids[code])));
      }
      for (int i = 0; i < 18; ++i) {
        if (++t.a[i] < 2) break;
        t.a[i] = 0;
      }
    }
  }
  if (holes) {
    rep.covers = false;
    note(std::to_string(holes) + " codes not reached by any representative");
  }
  if (mismatches) {
    rep.homogeneous = false;
    note(std::to_string(mismatches) + " codes disagree with their orbit label in total");
  }

  std::uint64_t effective = h_order(2) / h_kernel_order(2);
  for (OrbitLabel l : all_labels()) {
    if (rep.census_counts[int(l)] != rep.bfs_sizes[int(l)]) {
      rep.sizes_match = false;
      note(std::string("class ") + to_string(l) + ": census " +
           std::to_string(rep.census_counts[int(l)]) + " vs orbit " +
           std::to_string(rep.bfs_sizes[int(l)]));
    }
    if (rep.bfs_sizes[int(l)] == 0 || effective % rep.bfs_sizes[int(l)] != 0) {
      rep.divisibility = false;
      note(std::string("class ") + to_string(l) + ": orbit size " +
           std::to_string(rep.bfs_sizes[int(l)]) + " does not divide " +
           std::to_string(effective));
    }
  }

  // repeat the flood with the swap generator: orbits must be exactly the
  // unions of transpose partners
  std::vector<GroupElementH> swap_gens = h_generators(f, true);
  std::vector<std::uint8_t> gids(space, kNoOrbit);
  for (OrbitLabel l : all_labels()) {
    if (g_projection(l) != l) continue;
    std::uint64_t got = flood_ids(f, canonical_form(f, l), swap_gens, gids, std::uint8_t(int(l)));
    std::uint64_t want = rep.bfs_sizes[int(l)];
    if (transpose_partner(l) != l) want += rep.bfs_sizes[int(transpose_partner(l))];
    if (got != want) {
      rep.g_orbits_match = false;
      note(std::string("merged class ") + to_string(l) + ": swap orbit size " +
           std::to_string(got) + ", expected " + std::to_string(want));
    }
  }
  for (std::uint64_t code = 0; code < space; ++code) {
    if (gids[code] == kNoOrbit) {
      rep.g_orbits_match = false;
      note("code " + std::to_string(code) + " missed by the swap-extended flood");
      break;
    }
    if (ids[code] != kNoOrbit &&
        gids[code] != std::uint8_t(int(g_projection(OrbitLabel(ids[code]))))) {
      rep.g_orbits_match = false;
      note("code " + std::to_string(code) + " lies in unexpected merged orbit");
      break;
    }
  }

  rep.ok = rep.disjoint && rep.covers && rep.homogeneous && rep.sizes_match &&
           rep.divisibility && rep.g_orbits_match;
  return rep;
}

namespace {

// the 2x2x3 group: GL2 x GL2 x GL3, optionally preceded by the swap of the
// two 2-dimensional factors
struct Element223 {
  Mat g1, g2, g3;
  bool swap12 = false;
};

Tensor223 act223(const Gf& f, const Tensor223& t, const Element223& g) {
  Tensor223 s;
  if (g.swap12) {
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 3; ++k) s.a[idx223(i, j, k)] = t.a[idx223(j, i, k)];
  } else {
    s = t;
  }
  Tensor223 r;
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 3; ++n) {
        Fel v = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 3; ++k)
              v = f.add(v, f.mul(s.a[idx223(i + 1, j + 1, k + 1)],
                                 f.mul(g.g1.at(i, l),
                                       f.mul(g.g2.at(j, m), g.g3.at(k, n)))));
        r.a[idx223(l + 1, m + 1, n + 1)] = v;
      }
  return r;
}

std::vector<Element223> generators_223(const Gf& f, bool with_swap) {
  std::vector<Element223> gens;
  Mat i2 = Mat::identity(2), i3 = Mat::identity(3);
  for (const Mat& g : gl_generators(f, 2)) {
    gens.push_back({g, i2, i3, false});
    gens.push_back({i2, g, i3, false});
  }
  for (const Mat& g : gl_generators(f, 3)) gens.push_back({i2, i2, g, false});
  if (with_swap) gens.push_back({i2, i2, i3, true});
  return gens;
}

// partitions the packed 2x2x3 space into orbits; returns orbit id per code
std::vector<int> orbit_ids_223(const Gf& f, const std::vector<Element223>& gens,
                               std::uint64_t space) {
  std::vector<int> ids(space, -1);
  int next = 0;
  for (std::uint64_t start = 0; start < space; ++start) {
    if (ids[start] != -1) continue;
    int id = next++;
    ids[start] = id;
    std::deque<std::uint64_t> frontier{start};
    while (!frontier.empty()) {
      Tensor223 t = unpack223(f, frontier.front());
      frontier.pop_front();
      for (const Element223& g : gens) {
        std::uint64_t code = pack223(f, act223(f, t, g));
        if (ids[code] == -1) {
          ids[code] = id;
          frontier.push_back(code);
        }
      }
    }
  }
  return ids;
}

}  // namespace

CrossCheck223Report cross_check_223(const Gf& f) {
  if (f.q() != 2)
    throw std::invalid_argument("cross_check_223: exhaustive only at q = 2");
  CrossCheck223Report rep;
  auto note = [&rep](std::string msg) {
    if (rep.problems.size() < 32) rep.problems.push_back(std::move(msg));
  };
  const std::uint64_t space = pow_u64(2, 12);

  std::vector<int> hids = orbit_ids_223(f, generators_223(f, false), space);
  std::vector<int> gids = orbit_ids_223(f, generators_223(f, true), space);
  rep.h_orbits = *std::max_element(hids.begin(), hids.end()) + 1;
  rep.g_orbits = *std::max_element(gids.begin(), gids.end()) + 1;
  if (rep.h_orbits != 10) note("expected 10 fine orbits, found " + std::to_string(rep.h_orbits));
  if (rep.g_orbits != 9) note("expected 9 merged orbits, found " + std::to_string(rep.g_orbits));

  // label each fine orbit; orbits must be label-homogeneous and the ten
  // labels must appear exactly once each
  std::vector<OrbitLabel> orbit_label(std::size_t(rep.h_orbits), OrbitLabel::o0);
  std::vector<bool> seen(std::size_t(rep.h_orbits), false);
  bool homogeneous = true;
  for (std::uint64_t code = 0; code < space; ++code) {
    OrbitLabel l = classify_223(f, unpack223(f, code)).first;
    int id = hids[code];
    if (!seen[id]) {
      seen[id] = true;
      orbit_label[id] = l;
    } else if (orbit_label[id] != l) {
      homogeneous = false;
    }
  }
  if (!homogeneous) note("a fine orbit carries more than one label");
  std::array<int, kNumLabels> label_orbits{};
  for (int id = 0; id < rep.h_orbits; ++id) label_orbits[int(orbit_label[id])]++;
  for (OrbitLabel l : labels_223())
    if (label_orbits[int(l)] != 1)
      note(std::string("label ") + to_string(l) + " covers " +
           std::to_string(label_orbits[int(l)]) + " fine orbits");

  // fusion pattern: a merged orbit splits into the fine orbits it contains
  std::vector<std::set<int>> members(std::size_t(rep.g_orbits));
  for (std::uint64_t code = 0; code < space; ++code)
    members[gids[code]].insert(hids[code]);
  int fused_pairs = 0;
  for (const auto& m : members) {
    if (m.size() == 1) continue;
    if (m.size() != 2) {
      note("a merged orbit contains " + std::to_string(m.size()) + " fine orbits");
      continue;
    }
    ++fused_pairs;
    std::set<OrbitLabel> ls;
    for (int id : m) ls.insert(orbit_label[id]);
    if (ls != std::set<OrbitLabel>{OrbitLabel::o2, OrbitLabel::o4})
      note("the fused pair is not {o2, o4}");
  }
  if (fused_pairs != 1) note("expected exactly one fused pair, found " + std::to_string(fused_pairs));

  rep.ok = rep.problems.empty();
  return rep;
}

namespace {

// canonical 18-bit key of a 2-dimensional subspace of the 9-dimensional
// matrix space over GF(2): the two echelon basis rows, 9 bits each
std::uint32_t subspace_key(const Subspace& s) {
  std::uint32_t key = 0;
  for (int r = 0; r < 2; ++r) {
    std::uint32_t row = 0;
    for (int c = 0; c < 9; ++c)
      if (s.basis().at(r, c)) row |= std::uint32_t(1) << c;
    key |= row << (9 * r);
  }
  return key;
}

Subspace span_of_pair(const Gf& f, const Mat& a, const Mat& b) {
  Mat rows = Mat::zero(2, 9);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      rows.at(0, 3 * j + k) = a.at(j, k);
      rows.at(1, 3 * j + k) = b.at(j, k);
    }
  return Subspace(f, rows);
}

Mat unflatten_row(const Subspace& s, int row) {
  Mat m = Mat::zero(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m.at(j, k) = s.basis().at(row, 3 * j + k);
  return m;
}

}  // namespace

LemmaCheckReport contraction_equivalence_check(const Gf& f, int pairs, std::uint64_t seed) {
  if (f.q() != 2)
    throw std::invalid_argument("contraction_equivalence_check: exhaustive only at q = 2");
  LemmaCheckReport rep;
  auto note = [&rep](std::string msg) {
    if (rep.problems.size() < 16) rep.problems.push_back(std::move(msg));
  };
  const std::uint64_t space = pow_u64(2, 18);

  // independent partition one: tensor orbits under the full group, by BFS
  std::vector<int> tensor_orbit(space, -1);
  {
    std::vector<GroupElementH> gens = h_generators(f, false);
    int next = 0;
    for (std::uint64_t start = 0; start < space; ++start) {
      if (tensor_orbit[start] != -1) continue;
      int id = next++;
      tensor_orbit[start] = id;
      std::deque<std::uint64_t> frontier{start};
      while (!frontier.empty()) {
        Tensor233 t = unpack(f, frontier.front());
        frontier.pop_front();
        for (const GroupElementH& g : gens) {
          std::uint64_t code = pack(f, act(f, t, g));
          if (tensor_orbit[code] == -1) {
            tensor_orbit[code] = id;
            frontier.push_back(code);
          }
        }
      }
    }
  }

  // independent partition two: orbits of 2-dimensional subspaces of the
  // matrix space under row and column operations, again by BFS
  std::unordered_map<std::uint32_t, int> subspace_orbit;
  {
    std::vector<std::uint32_t> keys;
    std::unordered_map<std::uint32_t, Subspace> by_key;
    for (std::uint32_t c1 = 1; c1 < 512; ++c1)
      for (std::uint32_t c2 = c1 + 1; c2 < 512; ++c2) {
        Mat rows = Mat::zero(2, 9);
        for (int b = 0; b < 9; ++b) {
          rows.at(0, b) = Fel((c1 >> b) & 1);
          rows.at(1, b) = Fel((c2 >> b) & 1);
        }
        Subspace s(f, rows);
        if (s.dim() != 2) continue;
        std::uint32_t key = subspace_key(s);
        if (by_key.emplace(key, s).second) keys.push_back(key);
      }
    std::vector<Mat> gens3 = gl_generators(f, 3);
    int next = 0;
    for (std::uint32_t start : keys) {
      if (subspace_orbit.count(start)) continue;
      int id = next++;
      subspace_orbit[start] = id;
      std::deque<std::uint32_t> frontier{start};
      while (!frontier.empty()) {
        Subspace s = by_key.at(frontier.front());
        frontier.pop_front();
        Mat b1 = unflatten_row(s, 0), b2 = unflatten_row(s, 1);
        std::vector<Subspace> neighbors;
        for (const Mat& g : gens3) {
          neighbors.push_back(span_of_pair(f, matmul(f, g, b1), matmul(f, g, b2)));
          neighbors.push_back(span_of_pair(f, matmul(f, b1, g), matmul(f, b2, g)));
        }
        for (const Subspace& nb : neighbors) {
          std::uint32_t key = subspace_key(nb);
          if (!subspace_orbit.count(key)) {
            subspace_orbit[key] = id;
            frontier.push_back(key);
          }
        }
      }
    }
    if (by_key.size() != 43435)
      note("expected 43435 two-dimensional subspaces, found " + std::to_string(by_key.size()));
  }

  // the first-contraction class of a tensor: dimension, then generator rank
  // (dim 1) or the subspace orbit id (dim 2)
  auto a1_class = [&](const Tensor233& t) -> std::uint64_t {
    ContractionSpace a1 = contraction(f, t, 1);
    int d = a1.span.dim();
    if (d == 0) return 0;
    if (d == 1) return std::uint64_t(rank(f, unflatten_row(a1.span, 0)));
    return 16 + std::uint64_t(subspace_orbit.at(subspace_key(a1.span)));
  };

  std::mt19937_64 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    Tensor233 a = random_tensor(f, rng);
    Tensor233 b;
    if (i % 2 == 0) {
      b = act(f, a, random_h_element(f, rng));  // same orbit by construction
    } else {
      b = random_tensor(f, rng);
    }
    bool same_orbit = tensor_orbit[pack(f, a)] == tensor_orbit[pack(f, b)];
    bool same_class = a1_class(a) == a1_class(b);
    if (same_orbit != same_class) {
      note("pair " + std::to_string(i) + ": orbit equivalence " +
           (same_orbit ? "holds" : "fails") + " but contraction equivalence " +
           (same_class ? "holds" : "fails"));
    }
    ++rep.pairs;
  }

  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace segre233
