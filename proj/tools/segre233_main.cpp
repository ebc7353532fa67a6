// Command-line front end: classification, canonical forms, exhaustive
// censuses, self-verification and pencil inventories over small fields.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <segre233/oracle.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

using namespace segre233;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Gf field_for(int q) {
  try {
    return Gf::from_order(q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad field order: ") + e.what());
  }
}

void print_field_header(const Gf& f, std::ostream& os) {
  if (f.k() > 1)
    os << "# q=" << f.q() << " modulus=" << f.modulus_string() << "\n";
}

std::string classify_line(const Classification& c) {
  std::ostringstream os;
  os << "H=" << to_string(c.h) << " G=" << to_string(c.g) << " rd=[" << c.sig.rd.r1
     << "," << c.sig.rd.r2 << "," << c.sig.rd.r3 << "] dims=(" << c.sig.dim_a1 << ","
     << c.sig.dim_a2 << "," << c.sig.dim_a3 << ") det="
     << (c.sig.det_type ? to_string(*c.sig.det_type) : "-");
  auto n = nurmiev_label(c.h);
  os << " nurmiev=" << (n ? std::to_string(*n) : "-");
  return os.str();
}

json classify_json(int q, int shape, const Classification& c, OrbitLabel g223) {
  json j;
  j["q"] = q;
  j["shape"] = shape == 233 ? "233" : "223";
  j["h"] = to_string(c.h);
  j["g"] = to_string(shape == 233 ? c.g : g223);
  j["rd"] = {c.sig.rd.r1, c.sig.rd.r2, c.sig.rd.r3};
  j["dims"] = {c.sig.dim_a1, c.sig.dim_a2, c.sig.dim_a3};
  j["det"] = c.sig.det_type ? json(to_string(*c.sig.det_type)) : json(nullptr);
  if (shape == 233) {
    auto n = nurmiev_label(c.h);
    j["nurmiev"] = n ? json(*n) : json(nullptr);
  } else {
    j["nurmiev"] = nullptr;
  }
  return j;
}

int run_classify(const std::string& input, int shape, bool as_json) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) throw UsageError("cannot open input file: " + input);
    in = &file;
  }
  json results = json::array();
  std::string line;
  while (std::getline(*in, line)) {
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;
    ParsedLine p;
    try {
      p = parse_line(line);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    int line_shape = p.entries.size() == 18 ? 233 : 223;
    if (shape != 0 && shape != line_shape)
      throw UsageError("input line has " + std::to_string(p.entries.size()) +
                       " coefficients but --shape demands " + std::to_string(shape));
    Gf f = field_for(p.q);
    Classification c;
    OrbitLabel g223 = OrbitLabel::o0;
    if (line_shape == 233) {
      Tensor233 t;
      for (int i = 0; i < 18; ++i) t.a[i] = Fel(p.entries[i]);
      c = classify(f, t);
    } else {
      Tensor223 b;
      for (int i = 0; i < 12; ++i) b.a[i] = Fel(p.entries[i]);
      c = classify(f, embed_223(b));
      g223 = g_projection_223(c.h);
    }
    if (as_json) {
      results.push_back(classify_json(p.q, line_shape, c, g223));
    } else if (line_shape == 233) {
      std::cout << classify_line(c) << "\n";
    } else {
      std::cout << "H=" << to_string(c.h) << " G=" << to_string(g223) << " rd=["
                << c.sig.rd.r1 << "," << c.sig.rd.r2 << "," << c.sig.rd.r3 << "] dims=("
                << c.sig.dim_a1 << "," << c.sig.dim_a2 << "," << c.sig.dim_a3
                << ") det=" << (c.sig.det_type ? to_string(*c.sig.det_type) : "-")
                << " nurmiev=-\n";
    }
  }
  if (as_json) std::cout << results.dump(2) << "\n";
  return 0;
}

int run_canonical(const std::string& orbit, int q, int shape) {
  auto label = label_from_string(orbit);
  if (!label) throw UsageError("unknown orbit label: " + orbit);
  Gf f = field_for(q);
  if (shape == 233) {
    print_field_header(f, std::cout);
    std::cout << to_line(f, canonical_form(f, *label)) << "\n";
    return 0;
  }
  const auto& valid = labels_223();
  if (std::find(valid.begin(), valid.end(), *label) == valid.end())
    throw UsageError("orbit " + orbit + " has no 2x2x3 representative");
  Tensor233 t = canonical_form(f, *label);
  Tensor223 b;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 3; ++k) b.a[idx223(i, j, k)] = t.a[idx233(i, j, k)];
  print_field_header(f, std::cout);
  std::cout << to_line223(f, b) << "\n";
  return 0;
}

template <typename Result>
void print_census(const Result& r, int q, int shape, int threads, bool as_json) {
  if (as_json) {
    json j;
    j["q"] = q;
    j["shape"] = shape == 233 ? "233" : "223";
    j["total"] = r.total;
    j["h_labels"] = r.h_labels_present();
    j["g_labels"] = r.g_labels_present();
    json counts = json::object();
    for (OrbitLabel l : all_labels())
      if (r.h_counts[int(l)]) counts[to_string(l)] = r.h_counts[int(l)];
    j["counts"] = counts;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "# census shape=" << shape << " q=" << q << " threads=" << threads << "\n";
  for (OrbitLabel l : all_labels())
    if (r.h_counts[int(l)]) std::cout << to_string(l) << " " << r.h_counts[int(l)] << "\n";
  std::cout << "total " << r.total << "\n";
  std::cout << "h_labels " << r.h_labels_present() << "\n";
  std::cout << "g_labels " << r.g_labels_present() << "\n";
}

int run_census(int q, int shape, int threads, bool as_json) {
  Gf f = field_for(q);
  try {
    if (shape == 233) {
      print_census(full_census(f, threads), q, shape, threads, as_json);
    } else {
      print_census(full_census_223(f, threads), q, shape, threads, as_json);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

bool check(const char* what, bool passed) {
  std::cout << (passed ? "[PASS] " : "[FAIL] ") << what << "\n";
  return passed;
}

int run_verify(int q, bool with_full_census, bool with_bfs, int threads) {
  if (q != 2 && q != 3) throw UsageError("verify supports q = 2 and q = 3");
  if (with_bfs && q != 2) throw UsageError("--bfs-cross-check is exhaustive at q = 2 only");
  Gf f = field_for(q);
  bool ok = true;

  {
    bool good = true;
    for (OrbitLabel l : all_labels()) {
      Tensor233 c = canonical_form(f, l);
      good = good && classify_h(f, c) == l &&
             rank_distribution(f, c) == expected_rank_distribution(l, q);
    }
    ok &= check("canonical forms classify to their own labels", good);
  }
  {
    auto cubics = irreducible_monic_cubics(f);
    bool good = int(cubics.size()) == (q * q * q - q) / 3;
    if (good) good = pgl_orbit_of_cubic(f, cubics[0]) == cubics;
    for (const Poly& p : cubics) good = good && pgl_stabilizer_of_cubic(f, p).size() == 3;
    ok &= check("irreducible cubics form one substitution orbit, stabilizers of order 3", good);
  }
  {
    Census223Result r = full_census_223(f, threads);
    ok &= check("2x2x3 census finds 10 fine and 9 merged classes",
                r.h_labels_present() == 10 && r.g_labels_present() == 9);
  }
  if (with_full_census) {
    CensusResult r = full_census(f, threads);
    ok &= check("2x3x3 census covers the space with 21 fine and 18 merged classes",
                r.total == [&] { std::uint64_t s = 1; for (int i = 0; i < 18; ++i) s *= q; return s; }() &&
                    r.h_labels_present() == kNumLabels && r.g_labels_present() == kNumGLabels);
  }
  if (with_bfs) {
    CrossCheckReport rep = census_matches_bfs(f);
    for (const std::string& p : rep.problems) std::cout << "  " << p << "\n";
    ok &= check("orbit flood from the 21 representatives matches the census", rep.ok);
    CrossCheck223Report rep223 = cross_check_223(f);
    for (const std::string& p : rep223.problems) std::cout << "  " << p << "\n";
    ok &= check("2x2x3 orbit flood fuses exactly o2 with o4", rep223.ok);
    LemmaCheckReport lemma = contraction_equivalence_check(f, 1000, 20260816);
    for (const std::string& p : lemma.problems) std::cout << "  " << p << "\n";
    ok &= check("orbit equivalence transfers to the first contraction space", lemma.ok);
  }
  return ok ? 0 : kExitVerifyFailed;
}

int run_pencil_orbits(int q) {
  Gf f = field_for(q);
  auto cubics = irreducible_monic_cubics(f);
  print_field_header(f, std::cout);
  std::cout << "# q=" << q << ": " << cubics.size() << " monic irreducible cubics\n";
  for (const Poly& p : cubics) std::cout << poly_string(f, p) << "\n";
  bool transitive = pgl_orbit_of_cubic(f, cubics[0]) == cubics;
  std::size_t stab = pgl_stabilizer_of_cubic(f, cubics[0]).size();
  std::cout << "count " << cubics.size() << "\n";
  std::cout << "transitive " << (transitive ? "yes" : "no") << "\n";
  std::cout << "stabilizer " << stab << "\n";
  bool ok = int(cubics.size()) == (q * q * q - q) / 3 && transitive && stab == 3;
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit classification of 2x3x3 and 2x2x3 tensors over small finite fields"};
  app.require_subcommand(1);

  auto* cls = app.add_subcommand("classify", "classify tensors read as text lines");
  std::string input = "-";
  int cls_shape = 0;
  bool cls_json = false;
  cls->add_option("--input", input, "input file, or - for stdin")->capture_default_str();
  cls->add_option("--shape", cls_shape, "require 233 or 223 input")
      ->check(CLI::IsMember({233, 223}));
  cls->add_flag("--json", cls_json, "emit a JSON array instead of text lines");

  auto* canon = app.add_subcommand("canonical", "print the canonical representative of a class");
  std::string orbit;
  int canon_q = 2, canon_shape = 233;
  canon->add_option("--orbit", orbit, "orbit label, e.g. o8")->required();
  canon->add_option("--q", canon_q, "field order")->capture_default_str();
  canon->add_option("--shape", canon_shape, "tensor format")->check(CLI::IsMember({233, 223}));

  auto* census = app.add_subcommand("census", "classify the entire coefficient space");
  int census_q = 2, census_shape = 233, census_threads = 1;
  bool census_json = false;
  census->add_option("--q", census_q, "field order")->capture_default_str();
  census->add_option("--shape", census_shape, "tensor format")->check(CLI::IsMember({233, 223}));
  census->add_option("--threads", census_threads, "shard count")->check(CLI::PositiveNumber);
  census->add_flag("--json", census_json, "emit JSON");

  auto* verify = app.add_subcommand("verify", "run self-checks against the group-action oracle");
  int verify_q = 2, verify_threads = 1;
  bool full_census_flag = false, bfs_flag = false;
  verify->add_option("--q", verify_q, "field order, 2 or 3")->capture_default_str();
  verify->add_flag("--full-census", full_census_flag, "also run the exhaustive 2x3x3 census");
  verify->add_flag("--bfs-cross-check", bfs_flag,
                   "flood all orbits by breadth-first search and compare (q = 2)");
  verify->add_option("--threads", verify_threads, "shard count")->check(CLI::PositiveNumber);

  auto* pencil = app.add_subcommand("pencil-orbits", "list irreducible cubics and their orbit data");
  int pencil_q = 2;
  pencil->add_option("--q", pencil_q, "field order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(cls)) return run_classify(input, cls_shape, cls_json);
    if (app.got_subcommand(canon)) return run_canonical(orbit, canon_q, canon_shape);
    if (app.got_subcommand(census)) return run_census(census_q, census_shape, census_threads, census_json);
    if (app.got_subcommand(verify))
      return run_verify(verify_q, full_census_flag, bfs_flag, verify_threads);
    if (app.got_subcommand(pencil)) return run_pencil_orbits(pencil_q);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
