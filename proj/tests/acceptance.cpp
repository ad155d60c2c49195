// Acceptance runner: one line per criterion, nonzero exit on any failure.
// --allow-long additionally runs the quarter-hour H4 folding.
#include "krammer/charpoly.hpp"
#include "krammer/coxeter.hpp"
#include "krammer/holonomy.hpp"
#include "krammer/lie_closure.hpp"
#include "krammer/matrix.hpp"
#include "krammer/operators.hpp"
#include "krammer/polynomial.hpp"
#include "krammer/report.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace krammer;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void line(int criterion, bool ok, const std::string& text, double secs, double budget) {
  if (budget > 0)
    std::printf("criterion %d: %s  %s (%.1fs, budget %.0fs)\n", criterion,
                ok ? "pass" : "FAIL", text.c_str(), secs, budget);
  else
    std::printf("criterion %d: %s  %s (%.1fs)\n", criterion, ok ? "pass" : "FAIL",
                text.c_str(), secs);
  if (!ok) ++g_failures;
}

std::vector<TypeSpec> types_of(const std::vector<std::string>& names) {
  std::vector<TypeSpec> out;
  for (const std::string& n : names) out.push_back(TypeSpec::parse(n));
  return out;
}

long detail_long(const CheckReport& r, const char* key) {
  return r.details.at(key).get<long>();
}

const CheckReport* find(const SuiteResult& res, const std::string& id) {
  for (const CheckReport& r : res.reports)
    if (r.check_id == id) return &r;
  return nullptr;
}

std::string first_problem(const SuiteResult& res) {
  for (const CheckReport& r : res.reports)
    if (r.status == CheckStatus::fail) return " first failure: " + r.check_id;
  return "";
}

bool all_pass(const SuiteResult& res, long* passed = nullptr) {
  long ok = 0;
  for (const CheckReport& r : res.reports)
    if (r.status == CheckStatus::pass) ++ok;
  if (passed) *passed = ok;
  return ok == long(res.reports.size());
}

// Independent exact Lie-closure oracle: echelonized rational span with its
// own elimination, grown by bracketing every pair of basis elements (not
// just brackets against the generators) until a fixpoint.
class PairwiseClosure {
public:
  long dimension(const std::vector<RatMatrix>& generators) {
    basis_.clear();
    pivots_.clear();
    mats_.clear();
    for (const RatMatrix& g : generators) insert(g);
    for (size_t i = 0; i < mats_.size(); ++i)
      for (size_t j = 0; j < i; ++j) insert(commutator(mats_[i], mats_[j]));
    return long(basis_.size());
  }

private:
  void insert(const RatMatrix& mat) {
    RatVec v;
    v.reserve(size_t(mat.rows()) * size_t(mat.cols()));
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j) v.push_back(mat.at(i, j));
    for (size_t k = 0; k < basis_.size(); ++k)
      if (v[size_t(pivots_[k])] != 0)
        v = vec_sub(v, vec_scale(v[size_t(pivots_[k])], basis_[k]));
    size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) return;
    basis_.push_back(vec_scale(1 / v[lead], v));
    pivots_.push_back(int(lead));
    mats_.push_back(mat);
  }

  std::vector<RatVec> basis_;
  std::vector<int> pivots_;
  std::vector<RatMatrix> mats_;
};

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteConfig cfg;
  cfg.command = "counts";
  SuiteResult res = run_suite(cfg);
  long passed = 0;
  bool ok = all_pass(res, &passed) && res.reports.size() == 16;
  line(1, ok, "reflection counts for 16 types match the closed forms" + first_problem(res),
       seconds_since(t0), 1);
}

void criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string note;
  const std::vector<TypeSpec> scope =
      types_of({"A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6"});
  for (const char* kind : {"holonomy", "cubic", "central", "selfadjoint"}) {
    SuiteConfig cfg;
    cfg.command = "check";
    cfg.kind = kind;
    cfg.types = scope;
    SuiteResult res = run_suite(cfg);
    if (res.any_fail()) {
      ok = false;
      note = first_problem(res);
      break;
    }
    // 7 sample points pin every degree <= 3 entry identity; the projector
    // sub-checks skip where the form degenerates, still leaving >= 5 points
    for (const TypeSpec& t : scope) {
      long passed = 0;
      for (const CheckReport& r : res.reports)
        if (r.type_string == t.to_string() && r.status == CheckStatus::pass) ++passed;
      if (passed < 5) {
        ok = false;
        note = " too few passing points for " + std::string(kind) + "/" + t.to_string();
      }
    }
  }
  line(2, ok,
       "defining relations hold identically in m for A2-A5, D4-D6, E6" + note,
       seconds_since(t0), 60);
}

// criteria 3 and 4 share one suite run; the factorization budget covers the
// whole command, the definiteness budget the summed definiteness times
void criteria_3_and_4() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteConfig cfg;
  cfg.command = "discriminant";
  cfg.types = types_of(
      {"A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8",
       "E6", "E7", "E8"});
  SuiteResult res = run_suite(cfg);
  const double total = seconds_since(t0);

  bool disc_ok = true, def_ok = true;
  double def_ms = 0;
  for (const CheckReport& r : res.reports) {
    const bool is_def = r.check_id.rfind("definiteness/", 0) == 0;
    if (is_def) def_ms += double(r.elapsed_ms);
    if (r.status != CheckStatus::pass) (is_def ? def_ok : disc_ok) = false;
  }
  line(3, disc_ok,
       "discriminants of 15 types split into the predicted linear factors" +
           first_problem(res),
       total, 60);
  line(4, def_ok,
       "positive definiteness starts exactly one step above the threshold #R - c",
       def_ms / 1000.0, 10);
}

void criterion_5() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteConfig cfg;
  cfg.command = "closure";
  cfg.types = types_of({"A2", "A3", "A4", "D4"});
  SuiteResult res = run_suite(cfg);
  const double small = seconds_since(t0);

  const long want[] = {9, 36, 100, 144};
  bool ok = res.reports.size() == 4 && all_pass(res) && small < 10;
  for (size_t i = 0; ok && i < 4; ++i)
    ok = detail_long(res.reports[i], "dimension") == want[i];

  auto t1 = std::chrono::steady_clock::now();
  cfg.types = types_of({"E6"});
  SuiteResult e6 = run_suite(cfg);
  bool e6_ok = all_pass(e6) && detail_long(e6.reports[0], "dimension") == 1296;

  char buf[64];
  std::snprintf(buf, sizeof buf, ", and 1296 for E6 in %.1fs", seconds_since(t1));
  line(5, ok && e6_ok,
       "simple generators reach the full 9/36/100/144" + std::string(buf) +
           first_problem(res) + first_problem(e6),
       seconds_since(t0), 600);
}

void criterion_6(bool allow_long) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteConfig cfg;
  cfg.command = "closure";

  cfg.folded = "F4";
  SuiteResult f4 = run_suite(cfg);
  bool ok = f4.reports.size() == 2 && all_pass(f4);
  for (const CheckReport& r : f4.reports)
    ok = ok && detail_long(r, "dimension") == 576;

  cfg.folded = "H3";
  SuiteResult h3 = run_suite(cfg);
  const CheckReport* h3_5 = find(h3, "closure-folded/H3/m=5/p=19");
  const CheckReport* h3_7 = find(h3, "closure-folded/H3/m=7/p=19");
  // at m = 5 the ambient form degenerates (its discriminant vanishes), the
  // 5-dimensional kernel is invariant, and the closure provably stays below
  // 900; the run records the reached dimension instead
  ok = ok && h3_7 && h3_7->status == CheckStatus::pass &&
       detail_long(*h3_7, "dimension") == 900;
  ok = ok && h3_5 && h3_5->status == CheckStatus::skipped_degenerate &&
       detail_long(*h3_5, "dimension") == 774;

  std::string text =
      "folded F4 reaches 576 at m=5,7; folded H3 reaches 900 at m=7 and the "
      "form-degenerate m=5 records 774";
  if (allow_long) {
    cfg.folded = "H4";
    cfg.allow_long = true;
    auto t1 = std::chrono::steady_clock::now();
    SuiteResult h4 = run_suite(cfg);
    bool h4_ok = all_pass(h4) && detail_long(h4.reports[0], "dimension") == 14400;
    ok = ok && h4_ok;
    char buf[96];
    std::snprintf(buf, sizeof buf, "; folded H4 reaches 14400 (%.0fs)",
                  seconds_since(t1));
    text += buf;
  } else {
    text += "; H4 gated behind --allow-long";
  }
  line(6, ok, text + first_problem(f4) + first_problem(h3), seconds_since(t0),
       allow_long ? 0 : 1800);
}

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string note;
  for (const char* kind : {"triples", "wbasis", "vanishing"}) {
    SuiteConfig cfg;
    cfg.command = "check";
    cfg.kind = kind;
    cfg.types = types_of({"A2", "A3", "A4", "A5", "D4", "D5", "E6"});
    cfg.m_values = {Rat(5), Rat(7)};
    SuiteResult res = run_suite(cfg);
    if (!all_pass(res)) {
      ok = false;
      note = first_problem(res);
    }
  }
  line(7, ok,
       "triple spectra sum to dim V, eigenbases leave no reflection unclassified, "
       "commuting projector products vanish" + note,
       seconds_since(t0), 300);
}

void criterion_8() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteConfig cfg;
  cfg.command = "check";
  cfg.kind = "branch";
  cfg.types = types_of({"A2", "A3", "A4", "A5", "A6", "A7", "D4", "D5", "D6", "D7"});
  SuiteResult res = run_suite(cfg);
  long passed = 0;
  bool ok = all_pass(res, &passed) && res.reports.size() == 10 * 8 + 2;
  line(8, ok,
       "restriction to the parabolic splits as claimed at 8 sample points per type, "
       "and the discriminant recursion closes" + first_problem(res),
       seconds_since(t0), 120);
}

void criterion_9() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string note;

  // spectra against an independent exact characteristic polynomial
  for (const char* name : {"A2", "A3"}) {
    CoxeterSystem sys = build_system(TypeSpec::parse(name));
    for (int mv : {5, 7}) {
      for (auto [i, j] : sys.adjacent_simple_pairs()) {
        TripleSpectrum sp = triple_spectrum(sys, i, j, Rat(mv));
        RatMatrix total = tau(sys, sp.s0, Rat(mv)) + tau(sys, sp.si, Rat(mv)) +
                          tau(sys, sp.sj, Rat(mv));
        Poly expected = Poly::from_coeffs({Rat(1)});
        for (const auto& [lambda, mult] : sp.multiplicities)
          expected = expected * Poly::from_coeffs({-lambda, Rat(1)}).pow(int(mult));
        if (!(char_poly_integer(total) == expected)) {
          ok = false;
          note = std::string(" charpoly mismatch for ") + name;
        }
      }
    }
  }

  // closures against an independent pairwise-bracket rational closure
  PairwiseClosure oracle;
  CoxeterSystem a2 = build_system(TypeSpec::parse("A2"));
  std::vector<RatMatrix> a2_all;
  for (int s = 0; s < a2.num_reflections(); ++s) a2_all.push_back(tau(a2, s, Rat(7)));
  CoxeterSystem a3 = build_system(TypeSpec::parse("A3"));
  std::vector<RatMatrix> a3_simple;
  for (int s : a3.simple_indices()) a3_simple.push_back(tau(a3, s, Rat(7)));

  const long a2_oracle = oracle.dimension(a2_all);
  const long a3_oracle = oracle.dimension(a3_simple);
  const long a2_lib = rational_closure_dimension(a2_all);
  const long a3_lib = rational_closure_dimension(a3_simple);
  const long a2_modp =
      check_surjectivity(a2, GeneratorSet::all_reflections, Rat(7), 19).dimension;
  const long a3_modp =
      check_surjectivity(a3, GeneratorSet::simple_reflections, Rat(7), 19).dimension;
  if (a2_oracle != 9 || a2_lib != 9 || a2_modp != 9) {
    ok = false;
    note += " A2 closure disagreement";
  }
  if (a3_oracle != 36 || a3_lib != 36 || a3_modp != 36) {
    ok = false;
    note += " A3 closure disagreement";
  }

  line(9, ok,
       "independent oracles agree exactly: spectra with the factored "
       "characteristic polynomial, closures over Q with the mod-p result" +
           note,
       seconds_since(t0), 0);
}

} // namespace

int main(int argc, char** argv) {
  bool allow_long = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--allow-long") allow_long = true;

  criterion_1();
  criterion_2();
  criteria_3_and_4();
  criterion_5();
  criterion_6(allow_long);
  criterion_7();
  criterion_8();
  criterion_9();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria satisfied\n");
  return 0;
}
