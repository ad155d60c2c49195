#include "krammer/report.hpp"

#include "krammer/branching.hpp"
#include "krammer/errors.hpp"
#include "krammer/holonomy.hpp"
#include "krammer/invariant_form.hpp"
#include "krammer/lie_closure.hpp"
#include "krammer/operators.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace krammer {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_degenerate: return "skipped-degenerate";
  }
  return "?";
}

CheckStatus status_from_name(const std::string& name) {
  if (name == "pass") return CheckStatus::pass;
  if (name == "fail") return CheckStatus::fail;
  if (name == "skipped-degenerate") return CheckStatus::skipped_degenerate;
  throw std::invalid_argument("unknown check status: " + name);
}

Json CheckReport::to_json() const {
  Json j;
  j["check_id"] = check_id;
  j["type"] = type_string;
  j["params"] = params;
  j["status"] = status_name(status);
  j["details"] = details;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

CheckReport CheckReport::from_json(const Json& j) {
  CheckReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.type_string = j.at("type").get<std::string>();
  r.params = j.at("params");
  r.status = status_from_name(j.at("status").get<std::string>());
  r.details = j.at("details");
  r.elapsed_ms = j.at("elapsed_ms").get<long>();
  return r;
}

std::string CheckReport::to_line() const { return to_json().dump(); }

bool SuiteResult::any_fail() const {
  for (const CheckReport& r : reports)
    if (r.status == CheckStatus::fail) return true;
  return false;
}

Counts expected_counts(const TypeSpec& t) {
  Counts c;
  const long r = t.rank;
  switch (t.family) {
    case Family::A:
      c.reflections = r * (r + 1) / 2;
      c.commuting = (r - 1) * (r - 2) / 2;
      break;
    case Family::D:
      c.reflections = r * (r - 1);
      c.commuting = r * r - 5 * r + 7;
      break;
    case Family::E:
      c.reflections = r == 6 ? 36 : r == 7 ? 63 : 120;
      c.commuting = r == 6 ? 15 : r == 7 ? 30 : 63;
      break;
    case Family::I2:
      throw UnsupportedType("counts table covers ADE types only");
  }
  c.noncommuting = c.reflections - 1 - c.commuting;
  return c;
}

FactoredPoly expected_discriminant(const TypeSpec& t) {
  FactoredPoly f;
  const int r = t.rank;
  switch (t.family) {
    case Family::A: {
      if (r == 1) {
        f.add_root(Rat(1), 1);
        return f;
      }
      const int n = r + 1;
      f.add_root(Rat(2 * n - 3), 1);
      f.add_root(Rat(n - 3), n - 1);
      if (n > 3) f.add_root(Rat(-1), n * (n - 3) / 2);
      return f;
    }
    case Family::D:
      if (r < 4) throw UnsupportedType("D ranks start at 4");
      f.add_root(Rat(4 * r - 7), 1);
      f.add_root(Rat(2 * r - 7), r - 1);
      f.add_root(Rat(1), r * (r - 1) / 2);
      f.add_root(Rat(-3), r * (r - 3) / 2);
      return f;
    case Family::E:
      f.add_root(r == 6 ? Rat(21) : r == 7 ? Rat(33) : Rat(57), 1);
      f.add_root(r == 6 ? Rat(3) : r == 7 ? Rat(5) : Rat(9), r == 6 ? 20 : r == 7 ? 27 : 35);
      f.add_root(Rat(-3), r == 6 ? 15 : r == 7 ? 35 : 84);
      return f;
    case Family::I2:
      throw UnsupportedType("no closed-form discriminant for I2 systems");
  }
  throw UnsupportedType("unknown family");
}

namespace {

class Timer {
public:
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void apply_verify(CheckReport& rep, const VerifyResult& r) {
  if (!r.ok) {
    rep.status = CheckStatus::fail;
    rep.details["witness"] = r.detail;
  } else if (r.skipped) {
    rep.status = CheckStatus::skipped_degenerate;
    rep.details["note"] = r.detail;
  }
}

VerifyResult merged(VerifyResult a, const VerifyResult& b) {
  if (!b.ok)
    a.fail(b.detail);
  else if (b.skipped)
    a.skip(b.detail);
  return a;
}

// the relation checks compare matrix entries that are polynomials in m of
// degree <= 3, so agreement at these 7 points certifies the identities
std::vector<Rat> relation_points() {
  return {Rat(2), Rat(4), Rat(5), Rat(7), Rat(11), Rat(13), Rat(17)};
}

// first 8 integer sample values >= 2 avoiding the branching poles
std::vector<Rat> branch_points(const TypeSpec& t) {
  std::vector<long> poles;
  if (t.family == Family::A) {
    const long n = t.rank + 1;
    poles = {n - 4, 2 * n - 5};
  } else {
    poles = {4L * t.rank - 11, 2L * t.rank - 9};
  }
  std::vector<Rat> pts;
  for (long v = 2; long(pts.size()) < 8; ++v)
    if (std::find(poles.begin(), poles.end(), v) == poles.end()) pts.push_back(Rat(v));
  return pts;
}

std::vector<Rat> closure_points(const TypeSpec& t) {
  if (t.family == Family::A && t.rank <= 3) return {Rat(7)};
  if (t.family == Family::A && t.rank == 4) return {Rat(8)};
  if (t.family == Family::D && t.rank == 4) return {Rat(8)};
  if (t.family == Family::E && t.rank == 6) return {Rat(5)};
  return {Rat(7)};
}

std::vector<TypeSpec> ade_table() {
  std::vector<TypeSpec> v;
  for (int r = 1; r <= 8; ++r) v.push_back({Family::A, r, 0});
  for (int r = 4; r <= 8; ++r) v.push_back({Family::D, r, 0});
  for (int r = 6; r <= 8; ++r) v.push_back({Family::E, r, 0});
  return v;
}

std::vector<TypeSpec> make_types(const char* const* names, size_t count) {
  std::vector<TypeSpec> v;
  for (size_t i = 0; i < count; ++i) v.push_back(TypeSpec::parse(names[i]));
  return v;
}

GeneratorSet set_from_name(const std::string& name) {
  if (name == "simple_reflections" || name == "simple") return GeneratorSet::simple_reflections;
  if (name == "all_reflections" || name == "all") return GeneratorSet::all_reflections;
  if (name == "last_column") return GeneratorSet::last_column;
  throw std::invalid_argument("unknown generator set: " + name);
}

ClosureProgress make_progress(const std::string& id, long every) {
  if (every <= 0) return {};
  return [id, every, last = long(0)](long dim, long target) mutable {
    if (dim - last >= every || dim == target) {
      last = dim;
      std::fprintf(stderr, "%s: %ld/%ld\n", id.c_str(), dim, target);
    }
  };
}

CheckReport relation_report(const std::string& kind, const CoxeterSystem& sys, const Rat& m) {
  Timer t;
  CheckReport rep;
  rep.check_id = kind + "/" + sys.spec.to_string() + "/m=" + rat_to_string(m);
  rep.type_string = sys.spec.to_string();
  rep.params["m"] = rat_to_string(m);

  VerifyResult r;
  if (kind == "holonomy") {
    r = verify_flat_relations(sys, m);
  } else if (kind == "cubic") {
    r = merged(verify_cubic(sys, m), verify_equivariance(sys, m));
  } else if (kind == "central") {
    r = verify_central(sys, m);
  } else {
    r = verify_selfadjoint(sys, m);
  }
  apply_verify(rep, r);
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport triples_report(const CoxeterSystem& sys, const Rat& m) {
  Timer t;
  CheckReport rep;
  rep.check_id = "triples/" + sys.spec.to_string() + "/m=" + rat_to_string(m);
  rep.type_string = sys.spec.to_string();
  rep.params["m"] = rat_to_string(m);

  const long n = sys.num_reflections();
  Json pairs = Json::array();
  try {
    for (auto [i, j] : sys.adjacent_simple_pairs()) {
      TripleSpectrum sp = triple_spectrum(sys, i, j, m);
      Json mults = Json::object();
      long sum = 0;
      for (const auto& [lambda, mult] : sp.multiplicities) {
        mults[rat_to_string(lambda)] = mult;
        sum += mult;
      }
      Json entry;
      entry["nodes"] = std::to_string(i) + "-" + std::to_string(j);
      entry["multiplicities"] = mults;
      pairs.push_back(entry);
      if (sum != n) {
        rep.status = CheckStatus::fail;
        rep.details["witness"] = "multiplicities at nodes " + std::to_string(i) + "-" +
                                 std::to_string(j) + " sum to " + std::to_string(sum) +
                                 ", dimension is " + std::to_string(n);
      }
    }
    rep.details["pairs"] = pairs;
  } catch (const PoleParameter& e) {
    rep.status = CheckStatus::skipped_degenerate;
    rep.details["note"] = e.what();
  } catch (const SpectrumEscape& e) {
    rep.status = CheckStatus::fail;
    rep.details["witness"] = e.what();
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport wbasis_report(const CoxeterSystem& sys, const Rat& m) {
  Timer t;
  CheckReport rep;
  rep.check_id = "wbasis/" + sys.spec.to_string() + "/m=" + rat_to_string(m);
  rep.type_string = sys.spec.to_string();
  rep.params["m"] = rat_to_string(m);

  const long n = sys.num_reflections();
  Json pairs = Json::array();
  try {
    VerifyResult agg;
    for (auto [i, j] : sys.adjacent_simple_pairs()) {
      WBasis wb = w_basis(sys, i, j, m);
      agg = merged(agg, wb.checks);
      const long orphans = n - 3 - wb.commuting_with_all - 3 * wb.orbits;
      if (orphans != 0)
        agg.fail("nodes " + std::to_string(i) + "-" + std::to_string(j) + " leave " +
                 std::to_string(orphans) + " reflections unclassified");
      Json entry;
      entry["nodes"] = std::to_string(i) + "-" + std::to_string(j);
      entry["orbits"] = wb.orbits;
      entry["singles"] = wb.commuting_with_all;
      pairs.push_back(entry);
    }
    rep.details["pairs"] = pairs;
    apply_verify(rep, agg);
  } catch (const PoleParameter& e) {
    rep.status = CheckStatus::skipped_degenerate;
    rep.details["note"] = e.what();
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport vanishing_report(const CoxeterSystem& sys, const Rat& m) {
  Timer t;
  CheckReport rep;
  rep.check_id = "vanishing/" + sys.spec.to_string() + "/m=" + rat_to_string(m);
  rep.type_string = sys.spec.to_string();
  rep.params["m"] = rat_to_string(m);

  const int n = sys.num_reflections();
  VerifyResult agg;
  long checked = 0;
  for (int s = 0; s < n && agg.ok; ++s)
    for (int u = s + 1; u < n && agg.ok; ++u)
      if (sys.commute(s, u)) {
        agg = merged(agg, verify_commuting_product_vanishes(sys, s, u, m));
        ++checked;
      }
  rep.details["pairs_checked"] = checked;
  rep.details["commuting_pairs"] = long(n) * sys.counts().commuting / 2;
  apply_verify(rep, agg);
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport branch_report(const CoxeterSystem& sys, const Rat& m) {
  Timer t;
  CheckReport rep;
  rep.check_id = "branch/" + sys.spec.to_string() + "/m=" + rat_to_string(m);
  rep.type_string = sys.spec.to_string();
  rep.params["m"] = rat_to_string(m);

  try {
    BranchDecomposition dec =
        sys.spec.family == Family::A ? branch_A(sys, m) : branch_D(sys, m);
    Json blocks = Json::array();
    for (const BranchBlock& b : dec.blocks) {
      Json entry;
      entry["label"] = b.label;
      entry["dim"] = long(b.basis.size());
      blocks.push_back(entry);
    }
    rep.details["blocks"] = blocks;
    rep.details["alpha"] = rat_to_string(dec.alpha);
    rep.details["beta"] = rat_to_string(dec.beta);
    apply_verify(rep, dec.checks);
  } catch (const PoleParameter& e) {
    rep.status = CheckStatus::skipped_degenerate;
    rep.details["note"] = e.what();
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport recursion_report(Family family, int max_rank) {
  Timer t;
  CheckReport rep;
  const std::string fam = family == Family::A ? "A" : "D";
  rep.check_id = "branch-recursion/" + fam + std::to_string(max_rank);
  rep.type_string = fam + std::to_string(max_rank);
  rep.details["max_rank"] = long(max_rank);
  apply_verify(rep, verify_discriminant_recursion(family, max_rank));
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport counts_report(const TypeSpec& type) {
  Timer t;
  CheckReport rep;
  rep.check_id = "counts/" + type.to_string();
  rep.type_string = type.to_string();

  CoxeterSystem sys = build_system(type);
  Counts got = sys.counts();
  Counts want = expected_counts(type);
  rep.details["reflections"] = got.reflections;
  rep.details["commuting"] = got.commuting;
  rep.details["noncommuting"] = got.noncommuting;
  if (got.reflections != want.reflections || got.commuting != want.commuting ||
      got.noncommuting != want.noncommuting) {
    rep.status = CheckStatus::fail;
    rep.details["witness"] = "expected (" + std::to_string(want.reflections) + ", " +
                             std::to_string(want.commuting) + ", " +
                             std::to_string(want.noncommuting) + ")";
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport discriminant_report(const CoxeterSystem& sys, const std::string& expect) {
  Timer t;
  CheckReport rep;
  rep.check_id = "discriminant/" + sys.spec.to_string();
  rep.type_string = sys.spec.to_string();

  FactoredPoly got = factor_discriminant(sys);
  FactoredPoly want = expect.empty() ? expected_discriminant(sys.spec) : parse_factored(expect);
  rep.details["factors"] = got.to_string();
  rep.details["degree"] = long(got.degree());
  if (!(got == want)) {
    rep.status = CheckStatus::fail;
    rep.details["witness"] = "expected " + want.to_string();
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport definiteness_report(const CoxeterSystem& sys) {
  Timer t;
  CheckReport rep;
  rep.check_id = "definiteness/" + sys.spec.to_string();
  rep.type_string = sys.spec.to_string();

  Counts c = sys.counts();
  const long threshold = c.reflections - c.commuting;
  rep.details["threshold"] = threshold;
  const bool below = positive_definite(sys, Rat(threshold - 1));
  const bool at = positive_definite(sys, Rat(threshold));
  const bool above = positive_definite(sys, Rat(threshold + 1));
  rep.details["at_threshold_minus_1"] = below;
  rep.details["at_threshold"] = at;
  rep.details["at_threshold_plus_1"] = above;
  if (below || at || !above) {
    rep.status = CheckStatus::fail;
    rep.details["witness"] = "positive definiteness must begin strictly above the threshold";
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport closure_type_report(const CoxeterSystem& sys, const std::string& set_name,
                                const Rat& m, int p, long progress_every) {
  Timer t;
  CheckReport rep;
  const GeneratorSet set = set_from_name(set_name);
  rep.check_id = "closure/" + sys.spec.to_string() + "/" + generator_set_name(set) +
                 "/m=" + rat_to_string(m) + "/p=" + std::to_string(p);
  rep.type_string = sys.spec.to_string();
  rep.params["m"] = rat_to_string(m);
  rep.params["prime"] = p;
  rep.params["generator_set"] = generator_set_name(set);

  SurjectivityReport sr =
      check_surjectivity(sys, set, m, p, make_progress(rep.check_id, progress_every));
  rep.details["generators"] = sr.generator_count;
  rep.details["dimension"] = sr.dimension;
  rep.details["target"] = sr.target;
  rep.details["saturated"] = sr.saturated;
  if (!sr.full()) {
    if (discriminant(sys).eval(m) == 0) {
      rep.status = CheckStatus::skipped_degenerate;
      rep.details["note"] = "invariant form degenerate at m = " + rat_to_string(m) +
                            "; full closure unreachable, dimension recorded";
    } else {
      rep.status = CheckStatus::fail;
      rep.details["witness"] = "reached dimension " + std::to_string(sr.dimension) + " of " +
                               std::to_string(sr.target);
    }
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport folded_closure_report(const std::string& source, const Rat& m, int p,
                                  long progress_every) {
  Timer t;
  CheckReport rep;
  rep.check_id =
      "closure-folded/" + source + "/m=" + rat_to_string(m) + "/p=" + std::to_string(p);
  rep.params["m"] = rat_to_string(m);
  rep.params["prime"] = p;
  rep.params["folded"] = source;

  FoldedReport fr =
      check_folded_surjectivity(source, m, p, make_progress(rep.check_id, progress_every));
  rep.type_string = fr.target.to_string();
  rep.details["dimension"] = fr.dimension;
  rep.details["target"] = fr.target_dim;
  rep.details["saturated"] = fr.saturated;
  if (!fr.full()) {
    if (discriminant(build_system(fr.target)).eval(m) == 0) {
      rep.status = CheckStatus::skipped_degenerate;
      rep.details["note"] = "invariant form of " + fr.target.to_string() +
                            " degenerate at m = " + rat_to_string(m) +
                            "; full closure unreachable, dimension recorded";
    } else {
      rep.status = CheckStatus::fail;
      rep.details["witness"] = "reached dimension " + std::to_string(fr.dimension) + " of " +
                               std::to_string(fr.target_dim);
    }
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

CheckReport dihedral_closure_report(const TypeSpec& type) {
  Timer t;
  CheckReport rep;
  rep.check_id = "closure-dihedral/" + type.to_string();
  rep.type_string = type.to_string();
  rep.params["order"] = long(type.i2_order);

  DihedralCertificate cert = dihedral_certificate(type.i2_order);
  rep.details["dimension"] = cert.dimension;
  rep.details["c_rational"] = cert.c_rational;
  if (cert.c_rational) rep.details["c"] = rat_to_string(cert.c);
  rep.details["note"] = cert.detail;
  if (!cert.full()) {
    // exceptional parameter: the gl_2 statement genuinely degenerates here
    rep.status = CheckStatus::skipped_degenerate;
  }
  rep.elapsed_ms = t.ms();
  return rep;
}

const std::vector<std::string> kCheckKinds = {
    "holonomy", "cubic",  "central",   "selfadjoint",
    "triples",  "wbasis", "vanishing", "branch"};

void run_check(const SuiteConfig& cfg, const std::string& kind,
               const std::vector<TypeSpec>& types, std::vector<CheckReport>& out) {
  if (std::find(kCheckKinds.begin(), kCheckKinds.end(), kind) == kCheckKinds.end())
    throw std::invalid_argument("unknown check kind: " + kind);
  if (types.empty()) throw std::invalid_argument("check requires at least one --type");

  for (const TypeSpec& type : types) {
    if (kind == "branch") {
      const bool ok = (type.family == Family::A && type.rank >= 2) ||
                      (type.family == Family::D && type.rank >= 4);
      if (!ok)
        throw UnsupportedType("branch decompositions exist for A rank >= 2, D rank >= 4");
    }
    CoxeterSystem sys = build_system(type);
    std::vector<Rat> points = cfg.m_values;
    if (points.empty())
      points = kind == "branch" ? branch_points(type) : relation_points();

    for (const Rat& m : points) {
      if (kind == "triples")
        out.push_back(triples_report(sys, m));
      else if (kind == "wbasis")
        out.push_back(wbasis_report(sys, m));
      else if (kind == "vanishing")
        out.push_back(vanishing_report(sys, m));
      else if (kind == "branch")
        out.push_back(branch_report(sys, m));
      else
        out.push_back(relation_report(kind, sys, m));
    }
  }

  if (kind == "branch") {
    for (Family fam : {Family::A, Family::D}) {
      int max_rank = 0;
      for (const TypeSpec& type : types)
        if (type.family == fam) max_rank = std::max(max_rank, type.rank);
      if (max_rank > 0) out.push_back(recursion_report(fam, max_rank));
    }
  }
}

void run_discriminant(const SuiteConfig& cfg, const std::vector<TypeSpec>& types,
                      std::vector<CheckReport>& out) {
  if (types.empty()) throw std::invalid_argument("discriminant requires at least one --type");
  for (const TypeSpec& type : types) {
    CoxeterSystem sys = build_system(type);
    out.push_back(discriminant_report(sys, cfg.expect));
    out.push_back(definiteness_report(sys));
  }
}

void run_closure(const SuiteConfig& cfg, const std::vector<TypeSpec>& types,
                 std::vector<CheckReport>& out) {
  if (!cfg.folded.empty()) {
    if (cfg.folded != "F4" && cfg.folded != "H3" && cfg.folded != "H4")
      throw std::invalid_argument("folded source must be F4, H3 or H4");
    if (cfg.folded == "H4" && !cfg.allow_long)
      throw std::invalid_argument("the H4 closure runs for many minutes; pass --allow-long to run it");
    std::vector<Rat> points = cfg.m_values;
    if (points.empty())
      points = cfg.folded == "H4" ? std::vector<Rat>{Rat(7)} : std::vector<Rat>{Rat(5), Rat(7)};
    for (const Rat& m : points)
      out.push_back(folded_closure_report(cfg.folded, m, cfg.prime, cfg.progress_every));
    return;
  }

  if (types.empty()) throw std::invalid_argument("closure requires --type or --folded");
  for (const TypeSpec& type : types) {
    if (type.family == Family::I2) {
      out.push_back(dihedral_closure_report(type));
      continue;
    }
    CoxeterSystem sys = build_system(type);
    std::vector<Rat> points = cfg.m_values.empty() ? closure_points(type) : cfg.m_values;
    for (const Rat& m : points)
      out.push_back(closure_type_report(sys, cfg.generators, m, cfg.prime, cfg.progress_every));
  }
}

void run_all(const SuiteConfig& cfg, std::vector<CheckReport>& out) {
  for (const TypeSpec& type : ade_table()) out.push_back(counts_report(type));

  static const char* relation_scope[] = {"A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6"};
  const std::vector<TypeSpec> rel_types = make_types(relation_scope, 8);
  for (const TypeSpec& type : rel_types) {
    CoxeterSystem sys = build_system(type);
    for (const char* kind : {"holonomy", "cubic", "central", "selfadjoint"})
      for (const Rat& m : relation_points()) out.push_back(relation_report(kind, sys, m));
  }

  for (const TypeSpec& type : ade_table()) {
    if (type.family == Family::A && type.rank < 2) continue;
    CoxeterSystem sys = build_system(type);
    out.push_back(discriminant_report(sys, ""));
    out.push_back(definiteness_report(sys));
  }

  static const char* spectral_scope[] = {"A2", "A3", "A4", "A5", "D4", "D5", "E6"};
  for (const TypeSpec& type : make_types(spectral_scope, 7)) {
    CoxeterSystem sys = build_system(type);
    for (int mv : {5, 7}) {
      out.push_back(triples_report(sys, Rat(mv)));
      out.push_back(wbasis_report(sys, Rat(mv)));
      out.push_back(vanishing_report(sys, Rat(mv)));
    }
  }
  if (cfg.allow_long) {
    CoxeterSystem e8 = build_system(TypeSpec::parse("E8"));
    for (int mv : {5, 7}) {
      out.push_back(triples_report(e8, Rat(mv)));
      out.push_back(wbasis_report(e8, Rat(mv)));
    }
  }

  struct ClosureRow { const char* type; const char* set; int m; };
  static const ClosureRow closure_rows[] = {
      {"A2", "simple_reflections", 7}, {"A3", "simple_reflections", 7},
      {"A4", "simple_reflections", 8}, {"D4", "simple_reflections", 8},
      {"A4", "last_column", 8},        {"E6", "simple_reflections", 5},
  };
  for (const ClosureRow& row : closure_rows) {
    CoxeterSystem sys = build_system(TypeSpec::parse(row.type));
    out.push_back(
        closure_type_report(sys, row.set, Rat(row.m), cfg.prime, cfg.progress_every));
  }
  for (const char* source : {"F4", "H3"})
    for (int mv : {5, 7})
      out.push_back(folded_closure_report(source, Rat(mv), cfg.prime, cfg.progress_every));
  if (cfg.allow_long)
    out.push_back(folded_closure_report("H4", Rat(7), cfg.prime, cfg.progress_every));

  static const char* branch_scope[] = {"A2", "A3", "A4", "A5", "A6", "A7",
                                       "D4", "D5", "D6", "D7"};
  for (const TypeSpec& type : make_types(branch_scope, 10)) {
    CoxeterSystem sys = build_system(type);
    for (const Rat& m : branch_points(type)) out.push_back(branch_report(sys, m));
  }
  out.push_back(recursion_report(Family::A, 7));
  out.push_back(recursion_report(Family::D, 7));
}

} // namespace

SuiteResult run_suite(const SuiteConfig& cfg) {
  SuiteResult result;
  if (cfg.command == "counts") {
    for (const TypeSpec& type : cfg.types.empty() ? ade_table() : cfg.types)
      result.reports.push_back(counts_report(type));
  } else if (cfg.command == "check") {
    run_check(cfg, cfg.kind, cfg.types, result.reports);
  } else if (cfg.command == "discriminant") {
    run_discriminant(cfg, cfg.types, result.reports);
  } else if (cfg.command == "closure") {
    run_closure(cfg, cfg.types, result.reports);
  } else if (cfg.command == "all") {
    run_all(cfg, result.reports);
  } else {
    throw std::invalid_argument("unknown command: " + cfg.command);
  }
  return result;
}

} // namespace krammer
