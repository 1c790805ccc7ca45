#include "eislat/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "eislat/catalog.hpp"
#include "eislat/codes.hpp"
#include "eislat/model.hpp"
#include "eislat/plane.hpp"

namespace eislat {

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

std::string census_str(const Census& c) {
  std::string s;
  for (const auto& [k, n] : c) {
    const auto [w, x, y] = k;
    s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(w) + "," + std::to_string(x) + "," +
         std::to_string(y) + "):" + str(n);
  }
  return s;
}

std::string weights_str(const std::map<std::size_t, std::size_t>& w) {
  std::string s;
  for (const auto& [k, n] : w) s += (s.empty() ? "" : " ") + str(k) + ":" + str(n);
  return s;
}

void progress(const SuiteOptions& o, const std::string& msg) {
  if (o.progress) o.progress(msg);
}

std::vector<VerificationRecord> code_summary(const std::string& name, const Code& c, const std::string& check,
                                             const std::string& weights, const char* anchor) {
  std::vector<VerificationRecord> out;
  out.push_back(make_record("codes." + name + ".defining", "length, dimension, self-duality, minimum weight", "ok",
                            check.empty() ? "ok" : check, anchor));
  std::string got;
  try {
    got = weights_str(code_ops(c).weights);
  } catch (const std::exception& e) {
    got = e.what();
  }
  out.push_back(make_record("codes." + name + ".weights", "weight distribution", weights, got, anchor));
  return out;
}

}  // namespace

std::vector<VerificationRecord> codes_checks(const SuiteOptions& options) {
  const Plane& P = plane();
  std::vector<VerificationRecord> out;
  std::size_t four = 0;
  for (int l = 0; l < 13; ++l) four += P.points_on(l).size() == 4;
  out.push_back(make_record("codes.plane.lines", "lines with 4 points", "13", str(four), "13 points, 13 lines"));

  PlaneCodes pc = build_plane_codes(P);
  const char* a2 = "The elements of C";
  out.push_back(make_record("codes.C.dimension", "dim C", "6", std::to_string(pc.C.dimension()), a2));
  out.push_back(make_record("codes.Cperp.dimension", "dim C-perp", "7", std::to_string(pc.Cperp.dimension()), a2));
  out.push_back(make_record("codes.C.self_orthogonal", "C inside C-perp", "true", yes_no(pc.self_orthogonal), a2));
  out.push_back(make_record("codes.Cperp.lines", "C-perp spanned by the lines", "true",
                            yes_no(pc.perp_spanned_by_lines), a2));
  out.push_back(make_record("codes.C.size", "|C|", "729", str(pc.size_C), a2));
  out.push_back(make_record("codes.C.census", "classes of C by (weight, min, max of the 1 and 2 counts)",
                            "(0,0,0):1 (6,3,3):156 (9,0,9):26 (9,3,6):468 (12,6,6):78", census_str(pc.census_C), a2));
  out.push_back(make_record("codes.Cperp.census", "coordinate-sum-1 words of C-perp by (weight, #1, #2)",
                            "(4,4,0):13 (7,1,6):78 (7,4,3):234 (10,4,6):234 (10,7,3):156 (13,4,9):13 (13,13,0):1",
                            census_str(pc.census_perp_sum1), "The elements of C-perp with coordinate sum 1"));

  progress(options, "codes: standard codes");
  const StandardCodes& sc = standard_codes();
  auto t = code_summary("tetracode", sc.tetracode, check_tetracode(sc.tetracode), "0:1 3:8", "the tetracode");
  auto h = code_summary("hexacode", sc.hexacode, check_hexacode(sc.hexacode), "0:1 4:45 6:18", "the hexacode");
  Code golay(options.golay ? *options.golay : golay_generator());
  auto g = code_summary("golay", golay, check_golay(golay), "0:1 6:264 9:440 12:24", "the ternary Golay code");
  for (auto* v : {&t, &h, &g}) out.insert(out.end(), v->begin(), v->end());
  return out;
}

std::vector<VerificationRecord> y555_checks(const SuiteOptions& options) {
  const Plane& P = plane();
  std::vector<VerificationRecord> out;
  progress(options, "y555: embeddings");
  EmbeddingSummary s = analyze_embeddings(P);
  const char* anchor = "So the 16 roots for Y555 may be taken to be 16 of the point and line roots";
  out.push_back(make_record("y555.embedding_exists", "an induced color-preserving embedding exists", "true",
                            yes_no(s.count_center_black > 0), anchor));
  out.push_back(note("y555.embedding_counts", "embeddings with the center black / white",
                     str(s.count_center_black) + " / " + str(s.count_center_white)));
  out.push_back(note("y555.image_sets", "image node-sets with the center black / white",
                     str(s.image_sets_black) + " / " + str(s.image_sets_white)));
  out.push_back(make_record("y555.one_orbit", "image sets with the center black form one L3(3)-orbit", "true",
                            yes_no(s.one_orbit_black), anchor));
  out.push_back(make_record("y555.one_orbit_white", "image sets with the center white form one L3(3)-orbit", "true",
                            yes_no(s.one_orbit_white), anchor));
  out.push_back(make_record("y555.duality", "duality swaps the two families of image sets", "true",
                            yes_no(s.duality_swaps), anchor));

  progress(options, "y555: induced 11-paths");
  GraphClaims g = graph_claims(P, s.first);
  const char* a3 = "extends to a unique induced 12-cycle";
  out.push_back(note("graph.paths", "induced 11-paths up to reversal", str(g.induced_11_paths)));
  out.push_back(make_record("graph.unique_cycle", "paths with a unique induced 12-cycle extension",
                            str(g.induced_11_paths), str(g.unique_cycle), a3));
  out.push_back(make_record("graph.complement_4_path", "paths whose cycle leaves an induced 4-path",
                            str(g.induced_11_paths), str(g.complement_4_path), a3));
  out.push_back(make_record("graph.counterexample", "first failing path", "none",
                            g.counterexample.empty() ? "none" : g.counterexample, a3));
  out.push_back(make_record("graph.phi_extends", "phi extends to a color-preserving automorphism of the graph", "true",
                            yes_no(g.phi_extends), "phi extends to an automorphism"));
  out.push_back(note("graph.phi_in_l33", "that automorphism lies in L3(3)", yes_no(g.phi_in_l33)));
  out.push_back(note("graph.orbits", "orbits on induced 11-paths: L3(3) / with duality",
                     str(g.orbits_colored) + " / " + str(g.orbits_with_duality)));

  progress(options, "y555: roots");
  auto base = y555_root_checks(s.first);
  auto chain = chain_span_checks(s.first);
  out.insert(out.end(), base.begin(), base.end());
  out.insert(out.end(), chain.begin(), chain.end());

  // The same outcomes for other embeddings of both colorings.
  const ColoredGraph delta = incidence_graph(P);
  std::size_t tried = 0, same = 0;
  for (bool black : {true, false}) {
    auto es = y555_embeddings(delta, black);
    for (std::size_t i = 0; i < es.size(); i += es.size() / 3 + 1) {
      ++tried;
      auto r = y555_root_checks(es[i]);
      auto c = chain_span_checks(es[i]);
      r.insert(r.end(), c.begin(), c.end());
      std::vector<VerificationRecord> want = base;
      want.insert(want.end(), chain.begin(), chain.end());
      same += r == want;
    }
  }
  out.push_back(make_record("y555.embedding_independent", "embeddings giving identical root checks", str(tried),
                            str(same), anchor));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"codes",  "table1", "niemeier", "model",     "lemma5",
                                              "lemma7", "y555",   "null-types", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite: " + name);
  Report r;
  r.suite = name;
  r.config = options.config;
  const auto start = std::chrono::steady_clock::now();
  const bool all = name == "all";
  const std::size_t cap = options.config.enumeration_cap;
  const FMatrix* golay = options.golay ? &*options.golay : nullptr;

  if (all || name == "codes") {
    progress(options, "codes");
    r.add(codes_checks(options));
  }
  if (all || name == "table1") {
    for (auto k : {RootLatticeKind::A2, RootLatticeKind::D4, RootLatticeKind::E6, RootLatticeKind::E8}) {
      progress(options, "table1: " + to_string(k));
      r.add(verify_table1(k, options.config.closure_cap));
    }
  }
  if (all || name == "niemeier") {
    for (auto k : {NiemeierKind::A2_12, NiemeierKind::D4_6, NiemeierKind::E6_4, NiemeierKind::E8_3}) {
      progress(options, "niemeier: " + to_string(k));
      r.add(niemeier_checks(k, cap, golay));
    }
    progress(options, "niemeier: Leech quotient");
    r.add(leech_checks(cap));
  }
  if (all || name == "model") {
    progress(options, "model");
    r.add(model_checks());
  }
  if (all || name == "lemma5") {
    progress(options, "lemma5: spin scan");
    r.add(enlargement_checks(options.config.threads));
  }
  if (all || name == "lemma7") {
    progress(options, "lemma7: derivation");
    r.add(derivation_checks());
    progress(options, "lemma7: spans");
    r.add(derived_span_checks());
    progress(options, "lemma7: sixth roots");
    r.add(sixth_root_checks());
  }
  if (all || name == "y555") r.add(y555_checks(options));
  if (all || name == "null-types") {
    progress(options, "null-types");
    r.add(null_type_checks(cap));
  }
  r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace eislat
