#include "eislat/model.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "eislat/enumerate.hpp"
#include "eislat/group.hpp"

namespace eislat {

namespace {

const Eis W = Eis::omega();
const Eis WB = Eis::omega_bar();
const Eis T = Eis::theta();

std::vector<std::int64_t> key(const EVector& v) {
  std::vector<std::int64_t> k;
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    k.push_back(v(i).a());
    k.push_back(v(i).b());
  }
  return k;
}

EMatrix stack(const std::vector<EVector>& rows) {
  EMatrix m(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 14 : rows.front().cols());
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i];
  return m;
}

std::string str(std::size_t n) { return std::to_string(n); }

// Rows of C, used to test membership of residue vectors in C-perp.
const std::vector<FVector>& c_rows() {
  static const std::vector<FVector> rows = l131().codes.C.generator().row_list();
  return rows;
}

}  // namespace

const L131Model& l131() {
  static const L131Model M = [] {
    L131Model m;
    m.codes = build_plane_codes(plane());
    m.form = identity(14);
    m.form(0, 0) = Eis(-1);
    std::vector<EVector> gens;
    for (Eigen::Index k = 0; k < 14; ++k) {
      EVector v = zeros(1, 14);
      v(k) = T;
      gens.push_back(v);
    }
    for (const auto& c : m.codes.Cperp.generator().row_list()) {
      EVector v = zeros(1, 14);
      FElem s = 0;
      for (std::size_t i = 0; i < 13; ++i) {
        v(static_cast<Eigen::Index>(i + 1)) = lift(F3{c[i]});
        s = fadd(Field::F3, s, c[i]);
      }
      v(0) = lift(F3{s});
      gens.push_back(v);
    }
    m.lattice = HermitianLattice(stack(gens), m.form);
    return m;
  }();
  return M;
}

bool model_contains(const EVector& x) {
  if (x.cols() != 14) return false;
  FVector r(13);
  FElem s = 0;
  for (std::size_t i = 0; i < 13; ++i) {
    r[i] = residue_mod_theta(x(static_cast<Eigen::Index>(i + 1))).v;
    s = fadd(Field::F3, s, r[i]);
  }
  if (residue_mod_theta(x(0)).v != s) return false;
  for (const auto& c : c_rows()) {
    FElem d = 0;
    for (std::size_t i = 0; i < 13; ++i) d = fadd(Field::F3, d, fmul(Field::F3, c[i], r[i]));
    if (d != 0) return false;
  }
  return true;
}

Eis model_inner(const EVector& x, const EVector& y) {
  Eis s = -(x(0) * conj(y(0)));
  for (Eigen::Index i = 1; i < 14; ++i) s += x(i) * conj(y(i));
  return s;
}

EVector model_vector(const Eis& x0, const std::map<int, Eis>& at) {
  EVector v = zeros(1, 14);
  v(0) = x0;
  for (const auto& [p, x] : at) v(p + 1) = x;
  return v;
}

EVector point_root(int point) { return model_vector(0, {{point, T}}); }

EVector line_root(int line) {
  std::map<int, Eis> at;
  for (int p : plane().points_on(line)) at[p] = 1;
  return model_vector(1, at);
}

EVector null_rho() {
  std::map<int, Eis> at;
  for (int p = 0; p < 13; ++p) at[p] = 1;
  return model_vector(Eis(-4, -1), at);
}

std::string show(const EVector& v) {
  std::string s = "(" + to_string(v(0)) + ";";
  for (Eigen::Index i = 1; i < v.cols(); ++i) s += (i > 1 ? "," : "") + to_string(v(i));
  return s + ")";
}

std::vector<EVector> y555_roots(const Y555Embedding& e) {
  std::vector<EVector> out;
  for (int x : e.image) out.push_back(x < 13 ? point_root(x) : line_root(x - 13));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VerificationRecord> model_checks() {
  const L131Model& M = l131();
  const HermitianLattice& L = M.lattice;
  const Plane& P = plane();
  std::vector<VerificationRecord> out;

  std::vector<EVector> roots26;
  std::size_t in_L = 0, norm3 = 0, predicate = 0;
  for (int i = 0; i < 13; ++i) roots26.push_back(point_root(i));
  for (int i = 0; i < 13; ++i) roots26.push_back(line_root(i));
  for (const auto& r : roots26) {
    in_L += L.contains(r);
    predicate += model_contains(r);
    norm3 += model_norm(r) == Eis(3);
  }
  const char* anchor = "spanned by the 13 point roots and the 13 line roots";
  out.push_back(make_record("model.roots_in_L", "point and line roots in L", "26", str(in_L), anchor));
  out.push_back(make_record("model.roots_predicate", "point and line roots satisfy the congruences", "26",
                            str(predicate), anchor));
  out.push_back(make_record("model.roots_norm", "point and line roots of norm 3", "26", str(norm3), anchor));
  out.push_back(make_record("model.roots_span", "the 26 roots span L", "true", yes_no(hnf(stack(roots26)) == L.module()),
                            anchor));

  EVector t0 = model_vector(T, {});
  out.push_back(make_record("model.theta_e0", "(theta;0^13) in L", "true", yes_no(L.contains(t0)),
                            "we need to check that the image of L therein is 7-dimensional"));
  QuotientStructure q = quotient_structure(hnf(EMatrix(identity(14) * T)), L.module());
  out.push_back(make_record("model.image_dim", "L / theta E^14", "F3^7", q.field_tag,
                            "we need to check that the image of L therein is 7-dimensional"));
  out.push_back(make_record("model.theta_self_dual", "L = theta L'", "true",
                            yes_no(gram_and_integrality(L).equals_theta_dual), "L is isomorphic to L13,1"));

  std::size_t good = 0;
  for (int p = 0; p < 13; ++p)
    for (int l = 0; l < 13; ++l) {
      Eis ip = model_inner(point_root(p), line_root(l));
      good += ip == (P.on(p, l) ? T : Eis(0));
    }
  out.push_back(make_record("model.incidence", "<p,l> = theta on incident pairs, else 0", "169", str(good),
                            "according to whether the point lies on the line"));
  std::size_t orth = 0;
  for (int p = 0; p < 13; ++p)
    for (int q2 = p + 1; q2 < 13; ++q2) orth += model_inner(point_root(p), point_root(q2)).is_zero();
  out.push_back(make_record("model.points_orthogonal", "pairs of distinct point roots orthogonal", "78", str(orth),
                            "any two point roots are orthogonal"));
  std::size_t preserved = 0;
  for (const auto& r : roots26) {
    ScaledEMatrix img = L.basis() * triflection(M.form, ScaledEVector(r, 1));
    bool ok = true;
    for (Eigen::Index i = 0; ok && i < img.num.rows(); ++i)
      ok = L.contains(ScaledEVector(EVector(img.num.row(i)), img.den));
    preserved += ok;
  }
  out.push_back(make_record("model.triflections_preserve", "triflections in the 26 roots preserve L", "26",
                            str(preserved), "triflections in roots preserve L"));
  Signature s = signature(L);
  out.push_back(make_record("model.signature", "signature of L", "(13,1,0)",
                            "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
                                std::to_string(s.zero) + ")",
                            "signature (13,1)"));

  const EVector rho = null_rho();
  auto c = L.coords(rho);
  out.push_back(make_record("model.rho", "rho in L, null, primitive", "true",
                            yes_no(c && model_norm(rho).is_zero() && unit_index(vector_gcd(*c).g) >= 0),
                            "primitive null vector (-4-w;1^13)"));
  return out;
}

std::vector<VerificationRecord> y555_root_checks(const Y555Embedding& e) {
  const L131Model& M = l131();
  const ColoredGraph d = y555_diagram(e.center_black);
  const auto r = y555_roots(e);
  std::vector<VerificationRecord> out;
  EMatrix gram(16, 16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) gram(i, j) = model_inner(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
  out.push_back(make_record("y555.gram_rank", "rank of the 16-root Gram matrix", "14", std::to_string(rank(gram)),
                            "turns out to have rank 14"));
  out.push_back(make_record("y555.roots_rank", "rank of the 16 roots", "14", std::to_string(rank(stack(r))),
                            "so V must have dimension 14"));

  std::size_t inner_ok = 0, relation_ok = 0, braid = 0, commute = 0;
  std::vector<ScaledEMatrix> tri;
  for (const auto& x : r) tri.push_back(triflection(M.form, ScaledEVector(x, 1)));
  std::string bad;
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j) {
      const bool joined = d.adjacent(i, j);
      const Eis ip = gram(i, j);
      const bool black = d.color[static_cast<std::size_t>(i)] == 0;
      const Eis want = joined ? (black ? T : -T) : Eis(0);
      inner_ok += ip == want;
      const ScaledEMatrix &A = tri[static_cast<std::size_t>(i)], &B = tri[static_cast<std::size_t>(j)];
      bool rel = joined ? (A * B * A == B * A * B) && !(A * B == B * A) : (A * B == B * A);
      relation_ok += rel;
      (joined ? braid : commute) += 1;
      if ((!rel || !(ip == want)) && bad.empty()) bad = std::to_string(i) + "-" + std::to_string(j);
    }
  out.push_back(make_record("y555.inner_products", "pairs with <ri,rj> = +-theta (joined, by color) or 0", "120",
                            str(inner_ok), "when gi and gj braid and gi is black"));
  out.push_back(make_record("y555.relations", "pairs satisfying ABA=BAB (joined) or AB=BA (unjoined)", "120",
                            str(relation_ok), "braid or commute"));
  out.push_back(note("y555.pair_split", "joined / unjoined pairs", str(braid) + " / " + str(commute)));

  std::vector<EVector> all26;
  for (int i = 0; i < 13; ++i) all26.push_back(point_root(i));
  for (int i = 0; i < 13; ++i) all26.push_back(line_root(i));
  out.push_back(make_record("y555.all_roots_rank", "rank of all 26 point and line roots", "14",
                            std::to_string(rank(stack(all26)))));
  return out;
}

std::vector<VerificationRecord> chain_span_checks(const Y555Embedding& e) {
  const L131Model& M = l131();
  const auto r = y555_roots(e);
  std::vector<EVector> er, fr;
  for (int i : y555_chain_E()) er.push_back(r[static_cast<std::size_t>(i)]);
  for (int i : y555_chain_F()) fr.push_back(r[static_cast<std::size_t>(i)]);
  HermitianLattice LE(stack(er), M.form), LF(stack(fr), M.form);
  std::vector<VerificationRecord> out;
  const char* anchor = "the roots of E span a copy of L9,1 and those of F a copy of E8";

  Signature se = signature(LE);
  out.push_back(make_record("chain.E_rank", "rank of span(E)", "10", std::to_string(LE.rank()), anchor));
  out.push_back(make_record("chain.E_signature", "signature of span(E)", "(9,1)",
                            "(" + std::to_string(se.positive) + "," + std::to_string(se.negative) + ")", anchor));
  GramInfo ge = gram_and_integrality(LE);
  out.push_back(make_record("chain.E_theta_self_dual", "span(E) = theta span(E)'", "true", yes_no(ge.equals_theta_dual),
                            anchor));
  Signature sf = signature(LF);
  out.push_back(make_record("chain.F_rank", "rank of span(F)", "4", std::to_string(LF.rank()), anchor));
  out.push_back(make_record("chain.F_definite", "signature of span(F)", "(4,0)",
                            "(" + std::to_string(sf.positive) + "," + std::to_string(sf.negative) + ")", anchor));
  out.push_back(make_record("chain.F_theta_self_dual", "span(F) = theta span(F)'", "true",
                            yes_no(gram_and_integrality(LF).equals_theta_dual), anchor));
  out.push_back(make_record("chain.F_roots", "roots of span(F)", "240", str(roots(LF).size()), anchor));
  std::size_t orth = 0;
  for (const auto& x : er)
    for (const auto& y : fr) orth += model_inner(x, y).is_zero();
  out.push_back(make_record("chain.E_perp_F", "E-roots orthogonal to F-roots", "44", str(orth), "not joined to it"));
  out.push_back(make_record("chain.span_L", "span(E and F) = L", "true",
                            yes_no(sum(LE.module(), LF.module()) == M.lattice.module()),
                            "so together they span L"));
  return out;
}

// ---------------------------------------------------------------------------

EnlargementScan enlargement_scan(unsigned threads) {
  const auto gens = l33_generators(plane());
  const Code& C = l131().codes.C;
  Subspace Z(Field::F3, 13);
  for (std::size_t i = 0; i < 12; ++i) {
    FVector v(13, 0);
    v[i] = 1;
    v[12] = 2;
    Z.insert(v);
  }
  Subspace Cs(Field::F3, 13);
  for (const auto& r : C.generator().row_list()) Cs.insert(r);
  EnlargementScan s;
  auto fail = [&](const std::string& what, const FVector& v) {
    ++s.failures;
    if (s.witness.empty()) s.witness = what + " " + to_string(Field::F3, v);
  };
  // C and Z are invariant, so spins stay inside them and equality is a
  // dimension count.
  for (const auto& g : gens) {
    for (const auto& b : Cs.basis())
      if (!Cs.contains(permute(g, b))) fail("C not invariant at", b);
    for (const auto& b : Z.basis())
      if (!Z.contains(permute(g, b))) fail("Z not invariant at", b);
  }
  for (const auto& b : Cs.basis())
    if (!Z.contains(b)) fail("C not inside Z at", b);

  // Lines of C.
  for (const auto& v : enumerate_span(C.generator())) {
    auto nz = std::find_if(v.begin(), v.end(), [](FElem x) { return x != 0; });
    if (nz == v.end() || *nz != 1) continue;
    ++s.lines_in_C;
    if (spin(Field::F3, v, gens).dimension() != 6) fail("spin of C-line", v);
  }
  // Complement of C in Z, for coset representatives.
  std::vector<FVector> comp;
  {
    Subspace t = Cs;
    for (const auto& b : Z.basis())
      if (t.insert(b)) comp.push_back(b);
  }
  FMatrix cm(Field::F3, comp, 13);
  for (const auto& v : enumerate_span(cm)) {
    auto nz = std::find_if(v.begin(), v.end(), [](FElem x) { return x != 0; });
    if (nz == v.end() || *nz != 1) continue;
    ++s.lines_in_quotient;
    std::vector<FVector> seeds = Cs.basis();
    seeds.push_back(v);
    if (spin(Field::F3, 13, seeds, gens).dimension() != 12) fail("spin of Z/C-line", v);
  }

  // Lines of Z outside C, one representative per line: coefficient vectors
  // over the basis of Z whose first nonzero entry is 1.
  const auto& zb = Z.basis();
  std::size_t total = 1;
  for (std::size_t i = 0; i < zb.size(); ++i) total *= 3;
  threads = std::max(1u, threads);
  std::vector<std::size_t> lines(threads, 0), fails(threads, 0), first(threads, total);
  auto work = [&](unsigned t) {
    std::vector<FElem> k(zb.size());
    for (std::size_t idx = t; idx < total; idx += threads) {
      std::size_t x = idx;
      for (std::size_t i = 0; i < zb.size(); ++i) {
        k[i] = static_cast<FElem>(x % 3);
        x /= 3;
      }
      auto nz = std::find_if(k.begin(), k.end(), [](FElem c) { return c != 0; });
      if (nz == k.end() || *nz != 1) continue;
      FVector v(13, 0);
      for (std::size_t i = 0; i < zb.size(); ++i)
        if (k[i])
          for (std::size_t j = 0; j < 13; ++j) v[j] = fadd(Field::F3, v[j], fmul(Field::F3, k[i], zb[i][j]));
      if (Cs.contains(v)) continue;
      ++lines[t];
      if (spin(Field::F3, v, gens).dimension() != 12) {
        ++fails[t];
        first[t] = std::min(first[t], idx);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  std::size_t min_fail = total;
  for (unsigned t = 0; t < threads; ++t) {
    s.lines_outside_C += lines[t];
    s.failures += fails[t];
    min_fail = std::min(min_fail, first[t]);
  }
  if (min_fail < total && s.witness.empty()) s.witness = "spin of Z-line with coefficient index " + str(min_fail);
  return s;
}

std::vector<VerificationRecord> enlargement_checks(unsigned threads) {
  std::vector<VerificationRecord> out;
  // M = coordinate-sum-zero vectors of (theta E)^13.
  EMatrix g = zeros(12, 13);
  for (Eigen::Index i = 0; i < 12; ++i) {
    g(i, i) = T;
    g(i, 12) = -T;
  }
  HermitianLattice Mlat(g, identity(13));
  EMatrix z = zeros(12, 13);
  for (Eigen::Index i = 0; i < 12; ++i) {
    z(i, i) = 1;
    z(i, 12) = -1;
  }
  HermitianLattice Z0(z, identity(13));
  HermitianLattice dual = theta_dual(Mlat);
  const char* anchor = "Z is the coordinate-sum-zero subspace";
  out.push_back(make_record("enlarge.Z0_in_dual", "sum-zero vectors of E^13 lie in theta M'", "true",
                            yes_no(dual.contains(Z0)), anchor));
  out.push_back(make_record("enlarge.Z_structure", "sum-zero vectors of E^13 modulo M", "F3^12",
                            quotient_structure(Mlat.module(), Z0.module()).field_tag, anchor));
  out.push_back(note("enlarge.prime_to_3", "order of theta M' modulo the sum-zero vectors of E^13",
                     std::to_string(quotient_structure(Z0.module(), dual.module()).order)));

  EnlargementScan s = enlargement_scan(threads);
  const char* a2 = "unique nontrivial L3(3)-invariant subspace";
  out.push_back(make_record("enlarge.lines_C", "lines of C scanned", "364", str(s.lines_in_C), a2));
  out.push_back(make_record("enlarge.lines_quotient", "lines of Z/C scanned", "364", str(s.lines_in_quotient), a2));
  out.push_back(make_record("enlarge.lines_outside", "lines of Z outside C scanned", "265356", str(s.lines_outside_C),
                            a2));
  out.push_back(make_record("enlarge.failures", "seeds whose spin is not C, Z/C or Z as required", "0",
                            str(s.failures) + (s.witness.empty() ? "" : " (" + s.witness + ")"), a2));
  return out;
}

// ---------------------------------------------------------------------------

std::string Pattern::str() const {
  std::string s = "(" + to_string(x0) + ";";
  for (std::size_t i = 0; i < values.size(); ++i)
    s += (i ? " " : "") + to_string(values[i].first) + "^" + std::to_string(values[i].second);
  return s + ")";
}

std::vector<EVector> placements(const Pattern& p) {
  int total = 0;
  for (const auto& [v, n] : p.values) total += n;
  if (total != 13) throw std::invalid_argument("placements: pattern does not have 13 coordinates");
  std::vector<int> labels;
  for (std::size_t i = 0; i < p.values.size(); ++i)
    for (int k = 0; k < p.values[i].second; ++k) labels.push_back(static_cast<int>(i));
  std::sort(labels.begin(), labels.end());
  std::vector<EVector> out;
  do {
    EVector v = zeros(1, 14);
    v(0) = p.x0;
    for (std::size_t i = 0; i < 13; ++i) v(static_cast<Eigen::Index>(i + 1)) = p.values[static_cast<std::size_t>(labels[i])].first;
    if (model_contains(v)) out.push_back(v);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::optional<EVector> normalize_monomial(const EVector& v, const Eis& x0) {
  for (const Eis& u : units()) {
    if (!(u * v(0) == x0)) continue;
    EVector w = v;
    w(0) = x0;
    bool ok = true;
    for (Eigen::Index i = 1; ok && i < v.cols(); ++i) {
      Eis c = u * v(i);
      ok = false;
      for (const Eis& z : {Eis(1), W, WB}) {
        Eis d = z * c;
        if (d.is_zero() || d == Eis(1) || d == Eis(-1)) {
          w(i) = d;
          ok = true;
          break;
        }
      }
    }
    if (ok) return w;
  }
  return std::nullopt;
}

namespace {

// First assignment of units to the free points (in units() order) making a a
// root of L with <a,b> = want.
EVector solve(const Eis& x0, std::map<int, Eis> fixed, const std::vector<int>& free, const EVector& b, const Eis& want) {
  const std::size_t k = free.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 6;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t x = idx;
    std::vector<std::size_t> digits(k);
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = x % 6;
      x /= 6;
    }
    for (std::size_t i = 0; i < k; ++i) fixed[free[i]] = units()[digits[i]];
    EVector a = model_vector(x0, fixed);
    if (model_contains(a) && model_norm(a) == Eis(3) && model_inner(a, b) == want) return a;
  }
  throw std::logic_error("derivation: no witness for the free coordinates");
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

struct Lines {
  int l1, l2, l3, l4;  // four lines through P
  int P;
  int m;  // a line not through P
};

Lines fixed_lines() {
  const Plane& Pl = plane();
  Lines L{};
  L.l1 = 0;
  L.l2 = 1;
  L.P = Pl.meet(L.l1, L.l2);
  auto through = Pl.lines_through(L.P);
  auto rest = minus(through, {L.l1, L.l2});
  L.l3 = rest[0];
  L.l4 = rest[1];
  for (int l = 0; l < 13; ++l)
    if (!Pl.on(L.P, l)) {
      L.m = l;
      break;
    }
  return L;
}

std::vector<int> positions(const EVector& v, const Eis& value) {
  std::vector<int> out;
  for (Eigen::Index i = 1; i < v.cols(); ++i)
    if (v(i) == value) out.push_back(static_cast<int>(i - 1));
  return out;
}

}  // namespace

std::vector<DerivationStep> derivation_steps() {
  const Plane& Pl = plane();
  const Lines L = fixed_lines();
  std::vector<DerivationStep> steps;
  auto on = [&](int line) { return Pl.points_on(line); };
  auto sum = [](const EVector& a, const EVector& b) { return EVector(a + b); };

  // Step 1: b a line root, a = (-w; -1 on another line).
  {
    DerivationStep s;
    s.name = "step1";
    s.b = line_root(L.l1);
    std::map<int, Eis> at;
    for (int p : on(L.l2)) at[p] = -1;
    s.a = model_vector(-W, at);
    s.expected_inner = W - Eis(1);
    s.family = {T, {{1, 3}, {-1, 3}, {0, 7}}};
    steps.push_back(s);
  }
  // Step 2: b from step 1; the ?'s on a line meeting a 1 and a -1 of b.
  {
    DerivationStep s;
    s.name = "step2";
    s.b = *normalize_monomial(sum(steps[0].a, steps[0].b), T);
    const int A = Pl.meet(L.m, L.l1), B = Pl.meet(L.m, L.l2);
    s.expected_inner = W - Eis(1);
    s.a = solve(1, {{A, WB}, {B, 1}}, minus(on(L.m), {A, B}), s.b, s.expected_inner);
    s.family = {2, {{-1, 4}, {1, 3}, {0, 6}}};
    steps.push_back(s);
  }
  // Step 3: b a line root, a = (1; w at the meeting point, ? on the rest of another line).
  {
    DerivationStep s;
    s.name = "step3";
    s.b = line_root(L.l1);
    s.expected_inner = W - Eis(1);
    s.a = solve(1, {{L.P, W}}, minus(on(L.l2), {L.P}), s.b, s.expected_inner);
    s.family = {2, {{1, 6}, {-1, 1}, {0, 6}}};
    steps.push_back(s);
  }
  const EVector b4 = *normalize_monomial(sum(steps[2].a, steps[2].b), 2);
  // Step 4: a = (-wb; -w at the -1 of b, ? on a third line through it).
  {
    DerivationStep s;
    s.name = "step4";
    s.b = b4;
    s.expected_inner = WB - Eis(1);
    s.a = solve(-WB, {{L.P, -W}}, minus(on(L.l3), {L.P}), s.b, s.expected_inner);
    s.family = {Eis(2) - WB, {{-1, 3}, {0, 3}, {1, 7}}};
    steps.push_back(s);
  }
  // Step 5: b from step 4; a on a line through one -1, one 0 and two 1's of b.
  {
    DerivationStep s;
    s.name = "step5";
    s.b = *normalize_monomial(sum(steps[3].a, steps[3].b), Eis(2) - WB);
    const int X = Pl.meet(L.m, L.l3), Y = Pl.meet(L.m, L.l4);
    std::map<int, Eis> at{{X, 1}, {Y, W}};
    for (int p : minus(on(L.m), {X, Y})) at[p] = W;
    s.a = model_vector(W, at);
    s.expected_inner = WB - Eis(1);
    s.family = {Eis(2) + T, {{-1, 4}, {1, 6}, {0, 3}}};
    steps.push_back(s);
  }
  // Conjugate variant of step 4, landing in the class of 2 + theta.
  {
    DerivationStep s;
    s.name = "step4c";
    s.b = b4;
    s.expected_inner = W - Eis(1);
    s.a = solve(-W, {{L.P, -WB}}, minus(on(L.l3), {L.P}), s.b, s.expected_inner);
    s.family = {Eis(2) - W, {{1, 7}, {-1, 3}, {0, 3}}};
    steps.push_back(s);
  }
  return steps;
}

const RootBatches& root_batches() {
  static const RootBatches B = [] {
    const Plane& Pl = plane();
    RootBatches b;
    for (int i = 0; i < 13; ++i)
      for (int j = 0; j < 13; ++j) {
        if (i == j) continue;
        const int P = Pl.meet(i, j);
        std::map<int, Eis> at;
        for (int p = 0; p < 13; ++p) at[p] = -1;
        for (int p : Pl.points_on(i))
          if (p != P) at[p] = 0;
        for (int p : Pl.points_on(j))
          if (p != P) at[p] = WB;
        b.first.push_back(model_vector(Eis(2) + T, at));
        b.first_lines.emplace_back(i, j);
      }
    for (int x = 0; x < 13; ++x)
      for (int y = x + 1; y < 13; ++y)
        for (int z = y + 1; z < 13; ++z) {
          const int lxy = Pl.join(x, y);
          if (Pl.on(z, lxy)) continue;
          std::map<int, Eis> at;
          for (int p = 0; p < 13; ++p) at[p] = WB;
          for (int l : {lxy, Pl.join(y, z), Pl.join(x, z)})
            for (int p : Pl.points_on(l)) at[p] = 0;
          for (int p : {x, y, z}) at[p] = -1;
          b.second.push_back(model_vector(-Eis(2) * WB, at));
        }
    return b;
  }();
  return B;
}

namespace {

bool collinear(const std::vector<int>& pts) {
  const Plane& Pl = plane();
  for (int l = 0; l < 13; ++l)
    if (std::all_of(pts.begin(), pts.end(), [&](int p) { return Pl.on(p, l); })) return true;
  return false;
}

// Points on the three sides of a triangle, without its vertices.
std::vector<int> triangle_edges(const std::vector<int>& v) {
  const Plane& Pl = plane();
  std::set<int> e;
  for (int l : {Pl.join(v[0], v[1]), Pl.join(v[1], v[2]), Pl.join(v[0], v[2])})
    for (int p : Pl.points_on(l)) e.insert(p);
  for (int p : v) e.erase(p);
  return {e.begin(), e.end()};
}

// The geometric description attached to each family.
bool described(const std::string& step, const EVector& v) {
  const Plane& Pl = plane();
  auto ones = positions(v, 1), negs = positions(v, -1), zer = positions(v, 0);
  if (step == "step1") return collinear(ones) && collinear(negs);
  if (step == "step2") return !collinear(ones) && triangle_edges(ones) == zer;
  if (step == "step3") {
    if (negs.size() != 1) return false;
    std::set<int> cover;
    int lines = 0;
    for (int l : Pl.lines_through(negs[0])) {
      auto pts = Pl.points_on(l);
      if (std::all_of(pts.begin(), pts.end(), [&](int p) { return p == negs[0] || v(p + 1) == Eis(1); })) {
        ++lines;
        cover.insert(pts.begin(), pts.end());
      }
    }
    cover.erase(negs[0]);
    return lines == 2 && std::vector<int>(cover.begin(), cover.end()) == ones;
  }
  if (step == "step4" || step == "step4c") return collinear(negs) && collinear(zer);
  if (step == "step5") return !collinear(zer) && triangle_edges(zer) == ones;
  return false;
}

bool same_values(const EVector& v, const Eis& x0, std::vector<Eis> want) {
  if (!(v(0) == x0)) return false;
  std::vector<Eis> got;
  for (Eigen::Index i = 1; i < v.cols(); ++i) got.push_back(v(i));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

std::vector<Eis> repeat(std::initializer_list<std::pair<Eis, int>> parts) {
  std::vector<Eis> out;
  for (const auto& [x, n] : parts) out.insert(out.end(), static_cast<std::size_t>(n), x);
  return out;
}

}  // namespace

std::vector<VerificationRecord> derivation_checks() {
  const L131Model& M = l131();
  const HermitianLattice& L = M.lattice;
  std::vector<VerificationRecord> out;
  const auto steps = derivation_steps();
  std::map<std::string, std::set<std::vector<std::int64_t>>> families;
  const Eis wm1 = W - Eis(1), wbm1 = WB - Eis(1);

  for (const auto& s : steps) {
    const std::string id = "derive." + s.name;
    const char* anchor = "then a+b is a root and R has it too";
    const EVector ab = s.a + s.b;
    out.push_back(note(id + ".witness", "a, b", show(s.a) + ", " + show(s.b)));
    bool roots_ok = L.contains(s.a) && L.contains(s.b) && model_norm(s.a) == Eis(3) && model_norm(s.b) == Eis(3);
    out.push_back(make_record(id + ".roots", "a and b are roots of L", "true", yes_no(roots_ok), anchor));
    const Eis ip = model_inner(s.a, s.b);
    out.push_back(make_record(id + ".inner", "<a,b>", to_string(s.expected_inner), to_string(ip), anchor));
    out.push_back(make_record(id + ".inner_allowed", "<a,b> is w-1 or wb-1", "true", yes_no(ip == wm1 || ip == wbm1),
                              anchor));
    out.push_back(make_record(id + ".sum_root", "a+b is a root of L", "true",
                              yes_no(L.contains(ab) && model_norm(ab) == Eis(3)), anchor));
    ScaledEMatrix Ta = triflection(M.form, ScaledEVector(s.a, 1)), Tb = triflection(M.form, ScaledEVector(s.b, 1));
    MatrixGroup g = closure_group(std::vector<ScaledEMatrix>{Ta, Tb}, 1000);
    out.push_back(make_record(id + ".closure", "order of the group of T_a and T_b", "24", str(g.order), anchor));
    out.push_back(make_record(id + ".closure_has_sum", "T_(a+b) lies in that group", "true",
                              yes_no(g.contains(triflection(M.form, ScaledEVector(ab, 1)))), anchor));

    auto fam = placements(s.family);
    auto& set = families[s.name];
    for (const auto& v : fam) set.insert(key(v));
    std::size_t described_ok = 0;
    for (const auto& v : fam) described_ok += described(s.name, v);
    out.push_back(note(id + ".family_size", "placements of " + s.family.str() + " in L", str(fam.size())));
    out.push_back(make_record(id + ".family_described", "placements matching the stated geometry", str(fam.size()),
                              str(described_ok), "with the 1's collinear and the -1's collinear"));
    auto n = normalize_monomial(ab, s.family.x0);
    out.push_back(make_record(id + ".provides", "a+b is a scalar and cube-root multiple of a family member", "true",
                              yes_no(n && set.count(key(*n)) > 0), "R has the roots"));
  }
  // b of steps 2, 4, 5 comes from earlier families.
  auto member = [&](const std::string& f, const EVector& v) { return families[f].count(key(v)) > 0; };
  out.push_back(make_record("derive.chain", "b of steps 2, 4, 5 lies in the families of steps 1, 3, 4", "true",
                            yes_no(member("step1", steps[1].b) && member("step3", steps[3].b) &&
                                   member("step4", steps[4].b)),
                            "from step"));

  // The two batches.
  const RootBatches& B = root_batches();
  const EVector rho = null_rho();
  auto batch_checks = [&](const std::string& name, const std::vector<EVector>& rs, const Pattern& pat,
                          std::size_t count, const Eis& sum_x0, const std::vector<Eis>& sum_values) {
    std::set<std::vector<std::int64_t>> keys;
    for (const auto& r : rs) keys.insert(key(r));
    std::set<std::vector<std::int64_t>> decoded;
    for (const auto& r : placements(pat)) decoded.insert(key(r));
    const char* anchor = "Checking <r,rho>=theta is just a computation";
    out.push_back(make_record("batch." + name + ".count", "distinct roots generated", str(count), str(keys.size()),
                              "one of the 156 roots ... one of the 234 roots"));
    out.push_back(make_record("batch." + name + ".decoded", "generated set equals the placements decoded from C-perp",
                              "true", yes_no(keys == decoded), "comparing with the list of elements of C-perp"));
    std::size_t ok = 0, theta = 0, sum_ok = 0, form_ok = 0;
    for (const auto& r : rs) {
      ok += L.contains(r) && model_contains(r) && model_norm(r) == Eis(3);
      theta += model_inner(r, rho) == T;
      EVector s = rho + r;
      sum_ok += L.contains(s) && model_norm(s) == Eis(3);
      form_ok += same_values(s, sum_x0, sum_values);
    }
    out.push_back(make_record("batch." + name + ".roots", "roots of L", str(count), str(ok), anchor));
    out.push_back(make_record("batch." + name + ".inner_rho", "<r,rho> = theta", str(count), str(theta), anchor));
    out.push_back(make_record("batch." + name + ".rho_plus_r", "rho+r is a root of L", str(count), str(sum_ok),
                              "R contains the triflections in r and rho+r"));
    out.push_back(make_record("batch." + name + ".rho_plus_r_form", "rho+r has the stated coordinates", str(count),
                              str(form_ok), "rho+r="));
  };
  batch_checks("first", B.first, {Eis(2) + T, {{0, 3}, {WB, 3}, {-1, 7}}}, 156, conj(T) * WB,
               repeat({{1, 3}, {-W, 3}, {0, 7}}));
  batch_checks("second", B.second, {-Eis(2) * WB, {{WB, 4}, {-1, 3}, {0, 6}}}, 234, Eis(-2) + W,
               repeat({{-W, 4}, {0, 3}, {1, 6}}));

  // Which steps provide the batches.
  auto provided = [&](const std::vector<EVector>& rs, bool plus_rho, const std::string& fam, const Eis& x0) {
    std::size_t n = 0;
    for (const auto& r : rs) {
      auto v = normalize_monomial(plus_rho ? EVector(rho + r) : r, x0);
      n += v && member(fam, *v);
    }
    return n;
  };
  const Pattern& f4 = steps[3].family;
  out.push_back(note("batch.first.by_step4", "first-batch r that are scalar and cube-root multiples of step-4 roots",
                     str(provided(B.first, false, "step4", f4.x0))));
  out.push_back(make_record("batch.first.by_step4c", "first-batch r provided by the conjugate step 4", "156",
                            str(provided(B.first, false, "step4c", steps[5].family.x0)), "R has r by step 4"));
  out.push_back(make_record("batch.first.sum_by_step1", "first-batch rho+r provided by step 1", "156",
                            str(provided(B.first, true, "step1", T)), "rho+r ... by step 1"));
  out.push_back(make_record("batch.second.by_step2", "second-batch r provided by step 2", "234",
                            str(provided(B.second, false, "step2", 2)), "R has r by step 2"));
  out.push_back(make_record("batch.second.sum_by_step5", "second-batch rho+r provided by step 5", "234",
                            str(provided(B.second, true, "step5", Eis(2) + T)), "rho+r ... by step 5"));
  return out;
}

std::vector<VerificationRecord> derived_span_checks() {
  const L131Model& M = l131();
  const HermitianLattice& L = M.lattice;
  const Plane& Pl = plane();
  const RootBatches& B = root_batches();
  std::vector<VerificationRecord> out;

  std::map<std::pair<int, int>, EVector> r;
  for (std::size_t i = 0; i < B.first.size(); ++i) r[B.first_lines[i]] = B.first[i];
  std::map<std::pair<int, int>, EVector> delta;
  std::size_t form_ok = 0, norm6 = 0, antisym = 0;
  for (const auto& [ij, v] : r) {
    const auto [i, j] = ij;
    EVector d = -W * EVector(v - r.at({j, i}));
    delta[ij] = d;
    const int P = Pl.meet(i, j);
    std::map<int, Eis> at;
    for (int p : Pl.points_on(i))
      if (p != P) at[p] = 1;
    for (int p : Pl.points_on(j))
      if (p != P) at[p] = -1;
    form_ok += d == model_vector(0, at);
    norm6 += model_norm(d) == Eis(6);
  }
  for (const auto& [ij, d] : delta) antisym += EVector(-d) == delta.at({ij.second, ij.first});
  const char* anchor = "|delta_ij|^2=6, <delta_ij,delta_jk>=-3";
  out.push_back(make_record("span.delta_form", "delta_ij = (0;1^3,-1^3,0^7) on l_i, l_j off their meet", "156",
                            str(form_ok), "delta_ij=-w(r_ij-r_ji)=(0;1^3,-1^3,0^7)"));
  out.push_back(make_record("span.delta_norm", "|delta_ij|^2 = 6", "156", str(norm6), anchor));
  out.push_back(make_record("span.delta_antisym", "delta_ij = -delta_ji", "156", str(antisym), anchor));
  std::size_t adj = 0, adj_n = 0, far = 0, far_n = 0;
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j)
      for (int k = 0; k < 13; ++k) {
        if (i == j || j == k || i == k) continue;
        ++adj_n;
        adj += model_inner(delta.at({i, j}), delta.at({j, k})) == Eis(-3);
        for (int l = 0; l < 13; ++l) {
          if (l == i || l == j || l == k) continue;
          ++far_n;
          far += model_inner(delta.at({i, j}), delta.at({k, l})).is_zero();
        }
      }
  out.push_back(make_record("span.delta_adjacent", "<delta_ij,delta_jk> = -3 over distinct i,j,k", str(adj_n), str(adj),
                            anchor));
  out.push_back(make_record("span.delta_disjoint", "<delta_ij,delta_kl> = 0 over distinct i,j,k,l", str(far_n),
                            str(far), "<delta_ij,delta_kl>=0"));

  std::size_t strict = 0, strict_n = 0;
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j)
      for (int k = 0; k < 13; ++k) {
        if (i == j || j == k || i == k || Pl.meet(i, j) == Pl.meet(j, k)) continue;
        ++strict_n;
        Eis x = model_inner(EVector(r.at({i, j}) - r.at({j, k})), delta.at({i, k}));
        strict += !divides(Eis(3), x);
      }
  out.push_back(make_record("span.strict", "<r_ij - r_jk, delta_ik> not in 3E for general lines", str(strict_n),
                            str(strict), "computation shows that"));

  std::vector<EVector> diffs, deltas, all_diffs;
  for (const auto& v : B.first) diffs.push_back(v - B.first[0]);
  for (const auto& [ij, d] : delta) deltas.push_back(d);
  all_diffs = diffs;
  for (const auto& v : B.second) all_diffs.push_back(v - B.first[0]);
  EModule N = hnf(stack(diffs)), Md = hnf(stack(deltas)), full = hnf(stack(all_diffs));

  // X = {(0;x) in L : sum x = 0}.
  EMatrix cond = zeros(14, 2);
  cond(0, 0) = 1;
  for (Eigen::Index i = 1; i < 14; ++i) cond(i, 1) = 1;
  if (L.basis().den != 1) throw std::logic_error("derived_span_checks: unexpected denominators");
  EMatrix kernel = left_kernel(multiply(L.basis().num, cond));
  EModule X = hnf(multiply(kernel, L.basis().num));
  HermitianLattice perp = orth_complement(L, {ScaledEVector(null_rho(), 1)});

  out.push_back(make_record("span.M_in_N", "span(delta) inside N", "true", yes_no(contains(N, Md)), "N contains"));
  out.push_back(make_record("span.N_strict", "N strictly larger than span(delta)", "true", yes_no(!contains(Md, N)),
                            "N is strictly larger than M"));
  out.push_back(make_record("span.N_eq_X", "N = X", "true", yes_no(N == X), "conclude ... that N=X"));
  out.push_back(make_record("span.full", "differences of all 390 roots span rho-perp in L", "true",
                            yes_no(full == perp.module()), "The differences of these 390 roots span rho-perp"));
  out.push_back(note("span.ranks", "ranks of span(delta), N, X, rho-perp",
                     std::to_string(Md.rank()) + ", " + std::to_string(N.rank()) + ", " + std::to_string(X.rank()) +
                         ", " + std::to_string(perp.rank())));
  return out;
}

// ---------------------------------------------------------------------------

bool is_primitive_sixth_root(const Eis& z) { return z == -W || z == -WB; }

SixthRoot sixth_root(const EVector& r) {
  const L131Model& M = l131();
  const EVector rho = null_rho();
  ScaledEMatrix Tr = triflection(M.form, ScaledEVector(r, 1));
  ScaledEMatrix Ts = triflection(M.form, ScaledEVector(EVector(rho + r), 1));
  auto eigen = [&](const ScaledEMatrix& m) -> std::optional<Eis> {
    ScaledEVector img = ScaledEVector(rho, 1) * m;
    for (const Eis& u : units())
      if (img == ScaledEVector(EVector(rho * u), 1)) return u;
    return std::nullopt;
  };
  // Rows act on the right, so Tr * Ts applies Tr first.
  return {eigen(Tr * Ts), eigen(Ts * Tr)};
}

std::vector<VerificationRecord> sixth_root_checks() {
  const RootBatches& B = root_batches();
  const EVector rho = null_rho();
  std::vector<VerificationRecord> out;
  auto zs = [](const std::optional<Eis>& z) { return z ? to_string(*z) : std::string("none"); };
  const std::vector<std::pair<std::string, EVector>> cases{
      {"point_root", point_root(0)}, {"first_batch", B.first[0]}, {"second_batch", B.second[0]}};
  for (const auto& [name, r] : cases) {
    const std::string id = "sixth." + name;
    const char* anchor = "multiplying rho by a primitive 6th root of unity";
    out.push_back(make_record(id + ".pre", "<r,rho> = theta, r and rho+r roots", "true",
                              yes_no(model_inner(r, rho) == T && model_norm(r) == Eis(3) &&
                                     model_norm(EVector(rho + r)) == Eis(3) && l131().lattice.contains(EVector(rho + r))),
                              anchor));
    SixthRoot z = sixth_root(r);
    out.push_back(note(id + ".r_first", "T_r then T_(rho+r): rho -> zeta rho", zs(z.zeta_r_first)));
    out.push_back(note(id + ".sum_first", "T_(rho+r) then T_r: rho -> zeta rho", zs(z.zeta_sum_first)));
    bool ok = (z.zeta_r_first && is_primitive_sixth_root(*z.zeta_r_first)) ||
              (z.zeta_sum_first && is_primitive_sixth_root(*z.zeta_sum_first));
    out.push_back(make_record(id + ".primitive", "some composition order gives a primitive 6th root", "true", yes_no(ok),
                              anchor));
    for (const Eis& u : units()) {
      if (u == Eis(1)) continue;
      const EVector ur = r * u;
      if (!(model_norm(EVector(rho + ur)) == Eis(3))) {
        out.push_back(note(id + ".unit_" + to_string(u), "for u r: rho+ur is not a root", "skipped"));
        continue;
      }
      SixthRoot zu = sixth_root(ur);
      out.push_back(note(id + ".unit_" + to_string(u), "for u r: T_(ur) then T_(rho+ur) / reverse",
                         zs(zu.zeta_r_first) + " / " + zs(zu.zeta_sum_first)));
    }
  }
  return out;
}

}  // namespace eislat
