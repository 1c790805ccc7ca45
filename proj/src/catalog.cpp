#include "eislat/catalog.hpp"

#include <algorithm>
#include <map>

#include "eislat/codes.hpp"
#include "eislat/enumerate.hpp"
#include "eislat/group.hpp"
#include "eislat/model.hpp"
#include "eislat/plane.hpp"

namespace eislat {

namespace {

const Eis T = Eis::theta();

std::string str(std::uint64_t n) { return std::to_string(n); }

std::string norm_str(const std::optional<Fraction>& f) { return f ? f->str() : "-"; }

EMatrix rows(std::initializer_list<std::initializer_list<Eis>> r) {
  EMatrix m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (const Eis& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

ScaledEVector ambient_root(const HermitianLattice& L, const EVector& c) { return L.ambient(c); }

}  // namespace

std::string to_string(RootLatticeKind k) {
  switch (k) {
    case RootLatticeKind::A2: return "A2";
    case RootLatticeKind::D4: return "D4";
    case RootLatticeKind::E6: return "E6";
    case RootLatticeKind::E8: return "E8";
  }
  return "?";
}

HermitianLattice root_lattice(RootLatticeKind k) {
  switch (k) {
    case RootLatticeKind::A2:
      return HermitianLattice(rows({{T}}), identity(1));
    case RootLatticeKind::D4:
      return HermitianLattice(rows({{1, 1, 1}, {0, 0, T}}), identity(3));
    case RootLatticeKind::E6:
      return HermitianLattice(rows({{1, 1, 1}, {0, T, 0}, {0, 0, T}}), identity(3));
    case RootLatticeKind::E8: {
      EMatrix g = zeros(6, 4);
      for (Eigen::Index i = 0; i < 4; ++i) g(i, i) = T;
      const auto tc = standard_codes().tetracode.generator().row_list();
      for (std::size_t r = 0; r < tc.size(); ++r)
        for (std::size_t j = 0; j < 4; ++j) g(static_cast<Eigen::Index>(4 + r), static_cast<Eigen::Index>(j)) = lift(F3{tc[r][j]});
      return HermitianLattice(g, identity(4));
    }
  }
  throw std::invalid_argument("root_lattice: unknown kind");
}

Table1Record expected_table1(RootLatticeKind k) {
  switch (k) {
    case RootLatticeKind::A2: return {k, 6, 3, 6, 3, "F3^1", Fraction(1)};
    case RootLatticeKind::D4: return {k, 24, 24, 72, 4, "F4^1", Fraction(3, 2)};
    case RootLatticeKind::E6: return {k, 72, 648, 1296, 3, "F3^1", Fraction(2)};
    case RootLatticeKind::E8: return {k, 240, 155520, 155520, 1, "0", std::nullopt};
  }
  throw std::invalid_argument("expected_table1: unknown kind");
}

Table1Record compute_table1(RootLatticeKind k, std::size_t closure_cap) {
  const HermitianLattice L = root_lattice(k);
  Table1Record t;
  t.kind = k;
  const auto rs = roots(L);
  t.roots = rs.size();
  std::vector<EMatrix> gens;
  for (const auto& r : collapse_units(rs)) gens.push_back(triflection_coords(L.gram(), r));
  t.reflection_group_order = closure_group(gens, closure_cap).order;
  t.aut_order = aut_order_definite(L);
  CosetNorms cn = coset_min_norms(L);
  t.glue_order = cn.quotient.order;
  t.glue_tag = cn.quotient.field_tag;
  for (const auto& c : cn.cosets)
    if (!t.coset_min_norm || c.norm < *t.coset_min_norm) t.coset_min_norm = c.norm;
  return t;
}

std::vector<VerificationRecord> verify_table1(RootLatticeKind k, std::size_t closure_cap) {
  const std::string id = "table1." + to_string(k);
  const char* anchor = "The indecomposable Eisenstein root lattices";
  std::vector<VerificationRecord> out;
  const HermitianLattice L = root_lattice(k);
  GramInfo g = gram_and_integrality(L);
  out.push_back(make_record(id + ".integral", "L inside theta L'", "true", yes_no(g.in_theta_dual), anchor));
  const auto rs = roots(L);
  EMatrix coords(static_cast<Eigen::Index>(rs.size()), L.rank());
  for (std::size_t i = 0; i < rs.size(); ++i) coords.row(static_cast<Eigen::Index>(i)) = rs[i];
  out.push_back(make_record(id + ".root_spanned", "L spanned by its roots", "true",
                            yes_no(hnf(coords) == hnf(identity(L.rank()))), anchor));

  Table1Record want = expected_table1(k);
  Table1Record got;
  try {
    got = compute_table1(k, closure_cap);
  } catch (const CapExceeded& e) {
    out.push_back(make_record(id + ".cap", "computation within caps", "true",
                              "false (" + std::string(e.what()) + ", partial " + str(e.partial_count) + ")", anchor));
    return out;
  }
  out.push_back(make_record(id + ".roots", "roots", str(want.roots), str(got.roots), anchor));
  out.push_back(make_record(id + ".R", "order of the group R generated by the triflections",
                            str(want.reflection_group_order), str(got.reflection_group_order), anchor));
  out.push_back(make_record(id + ".aut", "|Aut L|", str(want.aut_order), str(got.aut_order), anchor));
  out.push_back(make_record(id + ".glue", "theta L'/L", want.glue_tag + " (order " + std::to_string(want.glue_order) + ")",
                            got.glue_tag + " (order " + std::to_string(got.glue_order) + ")", anchor));
  out.push_back(make_record(id + ".coset_min", "min norm of theta L' - L", norm_str(want.coset_min_norm),
                            norm_str(got.coset_min_norm), anchor));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(NiemeierKind k) {
  switch (k) {
    case NiemeierKind::A2_12: return "A2^12";
    case NiemeierKind::D4_6: return "D4^6";
    case NiemeierKind::E6_4: return "E6^4";
    case NiemeierKind::E8_3: return "E8^3";
  }
  return "?";
}

std::size_t expected_niemeier_roots(NiemeierKind k) {
  switch (k) {
    case NiemeierKind::A2_12: return 72;
    case NiemeierKind::D4_6: return 144;
    case NiemeierKind::E6_4: return 288;
    case NiemeierKind::E8_3: return 720;
  }
  return 0;
}

NiemeierData niemeier(NiemeierKind k, const FMatrix* golay) {
  NiemeierData d;
  RootLatticeKind comp{};
  int copies = 0;
  const StandardCodes& sc = standard_codes();
  FMatrix code;
  switch (k) {
    case NiemeierKind::A2_12: comp = RootLatticeKind::A2, copies = 12, code = golay ? *golay : sc.golay.generator(); break;
    case NiemeierKind::D4_6: comp = RootLatticeKind::D4, copies = 6, code = sc.hexacode.generator(); break;
    case NiemeierKind::E6_4: comp = RootLatticeKind::E6, copies = 4, code = sc.tetracode.generator(); break;
    case NiemeierKind::E8_3: comp = RootLatticeKind::E8, copies = 3; break;
  }
  d.glue.component = root_lattice(comp);
  d.glue.copies = copies;
  d.base = direct_sum(d.glue.component, copies);
  if (code.rows() == 0) {
    d.lattice = d.base;
    return d;
  }
  d.glue.code = code;
  d.glue.representative = coset_min_norms(d.glue.component).cosets.front().representative;
  d.lattice = glue(d.glue);
  return d;
}

std::vector<VerificationRecord> niemeier_checks(NiemeierKind k, std::size_t cap, const FMatrix* golay) {
  const std::string id = "niemeier." + to_string(k);
  const char* anchor = "There are exactly 5 Eisenstein Niemeier lattices";
  std::vector<VerificationRecord> out;
  NiemeierData d = niemeier(k, golay);
  const HermitianLattice& L = d.lattice;
  out.push_back(make_record(id + ".rank", "rank", "12", std::to_string(L.rank()), anchor));
  GramInfo g = gram_and_integrality(L);
  out.push_back(make_record(id + ".theta_self_dual", "L = theta L'", "true", yes_no(g.equals_theta_dual), anchor));
  out.push_back(make_record(id + ".det", "squared det of the Gram matrix", "531441", (g.det * g.det).str(), anchor));
  out.push_back(make_record(id + ".contains_base", "L0 inside L", "true", yes_no(L.contains(d.base)), anchor));
  std::vector<EVector> rs;
  try {
    rs = roots(L, cap);
  } catch (const CapExceeded& e) {
    out.push_back(make_record(id + ".roots", "roots", str(expected_niemeier_roots(k)),
                              "cap exceeded (partial " + str(e.partial_count) + ")", anchor));
    return out;
  }
  out.push_back(make_record(id + ".roots", "roots", str(expected_niemeier_roots(k)), str(rs.size()), anchor));
  std::size_t in_base = 0;
  for (const auto& r : rs) in_base += d.base.contains(ambient_root(L, r));
  out.push_back(make_record(id + ".roots_in_base", "roots lying in L0", str(rs.size()), str(in_base),
                            "all roots of L already lie in L0"));
  return out;
}

// ---------------------------------------------------------------------------

HermitianLattice leech_from_l131() {
  return split_null(l131().lattice, ScaledEVector(null_rho(), 1)).complement;
}

std::vector<VerificationRecord> leech_checks(std::size_t cap) {
  const char* anchor = "The primitive null vector rho ... has Leech type";
  std::vector<VerificationRecord> out;
  HermitianLattice L = leech_from_l131();
  out.push_back(make_record("leech.rank", "rank of the null quotient", "12", std::to_string(L.rank()), anchor));
  out.push_back(make_record("leech.theta_self_dual", "L = theta L'", "true",
                            yes_no(gram_and_integrality(L).equals_theta_dual), anchor));
  try {
    out.push_back(make_record("leech.roots", "vectors of norm 3", "0", str(roots(L, cap).size()), anchor));
    out.push_back(make_record("leech.min_norm", "minimum norm", "6", min_norm(L, cap).str(), anchor));
  } catch (const CapExceeded& e) {
    out.push_back(make_record("leech.cap", "enumeration within caps", "true",
                              "false (partial " + str(e.partial_count) + ")", anchor));
  }
  return out;
}

std::string to_string(NullType t) {
  switch (t) {
    case NullType::A2type: return "A2";
    case NullType::D4type: return "D4";
    case NullType::E6type: return "E6";
    case NullType::E8type: return "E8";
    case NullType::LeechType: return "Leech";
  }
  return "?";
}

NullType classify_null(const EVector& rho, std::size_t cap) {
  const HermitianLattice& L = l131().lattice;
  auto c = L.coords(rho);
  if (!c) throw std::invalid_argument("classify_null: vector not in L");
  if (!model_norm(rho).is_zero()) throw std::invalid_argument("classify_null: vector not null");
  if (unit_index(vector_gcd(*c).g) < 0) throw std::invalid_argument("classify_null: vector not primitive");
  HermitianLattice Q = split_null(L, ScaledEVector(rho, 1)).complement;
  std::map<std::string, int> types;
  for (const auto& comp : root_components(Q, cap)) ++types[comp.type];
  if (types.empty()) return NullType::LeechType;
  if (types.size() == 1) {
    const auto& [t, n] = *types.begin();
    if (t == "A2" && n == 12) return NullType::A2type;
    if (t == "D4" && n == 6) return NullType::D4type;
    if (t == "E6" && n == 4) return NullType::E6type;
    if (t == "E8" && n == 3) return NullType::E8type;
  }
  std::string s;
  for (const auto& [t, n] : types) s += t + "^" + std::to_string(n) + " ";
  throw std::runtime_error("classify_null: unrecognized root system " + s);
}

std::vector<NullExample> null_examples() {
  const Plane& P = plane();
  std::vector<NullExample> out;
  out.push_back({"(-4-w;1^13)", null_rho(), NullType::LeechType});
  out.push_back({"(theta;theta,0^12)", model_vector(T, {{0, T}}), NullType::E6type});
  out.push_back({"(theta;theta-bar,0^12)", model_vector(T, {{0, conj(T)}}), NullType::A2type});

  // -1 at the vertices of the first triangle, 1 on the four points off its sides.
  std::optional<EVector> d4;
  for (int x = 0; x < 13 && !d4; ++x)
    for (int y = x + 1; y < 13 && !d4; ++y)
      for (int z = y + 1; z < 13 && !d4; ++z) {
        if (P.on(z, P.join(x, y))) continue;
        std::map<int, Eis> at;
        for (int p = 0; p < 13; ++p) at[p] = 1;
        for (int l : {P.join(x, y), P.join(y, z), P.join(x, z)})
          for (int p : P.points_on(l)) at[p] = 0;
        for (int p : {x, y, z}) at[p] = -1;
        EVector v = model_vector(Eis(3, 1), at);
        if (model_contains(v)) d4 = v;
      }
  if (!d4) throw std::logic_error("null_examples: no placement for the D4 example");
  out.push_back({"(3+w;1^4,-1^3,0^6)", *d4, NullType::D4type});

  // theta at the lexicographically first 4 points with no three collinear.
  std::optional<EVector> e8;
  for (int a = 0; a < 13 && !e8; ++a)
    for (int b = a + 1; b < 13 && !e8; ++b)
      for (int c = b + 1; c < 13 && !e8; ++c)
        for (int d = c + 1; d < 13 && !e8; ++d) {
          const int q[4] = {a, b, c, d};
          bool general = true;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              for (int k = j + 1; k < 4; ++k) general = general && !P.on(q[k], P.join(q[i], q[j]));
          if (general) e8 = model_vector(Eis(2) * T, {{a, T}, {b, T}, {c, T}, {d, T}});
        }
  out.push_back({"(2theta;theta^4,0^9)", *e8, NullType::E8type});
  return out;
}

std::vector<VerificationRecord> null_type_checks(std::size_t cap) {
  const char* anchor = "has E6 type ... has A2 type ... D4 type ... E8 type";
  std::vector<VerificationRecord> out;
  for (const auto& ex : null_examples()) {
    std::string got;
    try {
      got = to_string(classify_null(ex.rho, cap));
    } catch (const CapExceeded& e) {
      got = "cap exceeded (partial " + str(e.partial_count) + ")";
    } catch (const std::exception& e) {
      got = e.what();
    }
    out.push_back(make_record("null." + ex.label, "type of " + show(ex.rho), to_string(ex.expected), got, anchor));
  }
  return out;
}

}  // namespace eislat
