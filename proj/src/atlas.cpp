#include "evencliff/atlas.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "evencliff/normalizer.hpp"

namespace evencliff {

std::string to_string(Family f) {
  switch (f) {
    case Family::Flat: return "flat";
    case Family::Compact: return "compact";
    case Family::Noncompact: return "noncompact";
    case Family::Mixed: return "mixed";
  }
  return "?";
}

namespace {

std::string str(Dim v) { return std::to_string(v); }

Dim n_dim(int r, const Multiplicities& mult) { return static_cast<Dim>(ambient_dimension(r, mult)); }

SymmetricSpaceModel flat_model(int r, const Multiplicities& mult) {
  SymmetricSpaceModel m;
  m.r = r;
  m.mult = mult;
  m.family = Family::Flat;
  m.dim_M = n_dim(r, mult);
  // translations plus the linear isotropy (centralizer ⊕ spin image)
  m.dim_G = m.dim_M + static_cast<Dim>(expected_dims(r, mult).normalizer);
  m.name = "R^" + str(m.dim_M);
  return m;
}

SymmetricSpaceModel curved(int r, const Multiplicities& mult, Family fam, std::string name, Dim dim_g) {
  SymmetricSpaceModel m;
  m.r = r;
  m.mult = mult;
  m.family = fam;
  m.name = std::move(name);
  m.dim_M = n_dim(r, mult);
  m.dim_G = dim_g;
  return m;
}

// Quaternion-Kähler building blocks for k ≥ 1, one per family.
std::vector<SymmetricSpaceModel> rank3_models(long k) {
  const auto mult = Multiplicities::single(k);
  const Dim g = dim_sp(k + 1);
  const std::string sk = str(k);
  return {flat_model(3, mult),
          curved(3, mult, Family::Compact, "Sp(" + str(k + 1) + ")/(Sp(" + sk + ")×Sp(1))", g),
          curved(3, mult, Family::Noncompact, "Sp(" + sk + ",1)/(Sp(" + sk + ")×Sp(1))", g)};
}

SymmetricSpaceModel point_model() {
  SymmetricSpaceModel m;
  m.r = 3;
  m.name = "pt";
  m.family = Family::Flat;
  m.mult = Multiplicities::single(1);  // placeholder, dim_M = 0 marks the point
  m.note = "point";
  return m;
}

bool is_point(const SymmetricSpaceModel& m) { return m.dim_M == 0; }

SymmetricSpaceModel product(const Multiplicities& mult, const SymmetricSpaceModel& a, const SymmetricSpaceModel& b) {
  SymmetricSpaceModel m;
  m.r = 4;
  m.mult = mult;
  m.factors = {a, b};
  m.name = a.name + " × " + b.name;
  m.dim_M = a.dim_M + b.dim_M;
  m.dim_G = a.dim_G + b.dim_G;
  std::vector<Family> fams;
  for (const auto& f : m.factors)
    if (!is_point(f)) fams.push_back(f.family);
  m.family = fams.front();
  for (Family f : fams)
    if (f != m.family) m.family = Family::Mixed;
  const bool has_flat = (!is_point(a) && a.family == Family::Flat) || (!is_point(b) && b.family == Family::Flat);
  const bool has_point = is_point(a) || is_point(b);
  m.flagged = has_flat || has_point;
  if (has_flat) m.note = "flat factor";
  if (has_point) m.note = "trivial factor; spin(4) acts through one sp(1)";
  return m;
}

std::vector<SymmetricSpaceModel> rank4_models(const Multiplicities& mult) {
  auto side = [](long m) {
    return m == 0 ? std::vector<SymmetricSpaceModel>{point_model()} : rank3_models(m);
  };
  std::vector<SymmetricSpaceModel> out;
  for (const auto& a : side(mult.m1()))
    for (const auto& b : side(mult.m2())) {
      const bool a_flat = is_point(a) || a.family == Family::Flat;
      const bool b_flat = is_point(b) || b.family == Family::Flat;
      if (a_flat && b_flat) continue;  // that is the flat model itself
      out.push_back(product(mult, a, b));
    }
  return out;
}

bool single_one(const Multiplicities& m) { return !m.is_pair() && m.m() == 1; }
bool pair_one(const Multiplicities& m) {
  return m.is_pair() && ((m.m1() == 1 && m.m2() == 0) || (m.m1() == 0 && m.m2() == 1));
}

}  // namespace

std::vector<SymmetricSpaceModel> models_for(int r, const Multiplicities& mult) {
  if (r < 3) throw std::invalid_argument("models_for requires r >= 3, got " + std::to_string(r));
  require_compatible(r, mult);
  std::vector<SymmetricSpaceModel> out{flat_model(r, mult)};
  auto pair_of = [&](Family f, std::string name, Dim g) { out.push_back(curved(r, mult, f, std::move(name), g)); };
  switch (r) {
    case 3: {
      auto m3 = rank3_models(mult.m());
      out.push_back(m3[1]);
      out.push_back(m3[2]);
      break;
    }
    case 4:
      for (auto& m : rank4_models(mult)) out.push_back(std::move(m));
      break;
    case 5: {
      const long k = mult.m();
      pair_of(Family::Compact, "Sp(" + str(k + 2) + ")/(Sp(" + str(k) + ")×Sp(2))", dim_sp(k + 2));
      pair_of(Family::Noncompact, "Sp(" + str(k) + ",2)/(Sp(" + str(k) + ")×Sp(2))", dim_sp(k + 2));
      break;
    }
    case 6: {
      const long k = mult.m();
      pair_of(Family::Compact, "SU(" + str(k + 4) + ")/S(U(" + str(k) + ")×U(4))", dim_su(k + 4));
      pair_of(Family::Noncompact, "SU(" + str(k) + ",4)/S(U(" + str(k) + ")×U(4))", dim_su(k + 4));
      break;
    }
    case 8:
      if (mult.m1() == 0 || mult.m2() == 0) {
        const long k = mult.total();
        pair_of(Family::Compact, "SO(" + str(k + 8) + ")/(SO(" + str(k) + ")×SO(8))", dim_so(k + 8));
        pair_of(Family::Noncompact, "SO(" + str(k) + ",8)/(SO(" + str(k) + ")×SO(8))", dim_so(k + 8));
      }
      break;
    case 9:
      if (single_one(mult)) {
        pair_of(Family::Compact, "F4/Spin(9)", kDimF4);
        pair_of(Family::Noncompact, "F4(-20)/Spin(9)", kDimF4);
      }
      break;
    case 10:
      if (single_one(mult)) {
        pair_of(Family::Compact, "E6/(Spin(10)·U(1))", kDimE6);
        pair_of(Family::Noncompact, "E6(-14)/(Spin(10)·U(1))", kDimE6);
      }
      break;
    case 12:
      if (pair_one(mult)) {
        pair_of(Family::Compact, "E7/(Spin(12)·SU(2))", kDimE7);
        pair_of(Family::Noncompact, "E7(-5)/(Spin(12)·SU(2))", kDimE7);
      }
      break;
    case 16:
      if (pair_one(mult)) {
        pair_of(Family::Compact, "E8/Spin+(16)", kDimE8);
        pair_of(Family::Noncompact, "E8(8)/Spin+(16)", kDimE8);
      }
      break;
    default:
      break;
  }
  return out;
}

bool CrossCheckReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

CrossCheckReport cross_check(const SymmetricSpaceModel& m) {
  CrossCheckReport rep;
  rep.model = m.name;
  const Dim n = n_dim(m.r, m.mult);
  rep.checks.push_back({"dim_M", m.dim_M == n, "dim_M = " + str(m.dim_M) + ", N = " + str(n)});

  const Dim bound = d_max(m.r, m.mult);
  const Dim shortfall = choose2(m.r) - static_cast<Dim>(spin_image_dim(m.r, m.mult));
  const Dim expected = bound - shortfall;
  std::string detail = "dim_G = " + str(m.dim_G) + ", d_max = " + str(bound);
  if (shortfall != 0) detail += ", attainable " + str(expected);
  rep.checks.push_back({"dim_G", m.dim_G == expected, detail});

  if (m.r == 4 && m.factors.size() == 2) {
    Dim sum = 0;
    bool factors_ok = true;
    std::string fd;
    for (const auto& f : m.factors) {
      sum += f.dim_G;
      if (is_point(f)) {
        factors_ok = factors_ok && f.dim_G == 0;
        continue;
      }
      const Dim fb = d_max(3, f.mult);
      factors_ok = factors_ok && f.dim_G == fb;
      fd += " " + f.name + ": " + str(f.dim_G) + " vs d_max(3," + f.mult.to_string() + ") = " + str(fb) + ";";
    }
    rep.checks.push_back({"additivity", factors_ok && sum == m.dim_G,
                          "dim_G = " + str(m.dim_G) + " = " + str(m.factors[0].dim_G) + " + " +
                              str(m.factors[1].dim_G) + ";" + fd});
  }
  return rep;
}

std::vector<SymmetricSpaceModel> catalog(int max_k) {
  if (max_k < 1) throw std::invalid_argument("catalog: max_k must be at least 1");
  std::vector<SymmetricSpaceModel> out;
  auto add_curved = [&](int r, const Multiplicities& mult) {
    for (auto& m : models_for(r, mult))
      if (m.family != Family::Flat) out.push_back(std::move(m));
  };
  for (long k = 1; k <= max_k; ++k) add_curved(3, Multiplicities::single(k));
  for (long a = 1; a <= max_k; ++a)
    for (long b = 1; b <= max_k; ++b) add_curved(4, Multiplicities::pair(a, b));
  for (long k = 1; k <= max_k; ++k) add_curved(5, Multiplicities::single(k));
  for (long k = 1; k <= max_k; ++k) add_curved(6, Multiplicities::single(k));
  for (long k = 1; k <= max_k; ++k) add_curved(8, Multiplicities::pair(k, 0));
  add_curved(9, Multiplicities::single(1));
  add_curved(10, Multiplicities::single(1));
  add_curved(12, Multiplicities::pair(1, 0));
  add_curved(16, Multiplicities::pair(1, 0));
  return out;
}

std::string format_catalog_table(const std::vector<SymmetricSpaceModel>& models) {
  std::ostringstream os;
  // names hold multi-byte symbols, so they go in the last, unpadded column
  os << std::left << std::setw(4) << "r" << std::setw(8) << "mult" << std::setw(12) << "family" << std::setw(7)
     << "dim_M" << std::setw(7) << "dim_G" << std::setw(7) << "check" << "model\n";
  for (const auto& m : models) {
    const bool ok = cross_check(m).passed();
    os << std::left << std::setw(4) << m.r << std::setw(8) << m.mult.to_string() << std::setw(12)
       << to_string(m.family) << std::setw(7) << m.dim_M << std::setw(7) << m.dim_G << std::setw(7)
       << (ok ? "ok" : "FAIL") << m.name;
    if (m.flagged) os << "  [flagged: " << m.note << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace evencliff
