#include "evencliff/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace evencliff {

namespace {

Json entries_to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& t : m.triplets()) out.push_back(Json::array({t.row, t.col, rational_to_json(t.value)}));
  return out;
}

Matrix entries_from_json(std::size_t n, const Json& entries) {
  if (!entries.is_array()) throw std::invalid_argument("entries must be an array");
  std::vector<Triplet> t;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("entry must be [row, col, value]");
    const auto row = e[0].get<std::size_t>(), col = e[1].get<std::size_t>();
    if (row >= n || col >= n) throw std::invalid_argument("entry index out of range");
    t.push_back({row, col, rational_from_json(e[2])});
  }
  return Matrix::from_triplets(n, n, std::move(t));
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

}  // namespace

Json rational_to_json(const Rational& v) {
  if (is_integral(v) && v.get_num().fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_num().get_si()));
  return Json(to_string(v));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

Json mult_to_json(const Multiplicities& m) {
  return m.is_pair() ? Json::array({m.m1(), m.m2()}) : Json::array({m.m()});
}

Multiplicities mult_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2) throw std::invalid_argument("mult must be [m] or [m1, m2]");
  if (j.size() == 1) return Multiplicities::single(j[0].get<long>());
  return Multiplicities::pair(j[0].get<long>(), j[1].get<long>());
}

Json matrix_to_json(const Matrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries_to_json(m)}};
}

Matrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  std::vector<Triplet> t;
  for (const auto& e : j.at("entries")) {
    const auto row = e.at(0).get<std::size_t>(), col = e.at(1).get<std::size_t>();
    if (row >= rows || col >= cols) throw std::invalid_argument("entry index out of range");
    t.push_back({row, col, rational_from_json(e.at(2))});
  }
  return Matrix::from_triplets(rows, cols, std::move(t));
}

Json structure_to_json(const EvenCliffordStructure& s) {
  Json gens = Json::array();
  const auto bivs = bivectors(s.rank());
  for (std::size_t k = 0; k < bivs.size(); ++k)
    gens.push_back({{"i", bivs[k].i}, {"j", bivs[k].j}, {"entries", entries_to_json(s.generators()[k])}});
  return {{"r", s.rank()}, {"mult", mult_to_json(s.mult())}, {"N", s.dim()}, {"J", gens}};
}

EvenCliffordStructure structure_from_json(const Json& j) {
  const int r = j.at("r").get<int>();
  const Multiplicities mult = mult_from_json(j.at("mult"));
  const std::size_t n = ambient_dimension(r, mult);
  if (j.at("N").get<std::size_t>() != n) throw std::invalid_argument("N does not match r and mult");
  const auto bivs = bivectors(r);
  const Json& gens = j.at("J");
  if (!gens.is_array() || gens.size() != bivs.size()) throw std::invalid_argument("J must list every bivector");
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < bivs.size(); ++k) {
    const Json& g = gens[k];
    if (g.at("i").get<int>() != bivs[k].i || g.at("j").get<int>() != bivs[k].j)
      throw std::invalid_argument("J is not in bivector order");
    mats.push_back(entries_from_json(n, g.at("entries")));
  }
  return EvenCliffordStructure(r, mult, std::move(mats));
}

Json basis_to_json(const SubalgebraBasis& b) {
  Json els = Json::array();
  for (const auto& m : b.elements()) els.push_back(entries_to_json(m));
  return {{"N", b.ambient_dim()}, {"dim", b.size()}, {"elements", els}};
}

SubalgebraBasis basis_from_json(const Json& j) {
  const auto n = j.at("N").get<std::size_t>();
  std::vector<Matrix> els;
  for (const auto& e : j.at("elements")) els.push_back(entries_from_json(n, e));
  if (els.size() != j.at("dim").get<std::size_t>()) throw std::invalid_argument("dim does not match elements");
  return SubalgebraBasis(n, std::move(els));
}

Json bounds_to_json(const BoundsReport& rep) {
  Json j = {{"r", rep.r},
            {"mult", mult_to_json(rep.mult)},
            {"N", rep.n},
            {"d_max", rep.d_max},
            {"d_C", rep.d_C},
            {"gap_threshold", rep.gap_threshold},
            {"constraint_threshold", rational_to_json(rep.constraint_threshold)},
            {"constraints_ok", rep.constraints_ok}};
  j["d_M"] = rep.d_M ? Json(*rep.d_M) : Json(nullptr);
  if (!rep.d_M) j["d_M_reason"] = rep.d_M_reason;
  j["gap_inequality_ok"] = rep.gap_inequality_ok ? Json(*rep.gap_inequality_ok) : Json(nullptr);
  return j;
}

Json model_to_json(const SymmetricSpaceModel& m) {
  Json j = {{"r", m.r},       {"name", m.name},   {"family", to_string(m.family)}, {"mult", mult_to_json(m.mult)},
            {"dim_M", m.dim_M}, {"dim_G", m.dim_G}, {"flagged", m.flagged}};
  if (!m.note.empty()) j["note"] = m.note;
  if (!m.factors.empty()) {
    Json f = Json::array();
    for (const auto& x : m.factors) f.push_back(x.name);
    j["factors"] = f;
  }
  return j;
}

Json cross_check_to_json(const CrossCheckReport& rep) {
  return {{"model", rep.model}, {"passed", rep.passed()}, {"checks", checks_to_json(rep.checks)}};
}

Json verify_to_json(const VerifyReport& rep) {
  return {{"passed", rep.all_passed()}, {"checks", checks_to_json(rep.checks)}};
}

}  // namespace evencliff
