#include "negcurve/json_io.hpp"

namespace negcurve {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) { return z.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw PreconditionError("expected an integer or a rational string, got " + j.dump());
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"a", e.x()}, {"b", e.y()}, {"c", c.str()}});
  return {{"char", f.characteristic()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw PreconditionError("polynomial JSON needs a \"terms\" array");
  const std::uint64_t ch = j.value("char", std::uint64_t{0});
  check_characteristic(ch);
  LaurentPoly f(ch);
  for (const auto& t : j.at("terms")) {
    if (!t.contains("a") || !t.contains("b") || !t.contains("c"))
      throw PreconditionError("each term needs \"a\", \"b\" and \"c\"");
    const LatticePoint e(t.at("a").get<std::int64_t>(), t.at("b").get<std::int64_t>());
    Rational c = rational_from_json(t.at("c"));
    f.add_term(e, Scalar(c, ch));
  }
  return f;
}

Json to_json(const IntegralPolygon& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices) v.push_back({x.x(), x.y()});
  return {{"vertices", v}};
}

Json to_json(const RationalPolygon& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices) v.push_back({to_string(x.x()), to_string(x.y())});
  return {{"vertices", v}};
}

RationalPolygon polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw PreconditionError("polygon JSON needs a \"vertices\" array");
  std::vector<RationalPoint> pts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2) throw PreconditionError("each vertex must be a pair");
    pts.emplace_back(rational_from_json(v[0]), rational_from_json(v[1]));
  }
  if (pts.empty()) throw PreconditionError("polygon has no vertices");
  return convex_hull(pts);
}

Json to_json(const HerzogData& h) {
  return {{"input", h.input},
          {"a", h.a},
          {"b", h.b},
          {"c", h.c},
          {"permutation", h.permutation},
          {"s", h.s},
          {"s2", h.s2},
          {"s3", h.s3},
          {"t", h.t},
          {"t1", h.t1},
          {"t3", h.t3},
          {"u", h.u},
          {"u1", h.u1},
          {"u2", h.u2},
          {"i0", h.i0},
          {"j0", h.j0},
          {"complete_intersection", h.complete_intersection()}};
}

Json to_json(const IrreducibilityCertificate& c) {
  Json j{{"verdict", to_string(c.verdict)}};
  if (c.verdict == Verdict::IrreducibleModP) j["prime"] = c.prime;
  if (c.verdict == Verdict::Factored) {
    Json fs = Json::array();
    for (const auto& f : c.factors) fs.push_back(to_text(f));
    j["factors"] = fs;
    j["unit"] = {{"coefficient", c.unit_coefficient.str()}, {"shift", {c.unit_shift.x(), c.unit_shift.y()}}};
  }
  j["details"] = c.details;
  return j;
}

Json to_json(const LatticeCounts& c) {
  return {{"total", c.total}, {"boundary", c.boundary}, {"interior", c.interior}};
}

Json to_json(const NctReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"status", to_string(r.status)},
          {"r", r.r},
          {"char", r.characteristic},
          {"area2", to_json(r.area2)},
          {"B", r.boundary},
          {"I", r.interior},
          {"lattice_count", r.lattice_count},
          {"multiplicity", r.multiplicity},
          {"kernel_dimension", r.kernel_dimension},
          {"polygon", to_json(r.polygon)},
          {"certificate", to_json(r.certificate)},
          {"checks", checks}};
}

Json to_json(const Thm36Report& r) {
  Json conds = Json::object();
  for (int i = 1; i <= 11; ++i) {
    const auto& c = r.condition(i);
    conds[std::to_string(i)] = {{"status", to_string(c.status)}, {"provenance", c.provenance}};
  }
  const auto& n = r.numbers;
  return {{"r", r.r},
          {"char", r.characteristic},
          {"rays", r.ray_count},
          {"area2", to_json(r.area2)},
          {"B", r.boundary},
          {"I", r.interior},
          {"numbers",
           {{"C^2", to_json(n.c_squared)},
            {"C.E", to_json(n.c_dot_e)},
            {"E^2", to_json(n.e_squared)},
            {"C.(-K_Y)", to_json(n.c_dot_minus_k)},
            {"(-K_Y)^2", to_json(n.minus_k_y_squared)},
            {"(-K_X)^2", to_json(n.minus_k_x_squared)},
            {"(-K_X)^2 via smooth refinement", to_json(r.refined_minus_k_x_squared)},
            {"2I - r(r-1)", to_json(n.adjunction)},
            {"area2(P_-K)", to_json(r.minus_k_area2)}}},
          {"conditions", conds}};
}

Json to_json(const NegativeCurveReport& r) {
  Json j{{"weights", {r.a, r.b, r.c}},
         {"char", r.characteristic},
         {"r", r.r},
         {"d", r.d},
         {"accepted", r.accepted()},
         {"conditional", r.conditional()},
         {"phi", to_json(r.phi)},
         {"phi_text", to_text(r.phi)},
         {"support_size", r.support_size},
         {"kernel_dimension", r.kernel_dimension}};
  if (r.prefilter)
    j["prefilter"] = {{"primes", {r.prefilter->primes[0], r.prefilter->primes[1]}},
                      {"nullities", {r.prefilter->nullities[0], r.prefilter->nullities[1]}}};
  j["checks"] = {{"irreducible", r.irreducible},
                 {"edges_touched", r.edges_touched},
                 {"jet_membership", r.jet_membership},
                 {"area_inequality", r.area_inequality}};
  j["certificate"] = to_json(r.certificate);
  j["nct"] = to_json(r.nct);
  j["interior_dP"] = r.interior_dp;
  j["interior_hull"] = r.interior_hull;
  j["genus"] = r.genus;
  return j;
}

Json to_json(const Catalog& c) {
  Json classes = Json::array();
  for (const auto& e : c.classes)
    classes.push_back({{"representative", to_json(e.representative)},
                       {"text", to_text(e.representative)},
                       {"report", to_json(e.report)}});
  return {{"r", c.r}, {"char", c.characteristic}, {"polygons_examined", c.polygons_examined}, {"classes", classes}};
}

Json to_json(const ClassGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(to_json(t));
  Json grading = Json::array();
  for (Eigen::Index i = 0; i < g.grading.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < g.grading.cols(); ++k) row.push_back(to_json(g.grading(i, k)));
    grading.push_back(row);
  }
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"grading", grading}};
}

Json to_json(const Fan2D& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back({r.x(), r.y()});
  return {{"rays", rays}, {"smooth", fan.is_smooth()}};
}

Json to_json(const EhrhartData& e) {
  return {{"quadratic", to_json(e.quadratic)}, {"linear", to_json(e.linear)}, {"constant", to_json(e.constant)}};
}

}  // namespace negcurve
