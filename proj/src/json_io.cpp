#include "conedens/json_io.hpp"

namespace conedens {

Json json_point(const Point& p) {
  if (p.size() == 1) return p[0];
  Json arr = Json::array();
  for (int v : p) arr.push_back(v);
  return arr;
}

Json json_points(const std::vector<Point>& v) {
  Json arr = Json::array();
  for (const Point& p : v) arr.push_back(json_point(p));
  return arr;
}

Json json_box(const Box& b) {
  Json arr = Json::array();
  for (int m : b.bounds()) arr.push_back(m);
  return arr;
}

Json json_pointset(const PointSet& s) { return json_points(s.points()); }

Json json_ideal(const OrderIdeal& j) { return json_points(j.points()); }

Json json_extension(const LinearExtension& e, ExtensionRule rule) {
  return Json{{"rule", rule == ExtensionRule::lexicographic ? "lex" : "topo"},
              {"order", json_points(e.points_by_rank())}};
}

Json json_density(const DensityReport& r) {
  return Json{{"value", fraction_string(r.value)},
              {"value_approx", approx(r.value)},
              {"box_relative", true},
              {"witness", json_ideal(r.witness)},
              {"family_size", r.family_size},
              {"box", json_box(r.box)}};
}

Json json_decomposition(const Decomposition& d) {
  return Json{{"a", json_point(d.a)},
              {"b", json_point(d.b)},
              {"covered_directly", d.direct}};
}

Json json_cover(const CoverReport& r) {
  return Json{{"theorem", "pigeonhole-cover"},
              {"verdict", verdict_str(r.verdict)},
              {"alpha", fraction_string(r.alpha)},
              {"beta", fraction_string(r.beta)},
              {"atoms_present", r.atoms_present},
              {"density_sum_exceeds_one", r.density_sum_exceeds},
              {"missing", json_points(r.missing)},
              {"family_size", r.family_size},
              {"note", r.note}};
}

Json json_partition(const PartitionCertificate& c) {
  Json parts = Json::array();
  for (const auto& part : c.parts)
    parts.push_back(Json{{"b", json_point(part.anchor)},
                         {"members", json_points(part.members)}});
  return Json{{"J", json_ideal(c.j)},
              {"B", json_pointset(c.b_used)},
              {"parts", parts},
              {"extension", json_extension(c.extension, c.rule)}};
}

Json json_inequality(const InequalityReport& r) {
  Json margins = Json::array();
  for (const auto& m : r.margins)
    margins.push_back(Json{{"ideal", json_points(m.ideal)},
                           {"margin", fraction_string(m.margin)}});
  return Json{{"theorem", "shnirelman"},
              {"verdict", verdict_str(r.verdict)},
              {"alpha", fraction_string(r.alpha)},
              {"beta", fraction_string(r.beta)},
              {"bound", fraction_string(r.bound)},
              {"sigma_sum", fraction_string(r.sigma_c)},
              {"family_size", r.family_size},
              {"min_margin", fraction_string(r.min_margin)},
              {"min_margin_ideal", json_points(r.min_margin_ideal)},
              {"per_ideal_margins", margins},
              {"margins_complete", r.margins_complete}};
}

Json json_product_bound(const ProductBoundReport& r) {
  Json alphas = Json::array();
  for (const Rational& a : r.alphas) alphas.push_back(fraction_string(a));
  return Json{{"theorem", "product-bound"},
              {"verdict", verdict_str(r.verdict)},
              {"alphas", alphas},
              {"sigma_product", fraction_string(r.sigma_product)},
              {"lhs", fraction_string(r.lhs)},
              {"rhs", fraction_string(r.rhs)},
              {"family_size", r.family_size}};
}

Json json_basis(const BasisReport& r) {
  Json j{{"theorem", "basis-order"},
         {"verdict", verdict_str(r.verdict)},
         {"h_max", r.h_max},
         {"alpha", fraction_string(r.alpha)},
         {"bound_ok", r.bound_ok}};
  switch (r.outcome) {
    case BasisReport::Outcome::found:
      j["outcome"] = "found";
      j["order"] = r.order;
      break;
    case BasisReport::Outcome::not_a_basis:
      j["outcome"] = "not-a-basis";
      j["fixpoint_h"] = r.fixpoint_h;
      break;
    case BasisReport::Outcome::not_within_h_max:
      j["outcome"] = "not-a-basis-within-h-max";
      break;
  }
  if (r.h0_known) j["h0"] = r.h0;
  return j;
}

Json json_mann(const MannReport& r) {
  Json j{{"theorem", "mann"},
         {"verdict", verdict_str(r.verdict)},
         {"asserted", r.asserted},
         {"dim", r.dim},
         {"alpha", fraction_string(r.alpha)},
         {"beta", fraction_string(r.beta)},
         {"bound", fraction_string(r.bound)},
         {"sigma_sum", fraction_string(r.sigma_c)},
         {"family_size", r.family_size}};
  if (r.verdict == Verdict::candidate_observation) {
    j["set_a"] = json_points(r.set_a);
    j["set_b"] = json_points(r.set_b);
  }
  return j;
}

}  // namespace conedens
