#include "pqw/report.hpp"

#include "pqw/spec_io.hpp"

namespace pqw {

using nlohmann::json;

json census_json(const Census& census) {
  json j;
  j["marked_tuples"] = census.marked_tuples;
  j["singular_points"] = census.singular_points;
  j["all_half_type"] = census.all_half_type;
  j["provenance"] = "computed";
  json recs = json::array();
  for (const SingularityRecord& r : census.records) {
    json rj;
    rj["type"] = r.type;
    rj["orbit_size"] = r.orbit_size;
    rj["stabilizer_order"] = (long long)r.stabilizer.size();
    json rep = json::array();
    for (const MarkedPoint& p : r.representative) {
      json pj;
      pj["factor"] = p.factor;
      pj["branch_index"] = p.branch_index;
      pj["coset_rep"] = p.coset_rep;
      rep.push_back(pj);
    }
    rj["representative"] = rep;
    recs.push_back(rj);
  }
  j["records"] = recs;
  return j;
}

json kodaira_json(const KodairaReport& k) {
  json j;
  j["genera_ok"] = k.genera_ok;
  j["quasi_etale"] = k.quasi_etale;
  j["terminal"] = k.terminal;
  if (k.kodaira_dimension) {
    j["kappa"] = *k.kodaira_dimension;
    j["kappa_status"] = "computed";
  } else {
    j["kappa"] = nullptr;
    j["kappa_status"] = "not certified by this tool";
  }
  j["notes"] = k.notes;
  j["provenance"]["terminal"] =
      "cited literature (Reid): 1/2(1,...,1) singularities are terminal for n >= 3";
  j["provenance"]["resolution_h1"] =
      "cited literature (Schlessinger): h1(Theta) is unchanged by the single blow-up resolution";
  return j;
}

json invariants_json(const ProductQuotientSpec& spec, const Census& census) {
  json j;
  json genera = json::array();
  for (const Factor& f : spec.factors) genera.push_back(f.genus);
  j["factor_genera"] = genera;
  j["h1_theta"] = h1_theta(spec);
  j["b1"] = betti_b1(spec);
  j["provenance"] = "computed";
  j["census"] = census_json(census);
  j["kodaira"] = kodaira_json(kodaira_report(spec, census));
  return j;
}

json pi1_json(const Pi1Result& r, const ReportOptions& opt) {
  json j;
  j["status"] = r.status == OrderStatus::Certified ? "certified" : "undetermined";
  if (r.status == OrderStatus::Certified) {
    j["order"] = r.order;
    j["provenance"] = "computed";
  } else {
    j["order"] = nullptr;
    j["provenance"] = "uncertified";
    j["undetermined_reason"] = r.diag.undetermined_reason;
  }
  if (r.abelian) {
    j["h1"] = r.abelian->to_string();
    json inv = json::array();
    for (long long d : r.abelian->torsion) inv.push_back(d);
    j["invariant_factors"] = inv;
    j["free_rank"] = r.abelian->free_rank;
  } else {
    j["h1"] = nullptr;
  }
  if (r.certified_abelian) {
    j["isomorphism"] = r.isomorphism;
    j["certification"] = "coset enumeration matched |H1|";
  } else if (r.status == OrderStatus::Certified) {
    j["isomorphism"] = nullptr;
    j["certification"] = "order certified; group may be non-abelian";
  } else {
    j["isomorphism"] = nullptr;
    j["certification"] = "H1 only";
  }
  json stats;
  stats["index"] = r.diag.index;
  stats["schreier_generators"] = r.diag.schreier_generators;
  stats["raw_relators"] = r.diag.raw_relators;
  stats["distinct_relators"] = r.diag.distinct_relators;
  stats["fix_generators"] = r.diag.fix_generators;
  stats["simplified_generators"] = r.diag.simplified_generators;
  stats["simplified_relators"] = r.diag.simplified_relators;
  stats["enumerated_cosets"] = r.diag.enumerated_cosets;
  if (opt.include_timing) stats["wall_ms"] = r.diag.wall_ms;
  j["stats"] = stats;
  return j;
}

json cover_json(const EtaleCover& c) {
  json j;
  j["degree"] = c.report.degree;
  j["unramified"] = c.report.unramified;
  j["stabilizer_elements_outside"] = c.report.stabilizer_elements_outside;
  if (c.restricted) {
    j["restricted_spec"] = spec_echo_json(*c.restricted);
  } else {
    j["restricted_spec"] = nullptr;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json universal_cover_json(const UniversalCoverReport& r) {
  json j;
  j["pi1_order"] = r.pi1_order;
  j["base_singular_points"] = r.base_singular_points;
  j["cover_singularities"] = r.cover_singularities;
  j["non_contractible"] = r.non_contractible;
  j["notes"] = r.notes;
  return j;
}

json fermat_json(const FermatReport& r) {
  json j;
  j["pass"] = r.pass;
  j["marked_points"] = r.marked_count;
  json orbits = json::array();
  for (const FermatOrbit& o : r.orbits) {
    json oj;
    oj["representative"] = o.representative;
    // Exact coordinates: one rational coefficient vector (basis 1, z8, z8^2,
    // z8^3) per projective coordinate.
    json coords = json::array();
    for (int c = 0; c < 3; ++c) {
      json vec = json::array();
      for (int i = 0; i < 4; ++i) {
        vec.push_back(o.representative_point.x[std::size_t(c)].coeff(i).get_str());
      }
      coords.push_back(vec);
    }
    oj["representative_coordinates"] = coords;
    oj["length"] = o.length;
    oj["stabilizer_generator"] = o.stabilizer_generator;
    oj["stabilizer_order"] = o.stabilizer_order;
    oj["branch_point"] = o.branch_point;
    orbits.push_back(oj);
  }
  j["orbits"] = orbits;
  j["subgroup_orbit_lengths"] = r.subgroup_orbit_lengths;
  j["branch_points"] = r.branch_points;
  j["failures"] = r.failures;
  return j;
}

json limits_json(const EnumerationLimits& l) {
  json j;
  j["max_cosets"] = l.max_cosets;
  j["max_relators"] = l.max_relators;
  j["max_definitions"] = l.definition_budget();
  return j;
}

json make_report(const std::string& command, json blocks, const EnumerationLimits& limits,
                 const ReportOptions& opt, double wall_ms) {
  json j = std::move(blocks);
  j["schema"] = "report-v1";
  j["command"] = command;
  j["limits"] = limits_json(limits);
  if (opt.include_timing) j["timing"]["wall_ms"] = wall_ms;
  return j;
}

}  // namespace pqw
