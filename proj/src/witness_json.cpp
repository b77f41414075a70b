#include "regcyc/witness_json.hpp"

namespace regcyc {

namespace {

VertexSet set_from(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorCode::kParse, std::string("missing array '") + key + "'");
  }
  return VertexSet(j.at(key).get<std::vector<Vertex>>());
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.vec()); }

Json to_json(const CyclePacking& packing) {
  return {{"hub", packing.hub}, {"cycles", packing.cycles}, {"size", packing.size()}};
}

Json to_json(const PathFamily& family) {
  return {{"kind", "paths"},
          {"paths", family.paths},
          {"U", to_json(family.sources)},
          {"W", to_json(family.sinks)}};
}

Json to_json(const Separator& sep, const VertexSet& sources, const VertexSet& sinks) {
  return {{"kind", "separator"},   {"S", to_json(sep.cut)}, {"A", to_json(sep.reach)},
          {"B", to_json(sep.rest)}, {"U", to_json(sources)}, {"W", to_json(sinks)}};
}

Json to_json(const LinkedCertificate& cert) {
  return {{"L", to_json(cert.linked)},
          {"k", cert.k},
          {"verified_upto", cert.verified_upto},
          {"bound", cert.bound()}};
}

Json to_json(const DenseWitness& witness) {
  Json steps = Json::array();
  for (const auto& step : witness.steps) {
    steps.push_back({{"cut_X", to_json(step.cut_x)}, {"kept", step.kept_x ? "X" : "Y"}});
  }
  return {{"steps", steps}, {"verified", witness.verified}, {"vertices", to_json(witness.vertices)}};
}

Json to_json(const DensityParams& params) {
  return {{"r", params.r},
          {"alpha", format_rational(params.alpha)},
          {"beta", format_rational(params.beta)},
          {"gamma", format_rational(params.gamma)},
          {"delta", format_rational(params.delta)}};
}

Json to_json(const TraceReport& report) {
  return {{"params", to_json(report.params)},
          {"dense", to_json(report.dense)},
          {"hub", report.hub ? Json(*report.hub) : Json(nullptr)},
          {"hub_from_lemma", report.hub_from_lemma},
          {"packing", to_json(report.packing)},
          {"bound", report.bound},
          {"argument_applies", report.argument_applies},
          {"separator_size", report.separator_size},
          {"bound_met", report.bound_met}};
}

Json to_json(const Theorem2Certificate& cert) {
  return {{"certificate", to_json(cert.certificate)},
          {"dense", to_json(cert.dense)},
          {"bound", cert.bound},
          {"verified", cert.verified}};
}

Json to_json(const BoundsReport& report) {
  return {{"r", report.r},
          {"c_lower", report.c_lower},
          {"c_upper", report.c_upper},
          {"c_upper_capped", report.c_upper_capped},
          {"dtw_lower", report.dtw_lower},
          {"limit_interval",
           {format_rational(report.limit_lower), format_rational(report.limit_upper)}}};
}

CyclePacking packing_from_json(const Json& j) {
  return guarded([&] {
    CyclePacking packing;
    packing.hub = j.at("hub").get<Vertex>();
    packing.cycles = j.at("cycles").get<std::vector<std::vector<Vertex>>>();
    return packing;
  });
}

PathFamily path_family_from_json(const Json& j) {
  return guarded([&] {
    PathFamily family;
    family.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    family.sources = set_from(j, "U");
    family.sinks = set_from(j, "W");
    return family;
  });
}

Separator separator_from_json(const Json& j) {
  return guarded([&] { return Separator{set_from(j, "S"), set_from(j, "A"), set_from(j, "B")}; });
}

LinkedCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    LinkedCertificate cert;
    cert.linked = set_from(j, "L");
    cert.k = j.at("k").get<int>();
    cert.verified_upto = j.value("verified_upto", 0);
    return cert;
  });
}

bool verify_witness(const Json& j, const Digraph& d) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "witness must be a JSON object");
  if (j.contains("paths") && j.contains("separator")) {
    return verify_witness(j.at("paths"), d) && verify_witness(j.at("separator"), d);
  }
  if (j.contains("hub")) {
    auto packing = packing_from_json(j);
    if (j.contains("size") && guarded([&] { return j.at("size").get<std::size_t>(); }) != packing.size()) {
      return false;
    }
    return verify_cycle_packing(d, packing);
  }
  if (j.contains("kind")) {
    auto kind = guarded([&] { return j.at("kind").get<std::string>(); });
    if (kind == "paths") {
      auto family = path_family_from_json(j);
      return verify_path_family(d, family.sources, family.sinks, family);
    }
    if (kind == "separator") {
      auto sep = separator_from_json(j);
      auto sources = set_from(j, "U");
      auto sinks = set_from(j, "W");
      try {
        sources.check_range(d.n());
        sinks.check_range(d.n());
      } catch (const Error&) {
        return false;
      }
      // A is pinned down as the reach of U in D - S.
      std::vector<bool> blocked(d.n(), false);
      for (Vertex v : sep.cut) {
        if (v < 0 || v >= d.n()) return false;
        blocked[v] = true;
      }
      if (!verify_separator(d, sources, sinks, sep)) return false;
      auto reach = reachable_from(d, sources.ids(), blocked);
      for (Vertex v : sep.reach) {
        if (!reach[v]) return false;
      }
      return true;
    }
    throw Error(ErrorCode::kParse, "unknown witness kind '" + kind + "'");
  }
  if (j.contains("L") && j.contains("k")) {
    auto cert = certificate_from_json(j);
    if (j.contains("bound") && guarded([&] { return j.at("bound").get<int>(); }) != cert.bound()) {
      return false;
    }
    try {
      cert.linked.check_range(d.n());
      if (cert.k < 1) return false;
      return is_k_linked(d, cert.linked, cert.k);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kVertexOutOfRange) return false;
      throw;
    }
  }
  throw Error(ErrorCode::kParse, "unrecognized witness document");
}

}  // namespace regcyc
