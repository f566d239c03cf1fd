#include "strongfact/certificate.hpp"

#include <cmath>
#include "json.hpp"

namespace strongfact {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json exponent_json(const Exponent& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

ordered_json number_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

ordered_json seq_json(const TruncatedSeq& s) {
  ordered_json j;
  j["index_domain"] = s.domain() == IndexDomain::Nat1 ? "NAT1" : "ZSYM";
  j["values"] = s.vec();
  return j;
}

ordered_json norm_json(const NormValue& n) {
  ordered_json j;
  j["value"] = number_json(n.value);
  j["exponent"] = exponent_json(n.exponent);
  return j;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Factors: return "FACTORS";
    case Verdict::DoesNotFactor: return "DOES_NOT_FACTOR";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_json(const SeqSpaceSpec& space, int indent) {
  ordered_json j;
  switch (space.kind) {
    case SeqSpaceSpec::Kind::Lp: j["kind"] = "LP"; break;
    case SeqSpaceSpec::Kind::LpWeighted: j["kind"] = "LP_WEIGHTED"; break;
    case SeqSpaceSpec::Kind::KelloggMixed: j["kind"] = "KELLOGG_MIXED"; break;
  }
  j["p"] = exponent_json(space.p);
  if (space.kind == SeqSpaceSpec::Kind::KelloggMixed) j["q"] = exponent_json(space.q);
  if (space.weight) j["weight"] = seq_json(*space.weight);
  return j.dump(indent);
}

std::string to_json(const Certificate& c, std::string_view timestamp, int indent) {
  ordered_json j;
  j["check"] = c.check;
  j["verdict"] = std::string(to_string(c.verdict));
  j["g"] = c.g ? seq_json(*c.g) : ordered_json(nullptr);
  j["h"] = c.h ? seq_json(*c.h) : ordered_json(nullptr);
  if (c.alpha) j["alpha"] = seq_json(*c.alpha);

  ordered_json ex = ordered_json::object();
  for (const auto& [name, e] : c.exponents) ex[name] = exponent_json(e);
  j["exponents"] = ex;

  j["g_norm"] = c.g_norm ? norm_json(*c.g_norm) : ordered_json(nullptr);
  if (c.h_norm) j["h_norm"] = norm_json(*c.h_norm);
  j["residual"] = number_json(c.residual);
  if (c.c_hat) j["c_hat"] = number_json(*c.c_hat);
  if (c.vertex_c_hat) j["vertex_c_hat"] = number_json(*c.vertex_c_hat);

  if (c.witness) {
    const Witness& w = *c.witness;
    ordered_json wj;
    wj["reason"] = w.reason;
    wj["row"] = w.row;
    wj["col"] = w.col;
    if (w.ref_col) wj["ref_col"] = *w.ref_col;
    if (w.sample) wj["sample"] = *w.sample;
    wj["found"] = number_json(w.found);
    wj["expected"] = number_json(w.expected);
    if (w.lhs) wj["lhs"] = number_json(*w.lhs);
    if (w.rhs) wj["rhs"] = number_json(*w.rhs);
    if (w.pattern) {
      wj["pattern"] = {{"rows", w.pattern->rows}, {"cols", w.pattern->cols}, {"values", w.pattern->values}};
    }
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }

  j["tolerances"] = {{"tol", c.tol}};
  j["seed"] = c.seed ? ordered_json(*c.seed) : ordered_json(nullptr);
  j["truncation_N"] = c.truncation;
  if (c.j0) j["j0"] = *c.j0;
  j["notes"] = c.notes;
  if (!timestamp.empty()) j["timestamp"] = std::string(timestamp);
  return j.dump(indent);
}

}  // namespace strongfact
