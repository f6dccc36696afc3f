#include "critval/persistence/serialize.hpp"

#include "critval/errors.hpp"
#include "critval/models/serialize.hpp"

namespace critval::persistence {

using models::number_from_json;
using models::number_to_json;
using nlohmann::json;

namespace {

json numbers(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number_to_json(x));
  return out;
}

}  // namespace

json to_json(const Barcode& bc) {
  json bars = json::array();
  for (const DecoratedBar& b : bc.bars)
    bars.push_back({{"birth", number_to_json(b.birth)},
                    {"death", number_to_json(b.death)},
                    {"birthClosed", b.birth_closed},
                    {"deathClosed", b.death_closed},
                    {"degree", b.degree}});
  return {{"label", bc.label}, {"bars", bars}};
}

Barcode barcode_from_json(const json& j) {
  try {
    Barcode bc;
    bc.label = j.value("label", std::string{});
    for (const json& b : j.at("bars")) {
      DecoratedBar bar{number_from_json(b.at("birth")), number_from_json(b.at("death")),
                       b.at("birthClosed").get<bool>(), b.at("deathClosed").get<bool>(), b.at("degree").get<int>()};
      validate(bar);
      bc.bars.push_back(bar);
    }
    return bc;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("barcode JSON: ") + e.what());
  }
}

json to_json(const MapWitness& w) {
  return {{"degree", w.degree}, {"x", number_to_json(w.x)}, {"y", number_to_json(w.y)},
          {"rank", w.rank},     {"dimX", w.dim_x},          {"dimY", w.dim_y}};
}

json to_json(const CriticalityReport& r) {
  json per = json::array();
  for (const DegreeVerdict& d : r.per_degree)
    per.push_back({{"degree", d.degree}, {"symmetric", to_string(d.symmetric)}, {"bs", to_string(d.bs)}});
  json out{{"value", number_to_json(r.value)},
           {"epsilon", number_to_json(r.epsilon)},
           {"symmetric", to_string(r.symmetric)},
           {"bs", to_string(r.bs)},
           {"perDegree", per}};
  out["symmetricWitness"] = r.symmetric_witness ? to_json(*r.symmetric_witness) : json(nullptr);
  out["bsWitness"] = r.bs_witness ? to_json(*r.bs_witness) : json(nullptr);
  return out;
}

json to_json(const CvlReport& r) {
  return {{"degree", r.degree},
          {"x", number_to_json(r.x)},
          {"y", number_to_json(r.y)},
          {"hypothesis", r.hypothesis},
          {"criticalValues", numbers(r.critical_values)},
          {"rank", r.rank},
          {"dimX", r.dim_x},
          {"dimY", r.dim_y},
          {"conclusion", r.conclusion},
          {"violation", r.violation}};
}

json to_json(const ScvlReport& r) {
  return {{"degree", r.degree},
          {"x", number_to_json(r.x)},
          {"y", number_to_json(r.y)},
          {"hypothesis", r.hypothesis},
          {"criticalValues", numbers(r.critical_values)},
          {"rank", r.rank},
          {"dimX", r.dim_x},
          {"dimY", r.dim_y},
          {"conclusion", r.conclusion},
          {"holds", r.holds}};
}

json to_json(const HfsReport& r) {
  json checks = json::array();
  for (const CorollaryCheck& c : r.checks)
    checks.push_back({{"degree", c.degree},
                      {"epsilon", number_to_json(c.epsilon)},
                      {"rank", c.rank},
                      {"dimClosed", c.dim_closed},
                      {"dimOpen", c.dim_open},
                      {"pass", c.pass}});
  return {{"value", number_to_json(r.value)}, {"corollaryHolds", r.corollary_holds}, {"checks", checks}};
}

json to_json(IsoInterval iv) { return {{"lo", number_to_json(iv.lo)}, {"hi", number_to_json(iv.hi)}}; }

}  // namespace critval::persistence
