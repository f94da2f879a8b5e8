#include "coxeter/serialize.hpp"

#include <sstream>

namespace coxeter {

namespace {

std::string joined(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Json to_json(const Label& label) { return Json(label.values()); }

Json to_json(const Permutation& pi) { return Json(pi.one_line()); }

Json region_record(const LabeledRegion& entry) {
  const auto& spec = entry.region.spec();
  Json t = Json::object();
  for (int i = 1; i <= spec.n(); ++i) {
    for (int j = i + 1; j <= spec.n(); ++j) {
      t[std::to_string(i) + "," + std::to_string(j)] = entry.region.interval(i, j);
    }
  }
  Json record;
  record["t"] = std::move(t);
  record["label"] = to_json(entry.label);
  record["chamber"] = to_json(chamber_of(entry.region));
  record["bounded"] = is_relatively_bounded(entry.region);
  return record;
}

std::string csv_header(const CoxeterSpec& spec) {
  std::ostringstream out;
  for (int i = 1; i <= spec.n(); ++i) {
    for (int j = i + 1; j <= spec.n(); ++j) out << "t_" << i << '_' << j << ',';
  }
  out << "label,chamber,bounded";
  return out.str();
}

std::string csv_row(const LabeledRegion& entry) {
  std::ostringstream out;
  for (int v : entry.region.intervals()) out << v << ',';
  out << joined(entry.label.values()) << ',' << joined(chamber_of(entry.region).one_line()) << ','
      << (is_relatively_bounded(entry.region) ? "true" : "false");
  return out.str();
}

Json to_json(const CenterVector& center) {
  Json out;
  out["m"] = center.m;
  out["z"] = center.z;
  out["levels"] = center.levels;
  return out;
}

Json to_json(const LabelInverse& inverse) {
  Json out;
  out["pi"] = to_json(inverse.pi);
  out["a"] = to_json(inverse.a);
  out["z"] = inverse.center.z;
  out["I"] = inverse.table.values();
  return out;
}

Json recognizer_report(const Label& label, int m) {
  Json out;
  out["catalan"] = is_m_catalan(label, m);
  out["prime"] = is_prime_m_catalan(label, m);
  out["parking"] = is_m_parking(label, m);
  out["z"] = center_vector(label, m).z;
  return out;
}

Json to_json(const CensusRecord& record) {
  Json out;
  out["n"] = record.spec.n();
  out["k"] = record.spec.k();
  out["l"] = record.spec.l();
  out["regions"] = record.regions;
  out["distinct_labels"] = record.distinct_labels;
  out["bijective"] = record.bijective();
  out["fundamental_regions"] = record.fundamental_regions;
  out["fuss_catalan"] = record.fuss_catalan;
  out["relatively_bounded"] = record.relatively_bounded;
  out["formula_regions"] = record.formula_regions ? Json(*record.formula_regions) : Json(nullptr);
  Json collisions = Json::array();
  for (const auto& c : record.collisions) {
    Json entry;
    entry["label"] = to_json(c.label);
    Json regions = Json::array();
    for (const auto& r : c.regions) regions.push_back(r.intervals());
    entry["regions"] = std::move(regions);
    collisions.push_back(std::move(entry));
  }
  out["collisions"] = std::move(collisions);
  return out;
}

}  // namespace coxeter
