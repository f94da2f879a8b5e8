#pragma once

#include <string>

#include "json.hpp"

#include "coxeter/center.hpp"
#include "coxeter/inverse.hpp"
#include "coxeter/paklabel.hpp"

namespace coxeter {

using Json = nlohmann::ordered_json;

Json to_json(const Label& label);
Json to_json(const Permutation& pi);

// {"t": {"1,2": int, ...}, "label": [...], "chamber": [...], "bounded": bool}
Json region_record(const LabeledRegion& entry);

// Columns t_1_2, t_1_3, ..., label, chamber, bounded. Label and chamber
// entries are separated by spaces inside their column.
std::string csv_header(const CoxeterSpec& spec);
std::string csv_row(const LabeledRegion& entry);

// {"m": ..., "z": [...], "levels": [[...], ...]}
Json to_json(const CenterVector& center);

// {"pi": [...], "a": [...], "z": [...], "I": [...]}
Json to_json(const LabelInverse& inverse);

// {"catalan": bool, "prime": bool, "parking": bool, "z": [...]}
Json recognizer_report(const Label& label, int m);

Json to_json(const CensusRecord& record);

}  // namespace coxeter
