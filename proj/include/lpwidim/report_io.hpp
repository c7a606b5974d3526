#pragma once

// JSON and CSV renderings of the report records. JSON field names match
// the record members; reals are written with 17 significant digits in CSV
// and as shortest round-trip decimals in JSON, so both re-parse exactly.

#include <json.hpp>
#include <string>
#include <vector>

#include "lpwidim/bounds.hpp"
#include "lpwidim/certify.hpp"
#include "lpwidim/core.hpp"
#include "lpwidim/group_dynamics.hpp"

namespace lpwidim::io {

using Json = nlohmann::ordered_json;

/// %.17g with '.' as the decimal separator.
std::string format_real(double v);

Json exponent_to_json(Exponent e);
Exponent exponent_from_json(const Json& j);

Json to_json(const Exponents& e);
Exponents exponents_from_json(const Json& j);

Json to_json(const CertificationReport& r);
CertificationReport certification_from_json(const Json& j);
std::string csv_header(const CertificationReport*);
std::string csv_row(const CertificationReport& r);

Json to_json(const WidimBoundReport& r);
WidimBoundReport widim_report_from_json(const Json& j);
std::string csv_header(const WidimBoundReport*);
std::string csv_row(const WidimBoundReport& r);

Json to_json(const EmbeddingCheckReport& r);
EmbeddingCheckReport embedding_report_from_json(const Json& j);
std::string csv_header(const EmbeddingCheckReport*);
std::string csv_row(const EmbeddingCheckReport& r);

Json to_json(const MeanDimensionRow& r);
MeanDimensionRow mean_dimension_row_from_json(const Json& j);
std::string csv_header(const MeanDimensionRow*);
std::string csv_row(const MeanDimensionRow& r);

}  // namespace lpwidim::io
