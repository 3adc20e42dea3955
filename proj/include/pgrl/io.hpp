#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "pgrl/bounds.hpp"
#include "pgrl/isotropy.hpp"
#include "pgrl/verifier.hpp"
#include "pgrl/zeroideal.hpp"

namespace pgrl {

using nlohmann::json;

/// Shared matrix text format: per matrix a header line `p n m`, then n rows
/// of m space-separated integers in [0, p); matrices separated by blank
/// lines. Rejects out-of-range entries and empty files.
std::vector<Matrix> parse_matrices(std::istream& in);
std::vector<Matrix> parse_matrix_file(const std::string& path);

/// Form file: header `p r n k`, then k blocks of n x n integers over p^r.
/// The strict upper triangle is authoritative; diagonal and lower triangle
/// are forced by the alternating property.
VectorForm parse_form(std::istream& in);
VectorForm parse_form_file(const std::string& path);

json matrix_to_json(const Matrix& m);

json certificate_to_json(const MatAlgebra& alg, const ZeroIdealCertificate& cert);
/// Inverse of certificate_to_json; validates shape and span closure.
ZeroIdealCertificate certificate_from_json(const json& j);

json form_to_json(const VectorForm& form);
json subspace_to_json(const Subspace& s);
json report_to_json(const BuilderReport& report);
json ranks_to_json(const SmallGroupRanks& ranks);
json bound_table_to_json(const BoundTable& table);
json search_report_to_json(const FormSearchReport& report);

} // namespace pgrl
