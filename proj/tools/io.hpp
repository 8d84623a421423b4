#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "factorcomplex/field.hpp"
#include "factorcomplex/freegroup.hpp"
#include "factorcomplex/homology.hpp"
#include "factorcomplex/poset.hpp"
#include "factorcomplex/spheres.hpp"

namespace fcx::io {

using nlohmann::json;

json complex_to_json(const SimplicialComplex& k, const json& meta);
SimplicialComplex complex_from_json(const json& doc);

json poset_to_json(const Poset& p, const json& meta);
Poset poset_from_json(const json& doc);

json homology_to_json(const HomologyReport& r, const json& meta);
/// One row per dimension: dimension,betti,torsion.
std::string homology_to_csv(const HomologyReport& r);

json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const json& doc);

json sphere_report_to_json(const SphereReport& r);
json quillen_report_to_json(const QuillenReport& r, bool order_preserving, const json& meta);

json bases_to_json(int n, int L, const std::vector<Basis>& bases);
std::vector<Basis> bases_from_json(const json& doc, int n, int L);

/// Reads and parses a JSON file; throws InvalidArgument when the file is
/// missing or malformed.
json read_json_file(const std::string& path);
/// Writes to `path`, or stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Merges reports of a single format into one row per input. Throws
/// InvalidArgument when the inputs mix formats or use an unknown one.
ReportTable merge_reports(const std::vector<std::string>& paths);
std::string table_to_csv(const ReportTable& t);
json table_to_json(const ReportTable& t);

}  // namespace fcx::io
