#include "io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "factorcomplex/errors.hpp"

namespace fcx::io {

namespace {

json big_to_json(const BigInt& v) {
  if (v <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(v);
  return v.str();
}

std::string format_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string()) {
    throw InvalidArgument("document has no \"format\" field");
  }
  return doc["format"].get<std::string>();
}

void expect_format(const json& doc, const std::string& format) {
  const auto f = format_of(doc);
  if (f != format) throw InvalidArgument("expected format " + format + ", got " + f);
}

template <class T>
T get_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

json complex_to_json(const SimplicialComplex& k, const json& meta) {
  json doc{{"format", "sc-v1"}};
  if (!meta.is_null()) doc["meta"] = meta;
  json vertices = json::array();
  for (const auto& v : k.vertices()) vertices.push_back({{"id", v.id}, {"label", v.label}});
  doc["vertices"] = std::move(vertices);
  json facets = json::array();
  for (const auto& f : k.facets()) facets.push_back(f);
  doc["facets"] = std::move(facets);
  return doc;
}

SimplicialComplex complex_from_json(const json& doc) {
  expect_format(doc, "sc-v1");
  std::vector<Vertex> vertices;
  for (const auto& v : get_field<json>(doc, "vertices")) {
    vertices.push_back({get_field<int>(v, "id"), v.contains("label") ? get_field<std::string>(v, "label") : ""});
    if (vertices.back().label.empty()) vertices.back().label = std::to_string(vertices.back().id);
  }
  std::vector<Face> facets;
  for (const auto& f : get_field<json>(doc, "facets")) {
    Face face;
    try {
      face = f.get<Face>();
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("bad facet: ") + e.what());
    }
    std::sort(face.begin(), face.end());
    facets.push_back(std::move(face));
  }
  return face_closure(std::move(vertices), facets);
}

json poset_to_json(const Poset& p, const json& meta) {
  json doc{{"format", "poset-v1"}};
  if (!meta.is_null()) doc["meta"] = meta;
  json elements = json::array();
  for (int i = 0; i < p.size(); ++i) elements.push_back({{"id", i}, {"label", p.label(i)}});
  doc["elements"] = std::move(elements);
  json hasse = json::array();
  for (const auto& [a, b] : p.hasse()) hasse.push_back({a, b});
  doc["hasse"] = std::move(hasse);
  return doc;
}

Poset poset_from_json(const json& doc) {
  expect_format(doc, "poset-v1");
  std::vector<std::string> labels;
  int expected = 0;
  for (const auto& e : get_field<json>(doc, "elements")) {
    if (get_field<int>(e, "id") != expected) throw InvalidArgument("poset element ids must be 0..N-1 in order");
    labels.push_back(e.contains("label") ? get_field<std::string>(e, "label") : std::to_string(expected));
    ++expected;
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& h : get_field<json>(doc, "hasse")) {
    if (!h.is_array() || h.size() != 2) throw InvalidArgument("hasse entries must be pairs");
    covers.emplace_back(h[0].get<int>(), h[1].get<int>());
  }
  return Poset::from_covers(std::move(labels), covers);
}

json homology_to_json(const HomologyReport& r, const json& meta) {
  json doc{{"format", "homology-v1"}};
  if (!meta.is_null()) doc["meta"] = meta;
  doc["coefficients"] = r.coefficients.name();
  doc["betti"] = r.betti;
  json torsion = json::array();
  for (const auto& t : r.torsion) {
    json row = json::array();
    for (const auto& v : t) row.push_back(big_to_json(v));
    torsion.push_back(std::move(row));
  }
  doc["torsion"] = std::move(torsion);
  doc["euler"] = r.euler;
  doc["face_counts"] = r.face_counts;
  return doc;
}

std::string homology_to_csv(const HomologyReport& r) {
  std::string out = "dimension,betti,torsion\n";
  for (std::size_t d = 0; d < r.betti.size(); ++d) {
    std::vector<std::string> t;
    if (d < r.torsion.size()) {
      for (const auto& v : r.torsion[d]) t.push_back(v.str());
    }
    out += std::to_string(d) + "," + std::to_string(r.betti[d]) + "," + join(t, ';') + "\n";
  }
  return out;
}

json graph_to_json(const LabeledGraph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back({{"id", v}, {"genus", g.genus(v)}});
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"format", "lg-v1"}, {"n", g.rank()}, {"base", g.base()}, {"vertices", vertices}, {"edges", edges}};
}

LabeledGraph graph_from_json(const json& doc) {
  expect_format(doc, "lg-v1");
  std::vector<int> genus;
  int expected = 0;
  for (const auto& v : get_field<json>(doc, "vertices")) {
    if (get_field<int>(v, "id") != expected++) throw InvalidArgument("graph vertex ids must be 0..V-1 in order");
    genus.push_back(get_field<int>(v, "genus"));
  }
  std::vector<LabeledGraph::EdgeEnds> edges;
  for (const auto& e : get_field<json>(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("edges must be pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return LabeledGraph(get_field<int>(doc, "n"), get_field<int>(doc, "base"), std::move(genus), std::move(edges));
}

json sphere_report_to_json(const SphereReport& r) {
  std::size_t total = 0;
  json checks = json::object();
  for (const auto& [name, count] : r.checked) {
    checks[name] = count;
    total += count;
  }
  json violations = json::array();
  for (const auto& v : r.violations) {
    json related = json::array();
    for (const auto& g : v.related) related.push_back(graph_to_json(g));
    violations.push_back({{"check", v.check}, {"message", v.message}, {"graph", graph_to_json(v.graph)},
                          {"related", related}});
  }
  return {{"format", "sphere-verify-v1"},
          {"meta", {{"model", "sphere"}, {"n", r.n}, {"max_edges", r.max_edges}}},
          {"graphs", r.graphs},
          {"checked", total},
          {"checks", checks},
          {"violations", violations},
          {"cut_reading_divergences", r.reading_divergences},
          {"cut_reading_outcome_changes", r.reading_outcome_changes}};
}

json quillen_report_to_json(const QuillenReport& r, bool order_preserving, const json& meta) {
  json fibers = json::array();
  for (const auto& f : r.fibers) {
    fibers.push_back({{"target", f.target},
                      {"label", f.label},
                      {"size", f.fiber_size},
                      {"reduced_betti", f.reduced_betti},
                      {"pass", f.pass}});
  }
  return {{"format", "phi-check-v1"},
          {"meta", meta},
          {"order_preserving", order_preserving},
          {"fibers", fibers},
          {"all_pass", r.all_pass && order_preserving}};
}

json bases_to_json(int n, int L, const std::vector<Basis>& bases) {
  json list = json::array();
  for (const auto& b : bases) {
    json row = json::array();
    for (const auto& w : b) row.push_back(format_word(w));
    list.push_back(std::move(row));
  }
  return {{"format", "bases-v1"}, {"n", n}, {"L", L}, {"bases", list}};
}

std::vector<Basis> bases_from_json(const json& doc, int n, int L) {
  expect_format(doc, "bases-v1");
  if (get_field<int>(doc, "n") != n || get_field<int>(doc, "L") != L) {
    throw InvalidArgument("cached bases are for different parameters");
  }
  std::vector<Basis> out;
  for (const auto& row : get_field<json>(doc, "bases")) {
    Basis b;
    for (const auto& w : row) b.push_back(parse_word(w.get<std::string>(), n));
    if (static_cast<int>(b.size()) != n || !fold(n, b).is_whole_group()) {
      throw InvalidArgument("cached entry is not a basis");
    }
    out.push_back(std::move(b));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

ReportTable merge_reports(const std::vector<std::string>& paths) {
  ReportTable table;
  std::string format;
  for (const auto& path : paths) {
    const json doc = read_json_file(path);
    const std::string f = format_of(doc);
    if (format.empty()) {
      format = f;
    } else if (f != format) {
      throw InvalidArgument("cannot merge " + format + " with " + f + " (" + path + ")");
    }
    const json meta = doc.value("meta", json::object());
    std::vector<std::string> row{path, scalar(meta.value("model", json())), scalar(meta.value("n", json())),
                                 scalar(meta.value("q", json())), scalar(meta.value("L", json()))};
    std::vector<std::string> stats;
    if (f == "homology-v1") {
      stats = {"coefficients", "euler", "betti", "torsion"};
      std::vector<std::string> betti;
      for (const auto& b : doc.at("betti")) betti.push_back(b.dump());
      std::vector<std::string> torsion;
      for (const auto& t : doc.at("torsion")) {
        std::vector<std::string> parts;
        for (const auto& v : t) parts.push_back(scalar(v));
        torsion.push_back(join(parts, '*'));
      }
      row.insert(row.end(), {scalar(doc.at("coefficients")), doc.at("euler").dump(), join(betti, ';'), join(torsion, ';')});
    } else if (f == "sc-v1") {
      const auto k = complex_from_json(doc);
      stats = {"vertices", "faces", "dimension"};
      row.insert(row.end(), {std::to_string(k.vertices().size()), std::to_string(k.face_count()),
                             std::to_string(k.dimension())});
    } else if (f == "poset-v1") {
      stats = {"elements", "hasse_edges"};
      row.insert(row.end(), {std::to_string(doc.at("elements").size()), std::to_string(doc.at("hasse").size())});
    } else if (f == "sphere-verify-v1") {
      stats = {"max_edges", "graphs", "checked", "violations"};
      row.insert(row.end(), {scalar(meta.value("max_edges", json())), doc.at("graphs").dump(),
                             doc.at("checked").dump(), std::to_string(doc.at("violations").size())});
    } else if (f == "phi-check-v1") {
      stats = {"fibers", "order_preserving", "all_pass"};
      row.insert(row.end(), {std::to_string(doc.at("fibers").size()), doc.at("order_preserving").dump(),
                             doc.at("all_pass").dump()});
    } else {
      throw InvalidArgument("unknown report format " + f);
    }
    if (table.columns.empty()) {
      table.columns = {"source", "model", "n", "q", "L"};
      table.columns.insert(table.columns.end(), stats.begin(), stats.end());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string table_to_csv(const ReportTable& t) {
  if (t.columns.empty()) return "";
  std::string out;
  std::vector<std::string> header;
  for (const auto& c : t.columns) header.push_back(csv_escape(c));
  out += join(header, ',') + "\n";
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(csv_escape(c));
    out += join(cells, ',') + "\n";
  }
  return out;
}

json table_to_json(const ReportTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return {{"format", "report-v1"}, {"rows", rows}};
}

}  // namespace fcx::io
