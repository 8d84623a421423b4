// factorcomplex: batch front-end for the common basis complex toolkit.
//
// Exit status: 0 ok, 2 invalid parameters or input, 3 size cap exceeded,
// 4 invariant breach or verifier violation (a witness is written to stderr).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "factorcomplex/errors.hpp"
#include "factorcomplex/field.hpp"
#include "factorcomplex/freegroup.hpp"
#include "factorcomplex/homology.hpp"
#include "factorcomplex/poset.hpp"
#include "factorcomplex/spheres.hpp"
#include "io.hpp"

namespace {

using fcx::io::json;

constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;

struct Config {
  std::string command;
  int n = 0;
  int q = 0;
  int L = 0;
  int max_edges = 0;
  std::string coefficients = "Q";
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed;
  std::string out;
  std::vector<std::string> in;
  std::string format;  // empty: per-command default
};

json config_json(const Config& c) {
  return {{"command", c.command}, {"n", c.n},         {"q", c.q},         {"L", c.L},
          {"max_edges", c.max_edges}, {"coefficients", c.coefficients}, {"seed", c.seed}};
}

// A verifier found a counterexample: exits 4 after the report is written.
struct Violation {
  json witness;
};

void emit(const Config& c, const json& doc) { fcx::io::write_text(c.out, doc.dump() + "\n"); }

json field_meta(const Config& c) { return {{"model", "field"}, {"n", c.n}, {"q", c.q}}; }

std::vector<fcx::Basis> cached_bases(const Config& c) {
  const char* dir = std::getenv("FACTORCOMPLEX_CACHE");
  if (dir == nullptr || *dir == '\0') return fcx::enumerate_bases(c.n, c.L, c.threads);
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / ("bases-n" + std::to_string(c.n) + "-L" + std::to_string(c.L) + ".json");
  if (fs::exists(path)) return fcx::io::bases_from_json(fcx::io::read_json_file(path.string()), c.n, c.L);
  auto bases = fcx::enumerate_bases(c.n, c.L, c.threads);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp";
  fcx::io::write_text(tmp.string(), fcx::io::bases_to_json(c.n, c.L, bases).dump() + "\n");
  fs::rename(tmp, path, ec);
  return bases;
}

void run_homology(const Config& c) {
  if (c.in.size() != 1) throw fcx::InvalidArgument("homology takes exactly one --in file");
  const json doc = fcx::io::read_json_file(c.in.front());
  const json meta = doc.value("meta", json());
  fcx::SimplicialComplex k;
  const std::string format = doc.value("format", "");
  if (format == "sc-v1") {
    k = fcx::io::complex_from_json(doc);
  } else if (format == "poset-v1") {
    k = fcx::order_complex(fcx::io::poset_from_json(doc));
  } else {
    throw fcx::InvalidArgument("homology expects sc-v1 or poset-v1 input, got \"" + format + "\"");
  }
  fcx::HomologyOptions opts;
  opts.coefficients = fcx::Coefficients::parse(c.coefficients);
  opts.rank.seed = c.seed;
  const auto report = fcx::homology_report(k, opts);
  if (c.format == "csv") {
    fcx::io::write_text(c.out, fcx::io::homology_to_csv(report));
  } else {
    emit(c, fcx::io::homology_to_json(report, meta));
  }
}

void run_phi_check(const Config& c) {
  fcx::check_field_caps(c.n, c.q);
  const auto phi = fcx::phi_map(c.n, c.q);
  const bool order_preserving = fcx::is_order_preserving(phi.map);
  const auto report = fcx::check_quillen_fibers(phi.map, c.threads);
  const json doc = fcx::io::quillen_report_to_json(report, order_preserving, field_meta(c));
  emit(c, doc);
  if (!doc["all_pass"].get<bool>()) {
    json failing = json::array();
    for (const auto& f : doc["fibers"]) {
      if (!f["pass"].get<bool>()) failing.push_back(f);
    }
    throw Violation{{{"order_preserving", order_preserving}, {"failing_fibers", failing}}};
  }
}

void run_sphere_verify(const Config& c) {
  const auto report = fcx::verify_all(c.n, c.max_edges, c.threads);
  const json doc = fcx::io::sphere_report_to_json(report);
  emit(c, doc);
  std::cerr << "checked: " << doc["checked"].get<std::size_t>() << ", violations: " << report.violations.size()
            << "\n";
  if (!report.violations.empty()) throw Violation{doc["violations"]};
}

void run_report(const Config& c) {
  const auto table = fcx::io::merge_reports(c.in);
  const bool json_path = c.out.size() > 5 && c.out.substr(c.out.size() - 5) == ".json";
  const bool as_json = c.format == "json" || (c.format.empty() && json_path);
  fcx::io::write_text(c.out, as_json ? fcx::io::table_to_json(table).dump() + "\n" : fcx::io::table_to_csv(table));
}

void dispatch(const Config& c) {
  if (c.command == "build-cb-field") {
    fcx::check_field_caps(c.n, c.q);
    emit(c, fcx::io::complex_to_json(fcx::build_CB(c.n, c.q, c.threads), field_meta(c)));
  } else if (c.command == "build-pd-field") {
    emit(c, fcx::io::poset_to_json(*fcx::build_PD(c.n, c.q).poset, field_meta(c)));
  } else if (c.command == "build-fcd-field") {
    emit(c, fcx::io::poset_to_json(*fcx::build_FCD(c.n, c.q).poset, field_meta(c)));
  } else if (c.command == "phi-check") {
    run_phi_check(c);
  } else if (c.command == "build-cb-free") {
    const auto bases = cached_bases(c);
    const auto cb = fcx::build_truncated_CB(c.n, bases, c.threads);
    emit(c, fcx::io::complex_to_json(cb.complex, {{"model", "free"}, {"n", c.n}, {"L", c.L}}));
  } else if (c.command == "homology") {
    run_homology(c);
  } else if (c.command == "sphere-verify") {
    run_sphere_verify(c);
  } else if (c.command == "report") {
    run_report(c);
  }
}

void print_witness(const Config& c, const std::string& error, const json& witness) {
  std::cerr << json{{"error", error}, {"config", config_json(c)}, {"witness", witness}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common basis complexes, free factor posets and sphere-system dual graphs"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--seed", cfg.seed, "Seed for randomized rank shortcuts");
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Ambient dimension")->required();
    sub->add_option("--q", cfg.q, "Field order")->required();
  };

  auto* cb_field = app.add_subcommand("build-cb-field", "Common basis complex of GF(q)^n (sc-v1)");
  add_field(cb_field);
  add_common(cb_field);
  auto* pd_field = app.add_subcommand("build-pd-field", "Partial decomposition poset of GF(q)^n (poset-v1)");
  add_field(pd_field);
  add_common(pd_field);
  auto* fcd_field = app.add_subcommand("build-fcd-field", "Poset FCD of GF(q)^n (poset-v1)");
  add_field(fcd_field);
  add_common(fcd_field);
  auto* phi = app.add_subcommand("phi-check", "Order preservation and lower fibers of phi");
  add_field(phi);
  add_common(phi);

  auto* cb_free = app.add_subcommand("build-cb-free", "Truncated common basis complex of F_n (sc-v1)");
  cb_free->add_option("--n", cfg.n, "Rank")->required();
  cb_free->add_option("--L", cfg.L, "Maximal length of basis elements")->required();
  add_common(cb_free);

  auto* homology = app.add_subcommand("homology", "Reduced homology of an sc-v1 complex or poset-v1 poset");
  homology->add_option("--in", cfg.in, "Input file")->required()->expected(1);
  homology->add_option("--coefficients", cfg.coefficients, "Q or GFp:<p>");
  homology->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(homology);

  auto* sphere = app.add_subcommand("sphere-verify", "Exhaustive dual-graph lemma checks");
  sphere->add_option("--n", cfg.n, "Total rank")->required();
  sphere->add_option("--max-edges", cfg.max_edges, "Maximal number of edges")->required();
  add_common(sphere);

  auto* report = app.add_subcommand("report", "Merge reports of one format into a table");
  report->add_option("--in", cfg.in, "Input reports")->expected(0, -1);
  report->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    dispatch(cfg);
  } catch (const Violation& v) {
    print_witness(cfg, "verifier violation", v.witness);
    return kExitInvariant;
  } catch (const fcx::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const fcx::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const fcx::InvariantBreach& e) {
    json witness = json();
    if (!e.witness().empty()) {
      witness = json::parse(e.witness(), nullptr, false);
      if (witness.is_discarded()) witness = e.witness();
    }
    print_witness(cfg, e.what(), witness);
    return kExitInvariant;
  } catch (const std::exception& e) {
    print_witness(cfg, e.what(), json());
    return kExitInvariant;
  }
  return 0;
}
