#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrlie/arrangement.hpp"
#include "arrlie/fibration.hpp"
#include "arrlie/holonomy.hpp"
#include "arrlie/lattice.hpp"
#include "arrlie/os_algebra.hpp"
#include "arrlie/series.hpp"

using nlohmann::json;
using namespace arrlie;

namespace {

enum ExitCode { EXIT_OK = 0, EXIT_VIOLATION = 1, EXIT_ERROR = 2 };

int emit(const std::string& command, const json& payload, const std::string& status,
         bool pretty) {
  json report{{"command", command}, {"payload", payload}, {"status", status}};
  std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
  if (status == "ok") return EXIT_OK;
  if (status == "violation") return EXIT_VIOLATION;
  return EXIT_ERROR;
}

struct LoadedFile {
  std::optional<Arrangement> arrangement;        // set for arrangement files
  std::optional<FiberedPresentation> fibered;    // set for fibered files
};

LoadedFile load_input(const std::string& path) {
  json doc = load_json_file(path);
  LoadedFile f;
  if (doc.is_object() && doc.contains("hyperplanes")) {
    f.arrangement = parse_arrangement(doc);
  } else if (doc.is_object() && doc.contains("levels")) {
    f.fibered = parse_fibered(doc);
  } else {
    throw InputError("'" + path + "' is neither an arrangement nor a fibered file");
  }
  return f;
}

// Arrangement for commands that accept either file kind.
Arrangement arrangement_of(const LoadedFile& f) {
  if (f.arrangement) return *f.arrangement;
  return underlying_arrangement(*f.fibered);
}

FiberedPresentation fibered_of(const LoadedFile& f, const std::string& command) {
  if (!f.fibered)
    throw InputError("the " + command + " command needs a fibered input file");
  return *f.fibered;
}

json polynomial_json(const IntPolynomial& p) {
  json out = json::array();
  for (const Int& c : p) out.push_back(c.convert_to<long long>());
  return out;
}

int cmd_lattice(const std::string& path, int k, bool full, bool pretty) {
  LoadedFile f = load_input(path);
  Arrangement a = arrangement_of(f);
  IntersectionPoset poset = build_poset(a);
  IntPolynomial p = poincare_polynomial(poset);

  json payload;
  payload["dimension"] = a.dimension;
  payload["num_hyperplanes"] = a.size();
  payload["num_flats"] = poset.flats.size();
  payload["k"] = k;
  payload["poincare"] = polynomial_json(p);
  if (k > 1) payload["poincare_redundant"] = polynomial_json(poincare_redundant(p, k));
  if (full) payload["poset"] = poset_to_json(poset);
  return emit("lattice", payload, "ok", pretty);
}

int cmd_os(const std::string& path, int k, int max_q, bool has_max_q, bool pretty) {
  LoadedFile f = load_input(path);
  Arrangement a = arrangement_of(f);
  IntersectionPoset poset = build_poset(a);
  if (!has_max_q) max_q = a.dimension;
  CheckReport rep = verify_os_poincare(a, poset, k, max_q);
  return emit("os", rep.payload, rep.status(), pretty);
}

int cmd_fibration(const std::string& path, bool search, bool pretty) {
  LoadedFile f = load_input(path);
  json payload;
  FiberedPresentation fp;
  if (f.fibered) {
    fp = *f.fibered;
  } else if (search) {
    PermutationSearch found = search_permutations(*f.arrangement);
    if (!found.presentation) {
      payload["fiber_type"] = false;
      payload["note"] = "no coordinate order satisfies the levelwise condition";
      return emit("fibration", payload, "violation", pretty);
    }
    fp = *found.presentation;
    payload["permutation"] = found.permutation;
  } else {
    throw InputError("arrangement input needs --search-permutations");
  }

  CheckReport chk = check_fibered(fp);
  payload["fiber_type"] = chk.ok;
  payload["exponents"] = chk.payload["exponents"];
  if (!chk.ok) {
    payload["violations"] = chk.payload["violations"];
    return emit("fibration", payload, "violation", pretty);
  }

  IncidenceData inc = incidence_sets(fp);
  Arrangement a = underlying_arrangement(fp);
  json incj = json::array();
  for (const auto& [key, pairs] : inc.sets) {
    json item;
    item["level"] = key.first;
    item["hyperplane"] = a.hyperplanes[key.second].name;
    json pj = json::array();
    for (const auto& [i, m] : pairs) pj.push_back({i, m});
    item["pairs"] = pj;
    incj.push_back(std::move(item));
  }
  payload["incidence"] = std::move(incj);

  CheckReport flats = verify_incidence_vs_flats(fp, build_poset(a));
  payload["incidence_vs_flats"] = flats.payload;
  payload["incidence_vs_flats"]["status"] = flats.status();
  return emit("fibration", payload, flats.status(), pretty);
}

int cmd_lie(const std::string& path, int k, int max_weight, bool verify, bool oracle,
            bool pretty) {
  LoadedFile f = load_input(path);
  FiberedPresentation fp = fibered_of(f, "lie");
  HolonomyLie h = build_holonomy(fp, k);

  json payload;
  payload["k"] = k;
  payload["exponents"] = h.exponents;
  std::vector<Int> dims = graded_dimensions(h, max_weight);
  json dimsj = json::array();
  for (int n = 1; n <= max_weight; ++n) {
    dimsj.push_back({{"weight", n},
                     {"degree", 2 * n * k},
                     {"dim", dims[n - 1].convert_to<long long>()}});
  }
  payload["dimensions"] = std::move(dimsj);

  bool all_ok = true;
  if (verify) {
    CheckReport rep = verify_relations(h, build_poset(h.underlying));
    payload["relations"] = rep.payload;
    payload["relations"]["status"] = rep.status();
    all_ok = all_ok && rep.ok;
  }
  if (oracle) {
    IntersectionPoset poset = build_poset(h.underlying);
    Presentation pres = emit_presentation(h.underlying, poset, 2 * k);
    std::vector<Int> presented = presented_dims_bruteforce(pres, max_weight);
    json table = json::array();
    bool match = true;
    for (int n = 1; n <= max_weight; ++n) {
      bool okn = presented[n - 1] == dims[n - 1];
      match = match && okn;
      table.push_back({{"weight", n},
                       {"expected", dims[n - 1].convert_to<long long>()},
                       {"actual", presented[n - 1].convert_to<long long>()},
                       {"status", okn ? "ok" : "mismatch"}});
    }
    payload["oracle"] = {{"table", std::move(table)}, {"status", match ? "ok" : "mismatch"}};
    all_ok = all_ok && match;
  }
  return emit("lie", payload, all_ok ? "ok" : "violation", pretty);
}

int cmd_series(const std::string& path, int k, int truncate, bool pretty) {
  LoadedFile f = load_input(path);
  FiberedPresentation fp = fibered_of(f, "series");
  if (truncate < 0) throw std::invalid_argument("--truncate must be >= 0");
  HolonomyLie h = build_holonomy(fp, k);
  CheckReport rep = verify_series_match(h, truncate);
  rep.payload["k"] = k;
  rep.payload["equal"] = rep.ok;
  return emit("series", rep.payload, rep.status(), pretty);
}

int cmd_present(const std::string& path, int k, bool graded, bool poisson, int q, bool has_q,
                bool pretty) {
  LoadedFile f = load_input(path);
  json payload;
  Arrangement a;
  bool fiber_type;
  if (f.fibered) {
    CheckReport chk = check_fibered(*f.fibered);
    if (!chk.ok) throw InputError("fibered input violates the levelwise condition");
    a = underlying_arrangement(*f.fibered);
    fiber_type = true;
  } else {
    a = *f.arrangement;
    fiber_type = search_permutations(a).presentation.has_value();
  }
  IntersectionPoset poset = build_poset(a);

  Presentation pres;
  if (poisson) {
    if (!graded) throw InputError("--poisson needs a graded presentation; pass --k");
    if (!has_q) q = 2 * k;  // middle of the admissible range, always valid
    pres = emit_poisson_presentation(a, poset, k, q);
    payload["q"] = q;
  } else {
    // without --k the ungraded algebra is presented, weight in place of degree
    pres = emit_presentation(a, poset, graded ? 2 * k : 1);
  }
  payload["graded"] = graded;
  if (graded) payload["k"] = k;
  payload["fiber_type"] = fiber_type;
  if (!fiber_type)
    payload["note"] = "input is not fiber-type; the presentation is unverified";
  payload["presentation"] = presentation_to_json(pres);
  return emit("present", payload, "ok", pretty);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of rational hyperplane arrangements"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --pretty appear after the subcommand as well
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");

  std::string path;
  int k = 1, max_q = 0, max_weight = 5, truncate = 40, q = 0;
  bool full = false, search = false, verify = false, oracle = false, poisson = false;

  CLI::App* lattice = app.add_subcommand("lattice", "intersection poset and its polynomial");
  lattice->add_option("file", path)->required();
  lattice->add_option("--k", k, "redundancy parameter");
  lattice->add_flag("--full", full, "dump every flat");

  CLI::App* os = app.add_subcommand("os", "graded dimensions against the polynomial");
  os->add_option("file", path)->required();
  os->add_option("--k", k, "redundancy parameter");
  CLI::Option* maxq_opt = os->add_option("--max-q", max_q, "top degree to check");

  CLI::App* fib = app.add_subcommand("fibration", "levelwise structure and incidence");
  fib->add_option("file", path)->required();
  fib->add_flag("--search-permutations", search, "try every coordinate order");

  CLI::App* lie = app.add_subcommand("lie", "the graded Lie algebra of a fibered input");
  lie->add_option("file", path)->required();
  lie->add_option("--k", k, "regrading parameter");
  lie->add_option("--max-weight", max_weight, "top weight to report");
  lie->add_flag("--verify-relations", verify, "check the flat relations");
  lie->add_flag("--oracle", oracle, "compare against the presented quotient");

  CLI::App* series = app.add_subcommand("series", "enveloping-algebra Hilbert series");
  series->add_option("file", path)->required();
  series->add_option("--k", k, "regrading parameter");
  series->add_option("--truncate", truncate, "truncation order");

  CLI::App* present = app.add_subcommand("present", "export generators and relations");
  present->add_option("file", path)->required();
  CLI::Option* k_opt = present->add_option("--k", k, "regrading parameter (omit for ungraded)");
  present->add_flag("--poisson", poisson, "Poisson variant");
  CLI::Option* q_opt = present->add_option("--q", q, "bracket degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    return emit("arrlie", json{{"message", e.what()}}, "error", pretty);
  }

  std::string active = app.get_subcommands().front()->get_name();
  try {
    if (lattice->parsed()) return cmd_lattice(path, k, full, pretty);
    if (os->parsed()) return cmd_os(path, k, max_q, maxq_opt->count() > 0, pretty);
    if (fib->parsed()) return cmd_fibration(path, search, pretty);
    if (lie->parsed()) return cmd_lie(path, k, max_weight, verify, oracle, pretty);
    if (series->parsed()) return cmd_series(path, k, truncate, pretty);
    if (present->parsed())
      return cmd_present(path, k, k_opt->count() > 0, poisson, q, q_opt->count() > 0, pretty);
    return EXIT_ERROR;
  } catch (const std::exception& e) {
    return emit(active, json{{"message", e.what()}}, "error", pretty);
  }
}
