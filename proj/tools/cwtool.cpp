#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cw/topo.hpp"

using json = nlohmann::ordered_json;
using namespace cw;

namespace {

std::string mono_str(const RingPresentation& r, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += r.gens()[i].name;
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Twist> all_twists(std::size_t dim) {
  std::vector<Twist> out;
  for (std::size_t m = 0; m < (std::size_t{1} << dim); ++m) {
    Twist t = Twist::trivial(dim);
    for (std::size_t i = 0; i < dim; ++i) t.bits[i] = (m >> i) & 1;
    out.push_back(t);
  }
  return out;
}

json compute_report(const SpaceTheories& st, int max_deg) {
  json doc;
  doc["space"] = st.expr.str();
  doc["field"] = st.field.name();
  doc["bound"] = max_deg;
  doc["bidegrees"] = json::array();
  for (int d = 0; d <= max_deg; ++d)
    for (const Twist& t : all_twists(st.expr.twist_dim())) {
      Realization r = realize(st.stack.cw, d, t);
      json row;
      row["degree"] = d;
      row["twist"] = t.str();
      row["invariant_factors"] = json::array();
      for (const Int& f : r.group.invariants())
        if (f != 0) row["invariant_factors"].push_back(f.str());
      row["free_rank"] = r.group.free_rank();
      row["rho_image_index"] = rho_image_index(st, d, t).str();
      row["generators"] = json::array();
      for (const Exponents& m : r.monomials)
        row["generators"].push_back(mono_str(st.stack.cw, m));
      doc["bidegrees"].push_back(std::move(row));
    }
  doc["checks"] = json::array();
  return doc;
}

void print_table(const json& doc) {
  std::cout << doc["space"].get<std::string>() << " over "
            << doc["field"].get<std::string>() << ", degrees 0.."
            << doc["bound"].get<int>() << "\n";
  for (const json& row : doc["bidegrees"]) {
    std::string inv;
    for (const json& f : row["invariant_factors"])
      inv += (inv.empty() ? "" : ",") + f.get<std::string>();
    std::string gens;
    for (const json& g : row["generators"])
      gens += (gens.empty() ? "" : " ") + g.get<std::string>();
    std::cout << "(" << row["degree"].get<int>() << ", "
              << row["twist"].get<std::string>() << ")  invariants=["
              << inv << "]  free_rank=" << row["free_rank"].get<int>()
              << "  rho_index=" << row["rho_image_index"].get<std::string>()
              << "  generators: " << gens << "\n";
  }
}

int run_compute(const std::string& space, const std::string& field,
                int max_deg, bool as_json) {
  SpaceTheories st = build_space(space, field, max_deg + 1);
  json doc = compute_report(st, max_deg);
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    print_table(doc);
  return 0;
}

int run_compare(const std::string& space, const std::string& field,
                int max_deg) {
  SpaceTheories st = build_space(space, field, max_deg + 1);
  SpaceVerification v = verify_space(st, max_deg);
  for (const std::string& l : v.log) std::cout << "# " << l << "\n";
  if (!v.relations_ok) std::cout << "relations: FAIL\n";
  for (const BidegreeCheck& c : v.checks)
    std::cout << "(" << c.degree << ", " << c.twist.str() << ")  derived="
              << c.derived << "  presented=" << c.presented << "  "
              << (c.ok ? "ok" : "MISMATCH")
              << (c.note.empty() ? "" : "  [" + c.note + "]") << "\n";
  std::cout << (v.all_ok() ? "compare: all bidegrees agree\n"
                           : "compare: FAILURE\n");
  return v.all_ok() ? 0 : 1;
}

int run_kunneth(const std::string& space, const std::string& field,
                int max_deg) {
  SpaceExpr e = SpaceExpr::parse(space);
  if (e.factors.size() != 2)
    throw std::invalid_argument("kunneth needs a two-factor product");
  KunnethReport r = kunneth_verdict(e.factors[0], e.factors[1],
                                    FieldModel::parse(field), max_deg + 1,
                                    max_deg);
  std::cout << r.x.str() << " (x) " << r.y.str() << " -> " << r.product.str()
            << ": " << verdict_name(r.overall) << "\n";
  for (const BidegreeReport& b : r.reports)
    std::cout << "  (" << b.degree << ", " << b.twist.str() << ") "
              << b.left_group << " -> " << b.right_group << ": "
              << verdict_name(b.verdict) << "\n";
  if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  return 0;
}

int run_oracle(const std::string& space, const std::string& field, int max_deg,
               int levels) {
  SpaceTheories st = build_space(space, field, max_deg + 2);
  bool ok = true;
  for (const CycleClassReport& r : cycle_class_sweep(st, max_deg, levels)) {
    bool good = r.match == r.expected_match;
    ok = ok && good;
    std::cout << "H^" << r.degree << "(level " << r.level << ", "
              << r.twist.str() << ")  algebraic=" << r.algebraic
              << "  topological=" << r.topological << "  "
              << (r.match ? "match" : "mismatch")
              << (r.expected_match == r.match ? "" : "  UNEXPECTED") << "\n";
  }
  std::cout << (ok ? "oracle: as expected\n" : "oracle: FAILURE\n");
  return ok ? 0 : 1;
}

int run_regress(const std::string& dir_flag) {
  std::string dir = dir_flag;
  if (dir.empty())
    if (const char* env = std::getenv("CW_GOLDEN_DIR")) dir = env;
  if (dir.empty()) dir = "golden";
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no golden files in " << dir << "\n";
    return 1;
  }
  bool ok = true;
  for (const auto& f : files) {
    std::ifstream in(f);
    json expected = json::parse(in);
    SpaceTheories st = build_space(expected["space"].get<std::string>(),
                                   expected["field"].get<std::string>(),
                                   expected["bound"].get<int>() + 1);
    json actual = compute_report(st, expected["bound"].get<int>());
    bool same = actual.dump(2) == expected.dump(2);
    ok = ok && same;
    std::cout << f.filename().string() << ": "
              << (same ? "ok" : "DIFFERS") << "\n";
  }
  std::cout << (ok ? "regress: all golden files match\n"
                   : "regress: FAILURE\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Chow-Witt tables for the catalog spaces"};
  app.require_subcommand(1);

  std::string space, field = "C", golden_dir;
  int max_deg = 6, levels = 2;
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd, bool needs_space) {
    if (needs_space)
      cmd->add_option("space", space, "space expression, e.g. \"P(2) x P(3)\"")
          ->required();
    cmd->add_option("--field", field, "base field: C, R, F3, F5, ...");
    cmd->add_option("--max-deg", max_deg, "largest degree to emit");
  };

  CLI::App* compute = app.add_subcommand("compute", "per-bidegree tables");
  add_common(compute, true);
  compute->add_flag("--json", as_json, "machine-readable output");

  CLI::App* compare =
      app.add_subcommand("compare", "derived groups against the closed form");
  add_common(compare, true);

  CLI::App* kunneth =
      app.add_subcommand("kunneth", "product ring against the tensor product");
  add_common(kunneth, true);

  CLI::App* oracle =
      app.add_subcommand("oracle", "compare with the real-point cochain model");
  add_common(oracle, true);
  oracle->add_option("--levels", levels, "filtration levels above the degree");

  CLI::App* regress = app.add_subcommand("regress", "golden file regression");
  regress->add_option("--golden-dir", golden_dir,
                      "defaults to $CW_GOLDEN_DIR, then ./golden");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(compute))
      return run_compute(space, field, max_deg, as_json);
    if (app.got_subcommand(compare)) return run_compare(space, field, max_deg);
    if (app.got_subcommand(kunneth)) return run_kunneth(space, field, max_deg);
    if (app.got_subcommand(oracle))
      return run_oracle(space, field, max_deg, levels);
    if (app.got_subcommand(regress)) return run_regress(golden_dir);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
