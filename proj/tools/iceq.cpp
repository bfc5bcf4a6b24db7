// iceq: ice quivers with potential, relative Ginzburg dg algebras,
// frozen Jacobian algebras, and higher Auslander-Reiten computations
// over exact rational arithmetic.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "iceq/acceptance.hpp"
#include "iceq/ar.hpp"
#include "iceq/dg.hpp"
#include "iceq/exactness.hpp"
#include "iceq/iqp_io.hpp"
#include "iceq/report.hpp"

using namespace iceq;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json algebra_dump_json(const FinDimAlgebra& a) {
  ordered_json j;
  j["certificate"] = a.cert.str();
  j["dimension"] = a.dim();
  j["vertices"] = a.vertex_labels;
  ordered_json basis = ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    ordered_json b;
    b["label"] = a.basis[i].label;
    b["source"] = a.vertex_labels[a.src(i)];
    b["target"] = a.vertex_labels[a.tgt(i)];
    basis.push_back(b);
  }
  j["basis"] = basis;
  ordered_json idem = ordered_json::array();
  for (int v = 0; v < a.num_vertices(); ++v) idem.push_back(a.idem[v]);
  j["idempotents"] = idem;
  ordered_json sc = ordered_json::array();
  if (a.cert.kind == Certificate::JacobiFinite) {
    for (int i = 0; i < a.dim(); ++i)
      for (int k = 0; k < a.dim(); ++k)
        for (const auto& [z, c] : a.product(i, k)) {
          ordered_json t = ordered_json::array();
          t.push_back(i);
          t.push_back(k);
          t.push_back(z);
          t.push_back(c.str());
          sc.push_back(t);
        }
  }
  j["structure_constants"] = sc;
  return j;
}

ordered_json dg_dump_json(const DgPresentation& p) {
  ordered_json gens = ordered_json::array();
  for (const auto& ar : p.gq.arrows()) {
    ordered_json g;
    g["name"] = ar.name;
    g["degree"] = ar.degree;
    g["source"] = p.gq.vertex(ar.source).label;
    g["target"] = p.gq.vertex(ar.target).label;
    AlgebraElement dv;
    auto it = p.d.find(ar.id);
    if (it != p.d.end()) dv = it->second;
    g["d"] = element_str(p.gq, dv);
    gens.push_back(g);
  }
  return gens;
}

ordered_json exactness_json(const ConcentrationVerdict& v, const Quiver& q) {
  ordered_json out;
  out["verdict"] = v.str();
  if (v.kind == ConcentrationVerdict::Inapplicable) out["reason"] = v.reason;
  if (v.kind == ConcentrationVerdict::NotConcentrated)
    out["witness_vertex"] = q.vertex(v.witness_vertex).label;
  out["certificate"] = v.certificate.str();
  ordered_json per = ordered_json::array();
  for (const auto& rep : v.per_vertex) {
    ordered_json r;
    r["vertex"] = q.vertex(rep.vertex).label;
    r["frozen"] = rep.frozen;
    r["position_dims"] = rep.position_dims;
    r["homology_dims"] = rep.homology_dims;
    r["exact"] = rep.exact;
    per.push_back(r);
  }
  out["per_vertex"] = per;
  return out;
}

void emit(const ordered_json& report, bool json_mode, const std::string& human,
          const Timer& timer) {
  if (json_mode) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << human;
    std::cout << "elapsed: " << timer.ms() << " ms\n";
  }
}

int cmd_ginzburg(const std::string& file, bool json_mode) {
  Timer timer;
  std::string text = read_file(file);
  IqpFile f = parse_iqp(text, file);
  DgPresentation p = build_relative_ginzburg(f.ice, f.potential);
  DgCheckReport d2 = verify_d_squared(p);
  GeneratorFunctor g = ginzburg_functor(f.ice, f.potential);
  DgCheckReport gf = verify_functor(g);

  ordered_json rep = report_envelope("ginzburg", fnv1a64_hex(text));
  rep["generators"] = dg_dump_json(p);
  rep["d_squared_zero"] = d2.pass;
  rep["ginzburg_functor_commutes"] = gf.pass;

  std::ostringstream human;
  human << "relative Ginzburg dg algebra of " << file << "\n" << p.printer();
  human << "d^2 = 0: " << (d2.pass ? "pass" : "FAIL") << "\n";
  human << "Ginzburg functor commutes with d: " << (gf.pass ? "pass" : "FAIL") << "\n";
  emit(rep, json_mode, human.str(), timer);
  return 0;
}

int cmd_jacobian(const std::string& file, int max_degree, const std::string& order,
                 bool json_mode) {
  Timer timer;
  std::string text = read_file(file);
  IqpFile f = parse_iqp(text, file);
  std::optional<PathOrder> po;
  if (!order.empty()) {
    std::vector<std::string> names;
    std::stringstream ss(order);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
    po = PathOrder::from_names(f.ice.quiver, names);
  }
  BoundQuiverAlgebra j = relative_jacobian(f.ice, f.potential, max_degree, po);

  ordered_json rep = report_envelope("jacobian", fnv1a64_hex(text));
  rep["algebra"] = algebra_dump_json(j.alg);

  std::ostringstream human;
  human << "relative Jacobian algebra of " << file << "\n";
  human << "certificate: " << j.alg.cert.str() << "\n";
  human << "dimension: " << j.alg.dim()
        << (j.alg.cert.kind == Certificate::JacobiFinite ? "" : " (basis up to the bound only)")
        << "\n";
  human << "basis:";
  for (const auto& b : j.alg.basis) human << " " << b.label;
  human << "\n";
  emit(rep, json_mode, human.str(), timer);
  return 0;
}

int cmd_concentration(const std::string& file, int max_degree, const std::string& expect,
                      bool json_mode) {
  Timer timer;
  std::string text = read_file(file);
  IqpFile f = parse_iqp(text, file);
  ConcentrationVerdict v = degree0_verdict(f.ice, f.potential, max_degree);

  ordered_json rep = report_envelope("concentration", fnv1a64_hex(text));
  rep["result"] = exactness_json(v, f.ice.quiver);

  std::ostringstream human;
  human << "degree-0 concentration for " << file << "\n";
  for (const auto& r : v.per_vertex) {
    human << "  vertex " << f.ice.quiver.vertex(r.vertex).label
          << (r.frozen ? " (frozen)" : " (unfrozen)") << ": dims [";
    for (size_t i = 0; i < r.position_dims.size(); ++i)
      human << (i ? " " : "") << r.position_dims[i];
    human << "], homology [";
    for (size_t i = 0; i < r.homology_dims.size(); ++i)
      human << (i ? " " : "") << r.homology_dims[i];
    human << "], " << (r.exact ? "exact" : "NOT exact") << "\n";
  }
  human << "verdict: " << v.str();
  if (v.kind == ConcentrationVerdict::Inapplicable) human << " (" << v.reason << ")";
  if (v.kind == ConcentrationVerdict::NotConcentrated)
    human << " (witness vertex " << f.ice.quiver.vertex(v.witness_vertex).label << ")";
  human << "\n";
  emit(rep, json_mode, human.str(), timer);

  if (!expect.empty()) {
    std::string got = v.str();
    std::string want = expect == "concentrated" ? "CONCENTRATED"
                       : expect == "not-concentrated" ? "NOT_CONCENTRATED"
                                                       : "";
    if (want.empty()) throw InputError("--expect takes 'concentrated' or 'not-concentrated'");
    if (got != want) return 1;
  }
  return 0;
}

int cmd_preprojective(const std::string& dynkin, const std::string& file, int max_degree,
                      bool json_mode) {
  Timer timer;
  if (dynkin.empty() && file.empty())
    throw InputError("preprojective needs --dynkin <type> or an input file");

  ordered_json rep = report_envelope("preprojective", dynkin.empty() ? "" : fnv1a64_hex(dynkin));
  std::ostringstream human;
  if (!dynkin.empty()) {
    Quiver q = dynkin_quiver(dynkin);
    BoundQuiverAlgebra classical = preprojective_classical(q, max_degree);
    FinDimAlgebra higher = higher_preprojective(q, 1);
    ScaledIso iso = find_scaled_isomorphism(classical.alg, higher);
    rep["dynkin"] = dynkin;
    rep["classical"] = algebra_dump_json(classical.alg);
    rep["higher_dimension"] = higher.dim();
    rep["isomorphic"] = iso.found;
    rep["self_injective"] = self_injectivity(classical.alg);
    human << "preprojective algebra of " << dynkin << "\n";
    human << "classical presentation dimension: " << classical.alg.dim() << "\n";
    human << "higher (graded hom) dimension: " << higher.dim() << "\n";
    human << "verified isomorphism: " << (iso.found ? "yes" : "NO") << "\n";
    human << "self-injective: " << (self_injectivity(classical.alg) ? "yes" : "no") << "\n";
  } else {
    std::string text = read_file(file);
    IqpFile f = parse_iqp(text, file);
    rep["input_digest"] = fnv1a64_hex(text);
    BoundQuiverAlgebra classical = preprojective_classical(f.ice.quiver, max_degree);
    rep["classical"] = algebra_dump_json(classical.alg);
    human << "preprojective algebra of the quiver in " << file << "\n";
    human << "certificate: " << classical.alg.cert.str() << "\n";
    human << "dimension: " << classical.alg.dim() << "\n";
  }
  emit(rep, json_mode, human.str(), timer);
  return 0;
}

ordered_json representation_dump(const BoundQuiverAlgebra& kq, const Module& m) {
  ordered_json j;
  j["dim_vector"] = m.dims;
  ordered_json arrows;
  for (const auto& ar : kq.quiver().arrows()) {
    int z = kq.basis_index_of(Path{ar.source, {ar.id}});
    ordered_json rows = ordered_json::array();
    const Mat& mat = m.act[z];
    for (int r = 0; r < mat.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < mat.cols(); ++c) row.push_back(mat.at(r, c).str());
      rows.push_back(row);
    }
    arrows[ar.name] = rows;
  }
  j["arrows"] = arrows;
  return j;
}

int cmd_auslander(const std::string& dynkin, int n, bool json_mode) {
  Timer timer;
  Quiver q = dynkin_quiver(dynkin);
  HigherEndAlgebra he = higher_end_algebra(q, n);
  auto [h0, frozen] = extract_h0_algebra(he);
  FinDimAlgebra aus = auslander_algebra(q);
  FinDimAlgebra bprime = boundary_algebra(h0, frozen);
  FinDimAlgebra st = stable_auslander(q);
  DimResult ga = global_dimension(aus, q.num_vertices() + 3);
  DimResult gh = global_dimension(h0, q.num_vertices() + 4);

  ordered_json rep = report_envelope("auslander", fnv1a64_hex(dynkin));
  rep["dynkin"] = dynkin;
  rep["n"] = n;
  rep["auslander_dimension"] = aus.dim();
  rep["auslander_gldim"] = ga.str();
  rep["h0_dimension"] = h0.dim();
  rep["h0_gldim"] = gh.str();
  rep["boundary_dimension"] = bprime.dim();
  rep["stable_dimension"] = st.dim();
  rep["objects"] = (int)he.objects.size();
  {
    BoundQuiverAlgebra kq = path_algebra(q);
    ordered_json inds = ordered_json::array();
    for (const Module& m : indecomposables_dynkin(kq))
      inds.push_back(representation_dump(kq, m));
    rep["indecomposables"] = inds;
  }

  std::ostringstream human;
  human << "higher Auslander data for " << dynkin << " (n = " << n << ")\n";
  human << "Auslander algebra: dim " << aus.dim() << ", gldim " << ga.str() << "\n";
  human << "H0 of the completion: dim " << h0.dim() << ", gldim " << gh.str() << "\n";
  human << "boundary algebra at the projectives: dim " << bprime.dim() << "\n";
  human << "stable Auslander algebra: dim " << st.dim() << "\n";
  emit(rep, json_mode, human.str(), timer);
  return 0;
}

int cmd_check(const std::string& suite) {
  if (suite != "paper-examples")
    throw InputError("unknown suite '" + suite + "' (available: paper-examples)");
  int failures = print_suite_results(run_paper_examples_suite());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ice quivers with potential: relative Ginzburg algebras, frozen Jacobian "
               "algebras, degree-0 concentration, higher Auslander-Reiten computations"};
  app.require_subcommand(1);

  std::string file, order, expect, dynkin, suite = "paper-examples";
  int max_degree = 12;
  int n = 1;
  bool json_mode = false;

  auto* ginzburg = app.add_subcommand("ginzburg", "build the relative Ginzburg dg algebra");
  ginzburg->add_option("file", file, "input .iqp file")->required();
  ginzburg->add_flag("--json", json_mode, "machine-readable report");

  auto* jacobian = app.add_subcommand("jacobian", "compute the relative Jacobian algebra");
  jacobian->add_option("file", file, "input .iqp file")->required();
  jacobian->add_option("--max-degree", max_degree, "truncation degree (default 12)");
  jacobian->add_option("--order", order, "comma-separated arrow precedence");
  jacobian->add_flag("--json", json_mode, "machine-readable report");

  auto* conc = app.add_subcommand("concentration", "decide degree-0 concentration");
  conc->add_option("file", file, "input .iqp file")->required();
  conc->add_option("--max-degree", max_degree, "truncation degree (default 12)");
  conc->add_option("--expect", expect, "concentrated | not-concentrated (exit 1 on mismatch)");
  conc->add_flag("--json", json_mode, "machine-readable report");

  auto* pre = app.add_subcommand("preprojective", "preprojective algebra (classical and higher)");
  pre->add_option("--dynkin", dynkin, "Dynkin type, e.g. A2");
  pre->add_option("file", file, "input .iqp file (uses its underlying quiver)");
  pre->add_option("--max-degree", max_degree, "truncation degree (default 12)");
  pre->add_flag("--json", json_mode, "machine-readable report");

  auto* aus = app.add_subcommand("auslander", "Auslander algebra and the degree-0 completion");
  aus->add_option("--dynkin", dynkin, "Dynkin type, e.g. A2")->required();
  aus->add_option("-n", n, "translation parameter (only n = 1 supported)");
  aus->add_flag("--json", json_mode, "machine-readable report");

  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("--suite", suite, "suite name (paper-examples)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ginzburg->parsed()) return cmd_ginzburg(file, json_mode);
    if (jacobian->parsed()) return cmd_jacobian(file, max_degree, order, json_mode);
    if (conc->parsed()) return cmd_concentration(file, max_degree, expect, json_mode);
    if (pre->parsed()) return cmd_preprojective(dynkin, file, max_degree, json_mode);
    if (aus->parsed()) return cmd_auslander(dynkin, n, json_mode);
    if (check->parsed()) return cmd_check(suite);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
