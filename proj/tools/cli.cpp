#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "report.hpp"
#include "talbot/chambers.hpp"
#include "talbot/chartab.hpp"
#include "talbot/errors.hpp"
#include "talbot/hermrep.hpp"
#include "talbot/permgroup.hpp"
#include "talbot/sylowforms.hpp"

namespace talbot::cli {

using nlohmann::json;

namespace {

struct GlobalOptions {
  std::string json_path;
  std::string csv_path;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
};

struct DecomposeOptions {
  int n = 0;
};

struct ChambersOptions {
  int n = 0;
  std::size_t samples = 10000;
  bool exhaustive = false;
  unsigned workers = 1;
};

struct ClassifyOptions {
  std::string point_file;
  std::string coords;
  bool project = false;
  bool sylow = false;
};

struct SylowOptions {
  bool verify = false;
  std::string export_path;
  std::size_t samples = 0;
  std::uint64_t basis_seed = 0;
  unsigned workers = 1;
};

// Thrown by commands for bad user input; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

json partition_json(const Partition& p) { return p.parts(); }

json base_parameters(const GlobalOptions& g) { return {{"seed", g.seed}, {"tol", g.tol}}; }

void emit_json(const GlobalOptions& g, const ReportEnvelope& env) {
  if (!g.json_path.empty()) write_file(g.json_path, env.to_json().dump(2) + "\n");
}

int exit_code(Status s) { return s == Status::Fail ? kExitVerificationFailed : kExitPass; }

// --- decompose ---------------------------------------------------------------

int cmd_decompose(const GlobalOptions& g, const DecomposeOptions& o, std::ostream& out) {
  if (o.n < 3 || o.n > 7) {
    throw UsageError("decompose: --n must lie in [3, 7] (got " + std::to_string(o.n) + ")");
  }
  const int n = o.n;
  const CharacterTable table = character_table(n);
  const ClassFunction standard = table.row(Partition{n - 1, 1});
  const ClassFunction square = standard * standard;
  const ClassFunction herm = herm_rep_character(n);
  const Decomposition exact = decompose(square, table);
  const Decomposition sym2 = decompose(sym2_character(standard), table);
  const Decomposition alt2 = decompose(alt2_character(standard), table);
  const IsotypicReport ranks = verify_lemma(n);
  const auto summands = lemma_summands(n);

  bool exact_ok = true;
  for (const auto& [lambda, m] : exact.multiplicities) {
    const bool summand = std::find(summands.begin(), summands.end(), lambda) != summands.end();
    exact_ok = exact_ok && m == (summand ? 1 : 0);
  }
  std::vector<Partition> sym_expected = {Partition{n}, Partition{n - 1, 1}};
  if (is_partition({n - 2, 2})) sym_expected.push_back(Partition{n - 2, 2});
  bool proof_ok = true;
  for (const auto& [lambda, m] : sym2.multiplicities) {
    const bool want = std::find(sym_expected.begin(), sym_expected.end(), lambda) != sym_expected.end();
    proof_ok = proof_ok && m == (want ? 1 : 0);
  }
  for (const auto& [lambda, m] : alt2.multiplicities) {
    proof_ok = proof_ok && m == (lambda == Partition{n - 2, 1, 1} ? 1 : 0);
  }
  const bool herm_ok = herm == square;
  const Status status = exact_ok && proof_ok && herm_ok && ranks.passed ? Status::Pass : Status::Fail;

  out << "Character table of S_" << n << " (rows: irreps, columns: classes)\n";
  out << std::setw(14) << "";
  for (const auto& c : table.classes()) out << std::setw(14) << c.cycle_type.to_string();
  out << "\n" << std::setw(14) << "class size";
  for (const auto& c : table.classes()) out << std::setw(14) << c.size;
  out << "\n";
  for (std::size_t r = 0; r < table.irreps().size(); ++r) {
    out << std::setw(14) << table.irreps()[r].to_string();
    for (std::size_t c = 0; c < table.classes().size(); ++c) out << std::setw(14) << table.value(r, c);
    out << "\n";
  }
  auto print_cf = [&](const std::string& name, const ClassFunction& f) {
    out << name;
    for (auto v : f.values()) out << ' ' << v;
    out << "\n";
  };
  out << "\n";
  print_cf("Herm(V) character (traces):  ", herm);
  print_cf("chi_(n-1,1)^2 (exact):       ", square);
  out << "\nMultiplicities in Herm(V):\n";
  for (const auto& [lambda, m] : exact.multiplicities) {
    const bool summand = std::find(summands.begin(), summands.end(), lambda) != summands.end();
    out << "  " << std::setw(14) << std::left << lambda.to_string() << std::right << m
        << (summand ? "  [summand]" : "") << "\n";
  }
  if (ranks.n_minus_2_2_absent) out << "  (n-2,2) slot: absent for n = " << n << " (not a partition)\n";
  auto support_string = [](const Decomposition& d) {
    std::string s;
    for (const auto& [lambda, m] : d.support()) {
      if (!s.empty()) s += " + ";
      if (m != 1) s += std::to_string(m) + " ";
      s += lambda.to_string();
    }
    return s.empty() ? std::string("0") : s;
  };
  out << "Sym^2(V_R)    = " << support_string(sym2) << "\n";
  out << "Lambda^2(V_R) = " << support_string(alt2) << "\n";
  out << "\nIsotypic projector ranks on Herm(V) (threshold 1e-8):\n";
  for (const auto& e : ranks.entries) {
    out << "  " << std::setw(14) << std::left << e.label.to_string() << std::right << "rank "
        << e.rank << "  expected " << e.expected_dimension << "\n";
  }
  out << "  total " << ranks.total_rank << " (expected (n-1)^2 = " << ranks.expected_total << ")\n";
  out << "status: " << to_string(status) << "\n";

  ReportEnvelope env;
  env.command = "decompose";
  env.parameters = base_parameters(g);
  env.parameters["n"] = n;
  json classes = json::array();
  for (const auto& c : table.classes()) classes.push_back({{"cycle_type", partition_json(c.cycle_type)}, {"size", c.size}});
  json rows = json::array();
  for (std::size_t r = 0; r < table.irreps().size(); ++r) {
    rows.push_back({{"irrep", partition_json(table.irreps()[r])}, {"values", table.row(r).values()}});
  }
  json mult = json::array();
  for (std::size_t r = 0; r < exact.multiplicities.size(); ++r) {
    const auto& [lambda, m] = exact.multiplicities[r];
    const auto& e = ranks.entries[r];
    mult.push_back({{"irrep", partition_json(lambda)},
                    {"multiplicity", m},
                    {"sym2", sym2.multiplicities[r].second},
                    {"alt2", alt2.multiplicities[r].second},
                    {"projector_rank", e.rank},
                    {"expected_dimension", e.expected_dimension},
                    {"lemma_summand", e.lemma_summand}});
  }
  env.results = {{"classes", classes},
                 {"character_table", rows},
                 {"herm_character", herm.values()},
                 {"standard_squared", square.values()},
                 {"irreps", mult},
                 {"total_rank", ranks.total_rank},
                 {"expected_total_rank", ranks.expected_total},
                 {"n_minus_2_2_absent", ranks.n_minus_2_2_absent},
                 {"checks", {{"exact_decomposition", exact_ok},
                             {"sym2_alt2_split", proof_ok},
                             {"herm_character_matches", herm_ok},
                             {"projector_ranks", ranks.passed}}}};
  env.status = status;
  emit_json(g, env);

  if (!g.csv_path.empty()) {
    std::ostringstream csv;
    write_csv_row(csv, {"irrep", "multiplicity", "sym2", "alt2", "projector_rank", "expected_dimension", "lemma_summand"});
    for (std::size_t r = 0; r < exact.multiplicities.size(); ++r) {
      const auto& e = ranks.entries[r];
      write_csv_row(csv, {e.label.to_string(), std::to_string(exact.multiplicities[r].second),
                          std::to_string(sym2.multiplicities[r].second),
                          std::to_string(alt2.multiplicities[r].second), std::to_string(e.rank),
                          std::to_string(e.expected_dimension), e.lemma_summand ? "true" : "false"});
    }
    write_file(g.csv_path, csv.str());
  }
  return exit_code(status);
}

// --- chambers ----------------------------------------------------------------

int cmd_chambers(const GlobalOptions& g, const ChambersOptions& o, std::ostream& out) {
  if (o.n <= 2) {
    throw UsageError("chambers: n = " + std::to_string(o.n) +
                     " is degenerate (for n <= 2 all of V is wall); use n >= 3");
  }
  const auto n = static_cast<std::size_t>(o.n);
  if (o.exhaustive && n > 7) throw UsageError("chambers: --exhaustive is capped at n <= 7");

  PartitionOptions popts;
  popts.tol = g.tol;
  popts.exhaustive_labels = n <= 6 || (o.exhaustive && n <= 7);
  popts.workers = o.workers;
  const PartitionReport report = verify_partition(n, o.samples, g.seed, popts);

  std::size_t bijection_checked = 0;
  std::size_t bijection_failures = 0;
  if (o.exhaustive) {
    for (std::size_t s = 0; s < o.samples; ++s) {
      const PointV z = sample_point(n, derive_seed(g.seed, s));
      if (!classify(z, g.tol).interior) continue;
      ++bijection_checked;
      if (!orbit_bijection(z, g.tol).bijective) ++bijection_failures;
    }
  }
  std::optional<AdjacencySummary> adjacency;
  if (n <= 6) adjacency = chamber_adjacency(n);

  const bool ok = report.partition_violations == 0 && bijection_failures == 0 &&
                  (!adjacency || (adjacency->connected && adjacency->min_degree == n - 1 &&
                                  adjacency->max_degree == n - 1));
  const Status status = ok ? Status::Pass : Status::Fail;

  out << "Chambers T(g) of V, n = " << n << ", " << o.samples << " samples, seed " << g.seed
      << ", tol " << g.tol << "\n";
  out << "  label systems tested per sample: " << (report.exhaustive_labels ? "all n!" : "own label only") << "\n";
  out << "  chambers occupied: " << report.chambers_occupied << " / " << report.chambers_total << "\n";
  out << "  boundary hits: " << report.boundary_hits << "\n";
  out << "  partition violations: " << report.partition_violations << "\n";
  out << "  occupancy max/min ratio: " << fixed(report.occupancy_ratio) << "\n";
  if (o.exhaustive) {
    out << "  orbit bijections: " << bijection_checked - bijection_failures << " / " << bijection_checked << "\n";
  }
  if (adjacency) {
    out << "  adjacency graph: " << adjacency->vertices << " vertices, " << adjacency->edges
        << " edges, degree " << adjacency->min_degree << ".." << adjacency->max_degree
        << (adjacency->connected ? ", connected" : ", disconnected") << "\n";
  }
  out << "status: " << to_string(status) << "\n";

  ReportEnvelope env;
  env.command = "chambers";
  env.parameters = base_parameters(g);
  env.parameters["n"] = n;
  env.parameters["samples"] = o.samples;
  env.parameters["exhaustive"] = o.exhaustive;
  json occupancy = json::object();
  for (const auto& [label, count] : report.occupancy) occupancy[label.perm.to_string_one_based()] = count;
  env.results = {{"chambers_total", report.chambers_total},
                 {"chambers_occupied", report.chambers_occupied},
                 {"boundary_hits", report.boundary_hits},
                 {"partition_violations", report.partition_violations},
                 {"exhaustive_labels", report.exhaustive_labels},
                 {"occupancy_ratio", std::isfinite(report.occupancy_ratio) ? json(report.occupancy_ratio) : json(nullptr)},
                 {"occupancy", occupancy}};
  if (o.exhaustive) {
    env.results["orbit_bijection"] = {{"checked", bijection_checked}, {"failures", bijection_failures}};
  }
  if (adjacency) {
    env.results["adjacency"] = {{"vertices", adjacency->vertices},
                                {"edges", adjacency->edges},
                                {"min_degree", adjacency->min_degree},
                                {"max_degree", adjacency->max_degree},
                                {"connected", adjacency->connected}};
  }
  env.status = status;
  emit_json(g, env);

  if (!g.csv_path.empty()) {
    std::ostringstream csv;
    write_csv_row(csv, {"label", "count"});
    for (const auto& [label, count] : report.occupancy) {
      write_csv_row(csv, {label.perm.to_string_one_based(), std::to_string(count)});
    }
    write_file(g.csv_path, csv.str());
  }
  return exit_code(status);
}

// --- classify ----------------------------------------------------------------

int cmd_classify(const GlobalOptions& g, const ClassifyOptions& o, std::ostream& out) {
  if (o.point_file.empty() == o.coords.empty()) {
    throw UsageError("classify: give exactly one of --point FILE or --coords LIST");
  }
  std::vector<Complex> raw;
  try {
    raw = o.coords.empty() ? read_point_file(o.point_file) : parse_coords(o.coords);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("classify: ") + e.what());
  }
  if (raw.empty()) throw UsageError("classify: no coordinates given");

  std::optional<PointV> point;
  try {
    point = o.project ? PointV::project(raw) : PointV(raw);
  } catch (const InvalidArgument&) {
    throw UsageError("classify: coordinates do not sum to zero; pass --project to subtract the mean");
  }
  const PointV& z = *point;
  if (z.is_zero()) {
    throw UsageError("classify: the zero point has no chamber (the construction lives in PV, where 0 is excluded)");
  }
  if (z.degree() <= 2) {
    throw UsageError("classify: n <= 2 is degenerate (all of V is wall)");
  }
  if (o.sylow && z.degree() != 5) throw UsageError("classify: --sylow requires n = 5");

  const Classification c = classify(z, g.tol);
  const auto walls = active_walls(z, g.tol);
  const auto moduli = z.moduli_squared();
  const auto forms = perm_form_basis(z.degree());

  out << "point:";
  for (const auto& v : z.coords()) out << " (" << fixed(v.real(), 10) << "," << fixed(v.imag(), 10) << ")";
  out << "\n|z_i|^2:";
  for (double m : moduli) out << ' ' << fixed(m, 10);
  out << "\nchamber label: " << c.label.perm.to_string_one_based() << "\n";
  out << "interior: " << (c.interior ? "true" : "false") << "\n";
  out << "ties: " << pairs_string(c.ties) << "\n";
  out << "active walls: " << pairs_string(walls) << "\n";

  ReportEnvelope env;
  env.command = "classify";
  env.parameters = base_parameters(g);
  env.parameters["n"] = z.degree();
  env.parameters["project"] = o.project;
  json coords = json::array();
  for (const auto& v : z.coords()) coords.push_back(complex_json(v));
  json form_values = json::array();
  for (const auto& h : forms) form_values.push_back(evaluate_diagonal(h, z));
  json label = json::array();
  for (auto i : c.label.perm.images()) label.push_back(i + 1);
  env.results = {{"point", coords},
                 {"moduli_squared", moduli},
                 {"form_values", form_values},
                 {"label", label},
                 {"label_one_based", c.label.perm.to_string_one_based()},
                 {"interior", c.interior},
                 {"ties", pairs_json(c.ties)},
                 {"active_walls", pairs_json(walls)}};

  if (o.sylow) {
    const SylowBasis basis = build_sylow_basis(0);
    const RegionClassification r = classify_region(z, basis, g.tol);
    out << "six-form region order: " << r.order.to_string_one_based() << "\n";
    out << "k_i(z,z):";
    for (double v : r.values) out << ' ' << fixed(v, 10);
    out << "\nregion interior: " << (r.interior ? "true" : "false") << ", ties: " << pairs_string(r.ties) << "\n";
    json order = json::array();
    for (auto i : r.order.images()) order.push_back(i + 1);
    env.results["sylow_region"] = {{"order", order},
                                   {"values", r.values},
                                   {"interior", r.interior},
                                   {"ties", pairs_json(r.ties)}};
  }
  env.status = Status::ReportOnly;
  emit_json(g, env);

  if (!g.csv_path.empty()) {
    std::ostringstream csv;
    write_csv_row(csv, {"index", "re", "im", "modulus_squared", "rank_in_label"});
    for (std::size_t i = 0; i < z.degree(); ++i) {
      const auto pos = static_cast<std::size_t>(
          std::find(c.label.perm.images().begin(), c.label.perm.images().end(), i) - c.label.perm.images().begin());
      write_csv_row(csv, {std::to_string(i + 1), fixed(z[i].real(), 17), fixed(z[i].imag(), 17),
                          fixed(moduli[i], 17), std::to_string(pos + 1)});
    }
    write_file(g.csv_path, csv.str());
  }
  return kExitPass;
}

// --- sylow -------------------------------------------------------------------

json basis_json(const SylowBasis& basis) {
  json forms = json::array();
  for (std::size_t i = 0; i < basis.forms.size(); ++i) {
    json elements = json::array();
    for (const auto& e : basis.subgroups[i].elements()) elements.push_back(e.to_cycle_string());
    forms.push_back({{"index", i + 1}, {"subgroup", elements}, {"matrix", matrix_json(basis.forms[i].matrix())}});
  }
  const auto& nz = basis.normalization;
  return {{"degree", 5},
          {"forms", forms},
          {"normalization",
           {{"seed", nz.seed},
            {"attempts", nz.attempts},
            {"trivial_coefficient", nz.trivial_coefficient},
            {"component_norm", nz.component_norm},
            {"sign_reference", nz.sign_reference},
            {"sign_flip", nz.sign_flip}}}};
}

json matrix_rows(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_sylow(const GlobalOptions& g, const SylowOptions& o, std::ostream& out) {
  SylowBasis basis;
  try {
    basis = build_sylow_basis(o.basis_seed);
  } catch (const ConstructionFailure& e) {
    out << "construction failed: " << e.what() << "\nstatus: fail\n";
    ReportEnvelope env;
    env.command = "sylow";
    env.parameters = base_parameters(g);
    env.results = {{"error", e.what()}};
    env.status = Status::Fail;
    emit_json(g, env);
    return kExitVerificationFailed;
  }
  const auto checks = verify_sylow_basis(basis, g.seed);
  const auto twist = sign_twist_report(basis);
  const auto identity = sign_character_identity();
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const SylowCheck& c) { return c.passed; });
  const Status status = ok ? Status::Pass : Status::Fail;

  out << "Sylow 5-subgroups of S_5: " << basis.subgroups.size() << "\n";
  for (std::size_t i = 0; i < basis.subgroups.size(); ++i) {
    const auto& els = basis.subgroups[i].elements();
    const auto gen = std::find_if(els.begin(), els.end(), [](const Permutation& p) { return !p.is_identity(); });
    out << "  P_" << i + 1 << " = <" << gen->to_cycle_string() << ">, order " << basis.subgroups[i].order() << "\n";
  }
  out << "Sylow permutation character:";
  for (auto v : identity.sylow_permutation_character.values()) out << ' ' << v;
  out << "\nbasis: k_i = P/6 + U_i, ||U_i||_F = " << fixed(basis.normalization.component_norm)
      << ", seed " << basis.normalization.seed << " (" << basis.normalization.attempts << " attempt(s))\n";
  if (o.verify) {
    out << "checks:\n";
    for (const auto& c : checks) {
      out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << " = "
          << fixed(c.measured, 4) << "\n";
    }
    out << "action on span{k_i} (columns: images of k_j):\n";
    for (const auto& e : twist.entries) {
      out << "  " << e.name << " (" << (e.parity > 0 ? "even" : "odd") << ", "
          << (e.is_permutation_matrix ? "permutation matrix" : "not a permutation matrix")
          << "), sigma = " << e.conjugation.to_string_one_based() << "\n";
      for (Eigen::Index i = 0; i < e.matrix.rows(); ++i) {
        out << "   ";
        for (Eigen::Index j = 0; j < e.matrix.cols(); ++j) out << std::setw(11) << fixed(e.matrix(i, j), 5);
        out << "\n";
      }
    }
    out << "class traces:";
    for (double t : twist.class_traces) out << ' ' << fixed(std::abs(t) < 1e-12 ? 0.0 : t, 10);
    out << "  (expected";
    for (auto t : twist.expected_traces) out << ' ' << t;
    out << ")\n";
  }

  ReportEnvelope env;
  env.command = "sylow";
  env.parameters = base_parameters(g);
  env.parameters["basis_seed"] = o.basis_seed;
  env.parameters["samples"] = o.samples;
  env.parameters["verify"] = o.verify;
  json subgroups = json::array();
  for (const auto& s : basis.subgroups) {
    json els = json::array();
    for (const auto& e : s.elements()) els.push_back(e.to_cycle_string());
    subgroups.push_back(els);
  }
  json check_json = json::array();
  for (const auto& c : checks) {
    check_json.push_back({{"name", c.name}, {"passed", c.passed}, {"measured", c.measured}, {"detail", c.detail}});
  }
  json twist_json = json::array();
  for (const auto& e : twist.entries) {
    twist_json.push_back({{"name", e.name},
                          {"generator", e.generator.to_string_one_based()},
                          {"parity", e.parity},
                          {"conjugation", e.conjugation.to_string_one_based()},
                          {"is_permutation_matrix", e.is_permutation_matrix},
                          {"matrix", matrix_rows(e.matrix)}});
  }
  env.results = {{"subgroups", subgroups},
                 {"sylow_permutation_character", identity.sylow_permutation_character.values()},
                 {"checks", check_json},
                 {"sign_twist", {{"entries", twist_json},
                                 {"class_traces", twist.class_traces},
                                 {"expected_traces", twist.expected_traces}}},
                 {"basis", basis_json(basis)}};

  if (o.samples > 0) {
    const RegionReport r = region_statistics(o.samples, g.seed, basis, g.tol, o.workers);
    out << "region statistics: " << r.samples << " samples, seed " << r.seed << "\n";
    out << "  distinct orderings: " << r.distinct_orderings << " / 720\n";
    out << "  boundary samples: " << r.boundary_samples << "\n";
    out << "  A_5 orbits observed: " << r.orbits.size() << ", max within-orbit max/min ratio "
        << fixed(r.max_orbit_ratio) << ", min chi-square p-value " << fixed(r.min_orbit_p_value)
        << (r.orbits_consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
    json orbits = json::array();
    for (const auto& orb : r.orbits) {
      orbits.push_back({{"representative", orb.representative.to_string_one_based()},
                        {"observed", orb.observed},
                        {"samples", orb.samples},
                        {"min_occupancy", orb.min_occupancy},
                        {"max_occupancy", orb.max_occupancy},
                        {"chi_square", orb.chi_square},
                        {"p_value", orb.p_value}});
    }
    json occupancy = json::object();
    for (const auto& [order, count] : r.occupancy) occupancy[order.to_string_one_based()] = count;
    json walls = json::array();
    for (const auto& [pair, count] : r.wall_incidence) walls.push_back({{"pair", {pair.i + 1, pair.j + 1}}, {"count", count}});
    env.results["regions"] = {{"samples", r.samples},
                              {"distinct_orderings", r.distinct_orderings},
                              {"boundary_samples", r.boundary_samples},
                              {"max_orbit_ratio", r.max_orbit_ratio},
                              {"min_orbit_p_value", r.min_orbit_p_value},
                              {"orbits_consistent", r.orbits_consistent},
                              {"orbits", orbits},
                              {"wall_incidence", walls},
                              {"occupancy", occupancy}};
    if (!g.csv_path.empty()) {
      std::ostringstream csv;
      write_csv_row(csv, {"ordering", "count"});
      for (const auto& [order, count] : r.occupancy) write_csv_row(csv, {order.to_string_one_based(), std::to_string(count)});
      write_file(g.csv_path, csv.str());
    }
  }
  out << "status: " << to_string(status) << "\n";
  env.status = status;
  emit_json(g, env);

  if (!o.export_path.empty()) {
    write_file(o.export_path, basis_json(basis).dump(2) + "\n");
    out << "basis written to " << o.export_path << "\n";
  }
  return exit_code(status);
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw InvalidArgument("not a number: '" + s + "'");
  return v;
}

std::complex<double> parse_pair(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos || token.find(',', comma + 1) != std::string::npos) {
    throw InvalidArgument("expected a \"re,im\" pair, got '" + token + "'");
  }
  return {parse_double(token.substr(0, comma)), parse_double(token.substr(comma + 1))};
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<std::complex<double>> parse_coords(const std::string& list) {
  std::istringstream is(list);
  std::vector<std::complex<double>> out;
  std::string token;
  while (is >> token) out.push_back(parse_pair(token));
  return out;
}

std::vector<std::complex<double>> read_point_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open point file '" + path + "'");
  std::vector<std::complex<double>> out;
  std::string line;
  while (std::getline(f, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_pair(line));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fundamental domains for S_n acting on hermitian forms of the standard representation"};
  app.name("talbot");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  if (const char* env = std::getenv("TALBOT_SEED")) {
    try {
      g.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "TALBOT_SEED must be a nonnegative integer\n";
      return kExitUsage;
    }
  }
  app.add_option("--json", g.json_path, "Write the JSON report to PATH");
  app.add_option("--csv", g.csv_path, "Write a CSV table to PATH");
  app.add_option("--tol", g.tol, "Relative tie tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", g.seed, "Sampling seed (default: $TALBOT_SEED or 0)");

  DecomposeOptions dopt;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose Herm(V) into S_n irreducibles");
  decompose_cmd->add_option("--n,-n", dopt.n, "Degree n (3..7)")->required();

  ChambersOptions copt;
  auto* chambers_cmd = app.add_subcommand("chambers", "Sample V and verify the chamber partition");
  chambers_cmd->add_option("--n,-n", copt.n, "Degree n (>= 3)")->required();
  chambers_cmd->add_option("--samples", copt.samples, "Number of samples")->capture_default_str();
  chambers_cmd->add_flag("--exhaustive", copt.exhaustive, "Check the orbit bijection on every sample (n <= 7)");
  chambers_cmd->add_option("--workers", copt.workers, "Worker threads (0 = all cores); results do not depend on it")
      ->capture_default_str();

  ClassifyOptions kopt;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a point of V into its chamber");
  classify_cmd->add_option("--point", kopt.point_file, "File with one \"re,im\" pair per line");
  classify_cmd->add_option("--coords", kopt.coords, "Whitespace-separated \"re,im\" pairs");
  classify_cmd->add_flag("--project", kopt.project, "Subtract the mean so the point lies in V");
  classify_cmd->add_flag("--sylow", kopt.sylow, "Also report the six-form region (n = 5)");

  SylowOptions sopt;
  auto* sylow_cmd = app.add_subcommand("sylow", "Build and check the six Sylow-5 hermitian forms");
  sylow_cmd->add_flag("--verify", sopt.verify, "Print every invariant check and the action matrices");
  sylow_cmd->add_option("--export", sopt.export_path, "Write the six basis matrices as JSON");
  sylow_cmd->add_option("--samples", sopt.samples, "Region statistics sample count (0 = skip)")->capture_default_str();
  sylow_cmd->add_option("--basis-seed", sopt.basis_seed, "Seed of the basis construction")->capture_default_str();
  sylow_cmd->add_option("--workers", sopt.workers, "Worker threads (0 = all cores)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(g, dopt, out);
    if (*chambers_cmd) return cmd_chambers(g, copt, out);
    if (*classify_cmd) return cmd_classify(g, kopt, out);
    if (*sylow_cmd) return cmd_sylow(g, sopt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "verification error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace talbot::cli
