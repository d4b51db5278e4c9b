#include "kschur/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "kschur/affine.hpp"
#include "kschur/boundary.hpp"
#include "kschur/error.hpp"
#include "kschur/golden_data.hpp"
#include "kschur/json.hpp"
#include "kschur/lattice.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/toeplitz.hpp"
#include "kschur/transfer.hpp"
#include "kschur/walk.hpp"

namespace kschur::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  double tol = kDefaultTol;
  int symbolic_limit = kDefaultSymbolicLimit;
  std::string format = "pretty";
};

double default_tolerance() {
  const char* env = std::getenv("KSCHUR_TOL");
  if (!env || !*env) return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0) || v > 1e-3)
    throw DomainError("KSCHUR_TOL must be a number in (0, 1e-3]");
  return v;
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x == 0 ? 0.0 : x);  // no "-0"
  return buf;
}

std::string tuple(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + num(v[i]);
  return out + ")";
}

std::string tuple(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

std::string tuple(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::vector<double> parse_doubles(const std::string& text) { return to_doubles(parse_rational_list(text)); }

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

// Right-aligned grid, two spaces between columns.
std::string grid(const std::vector<std::vector<std::string>>& cells, const std::string& indent = "  ") {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], row[j].size());
    }
  std::string out;
  for (const auto& row : cells) {
    std::string line = indent;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += "  ";
      line += std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

template <class T, class ToString>
std::vector<std::vector<std::string>> matrix_cells(const Matrix<T>& m, ToString to_str) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(to_str(m(i, j)));
  return cells;
}

std::string basis_line(const IrreducibleBasis& basis) {
  std::string out = "basis:";
  for (const auto& p : basis.parts()) out += " " + p.str();
  return out;
}

json values_by_partition(const IrreducibleBasis& basis, const std::vector<double>& v) {
  json j = json::object();
  for (std::size_t i = 0; i < basis.size(); ++i) j[basis[i].str()] = v[i];
  return j;
}

json envelope(const std::string& command) { return json{{"schema", kJsonSchema}, {"command", command}}; }

struct Emitter {
  const RunConfig& cfg;
  std::ostream& out;

  void emit(const json& j, const std::string& pretty) const {
    if (cfg.format == "json")
      out << j.dump(2) << "\n";
    else
      out << pretty;
  }
};

// ---------------------------------------------------------------------------
// partitions / lattice / kschur

int cmd_partitions(const Emitter& em, int k, const std::string& partition, int size, bool irreducible) {
  if (!partition.empty()) {
    const Partition lambda = parse_partition(partition);
    require_bounded(lambda, k);
    const Partition core = bounded_to_core(lambda, k);
    const Partition omega = omega_conjugate(lambda, k);
    const auto chains = chain_decomposition(lambda, k).part_chains();
    const RectangleFactorization f = rectangle_factorization(lambda, k);
    json j = envelope("partitions");
    j.update({{"k", k},
              {"partition", lambda},
              {"size", lambda.size()},
              {"core", core},
              {"omega", omega},
              {"chains", chains},
              {"factorization", {{"p", f.p}, {"reduced", f.reduced}}},
              {"irreducible", is_irreducible(lambda, k)}});
    std::string chain_text;
    for (const auto& chain : chains)
      if (!chain.empty()) chain_text += (chain_text.empty() ? "" : " ") + tuple(chain);
    std::ostringstream s;
    s << "partition:   " << lambda.str() << "  (size " << lambda.size() << ", k = " << k << ")\n"
      << "core:        " << core.str() << "\n"
      << "omega_k:     " << omega.str() << "\n"
      << "chains:      " << chain_text << "\n"
      << "rectangles:  p = " << tuple(f.p) << ", reduced " << f.reduced.str() << "\n"
      << "irreducible: " << (is_irreducible(lambda, k) ? "yes" : "no") << "\n";
    em.emit(j, s.str());
    return kOk;
  }
  std::vector<Partition> list;
  if (irreducible)
    list = enumerate_irreducible(k);
  else if (size >= 0)
    list = partitions_of(size, k);
  else
    throw DomainError("partitions needs --partition, --size or --irreducible");
  json j = envelope("partitions");
  j["k"] = k;
  j["partitions"] = list;
  j["count"] = list.size();
  std::string pretty;
  for (const auto& p : list) pretty += p.str() + "\n";
  em.emit(j, pretty);
  return kOk;
}

int cmd_lattice(const Emitter& em, int k, const std::string& partition, int max_size) {
  if (!partition.empty()) {
    const Partition lambda = parse_partition(partition);
    const auto edges = covers(lambda, k);
    json j = envelope("lattice");
    j["k"] = k;
    j["source"] = lambda;
    j["covers"] = json::array();
    std::string pretty;
    for (const auto& e : edges) {
      j["covers"].push_back({{"target", e.target}, {"row", e.added_row}});
      pretty += lambda.str() + " -> " + e.target.str() + "  (row " + std::to_string(e.added_row) + ")\n";
    }
    em.emit(j, pretty);
    return kOk;
  }
  if (max_size < 0) throw DomainError("lattice needs --partition or --max-size");
  const json j = json::parse(lattice_graph_json(k, max_size));
  std::string pretty;
  for (const auto& e : j["edges"])
    pretty += Partition(e["source"].get<std::vector<int>>()).str() + " -> " +
              Partition(e["target"].get<std::vector<int>>()).str() + "\n";
  em.emit(j, pretty);
  return kOk;
}

int cmd_kschur(const Emitter& em, int k, const std::string& partition, const std::string& to,
               const std::string& product, int pieri_r, const std::string& content) {
  const Partition kappa = parse_partition(partition);
  require_bounded(kappa, k);
  json j = envelope("kschur");
  j["k"] = k;
  j["partition"] = kappa;
  if (!content.empty()) {
    std::vector<int> alpha;
    for (const auto& q : parse_rational_list(content)) {
      if (q.get_den() != 1) throw DomainError("content entries must be integers");
      alpha.push_back(static_cast<int>(q.get_num().get_si()));
    }
    const long long count = count_k_tableaux(kappa, alpha, k);
    j["content"] = alpha;
    j["count"] = count;
    em.emit(j, std::to_string(count) + "\n");
    return kOk;
  }
  SymFuncExpr result;
  if (!product.empty()) {
    const Partition delta = parse_partition(product);
    result = kschur_product(kappa, delta, k);
    j["times"] = delta;
  } else if (pieri_r > 0) {
    result = pieri(pieri_r, kappa, k);
    j["pieri"] = pieri_r;
  } else if (to == "h") {
    result = kschur_to_h(SymFuncExpr::single(Basis::KSchur, k, kappa));
  } else if (to == "schur") {
    result = kschur_to_schur(kappa, k);
  } else {
    result = kschur_lift(kappa, k);
  }
  j["expansion"] = result.to_json();
  em.emit(j, result.str() + "\n");
  return kOk;
}

// ---------------------------------------------------------------------------
// phi / alcove

std::string phi_text(const TransferMatrix& phi, bool printed_orientation) {
  const Matrix<MultiPoly> m = printed_orientation ? phi.printed() : phi.entries;
  std::ostringstream s;
  s << "k = " << phi.k << "\n" << basis_line(phi.basis) << "\n"
    << (printed_orientation ? "orientation: row = target, column = source\n"
                            : "orientation: row = source, column = reduced target\n")
    << "Phi =\n"
    << grid(matrix_cells(m, [](const MultiPoly& p) { return p.str(); }));
  return s.str();
}

int cmd_phi(const Emitter& em, const RunConfig& cfg, int k, const std::string& at, bool xi_only, bool primitive,
            const std::string& orientation) {
  const TransferMatrix phi = build_phi(k);
  const bool printed_orientation = orientation == "printed";
  json j = envelope("phi");
  j["k"] = k;
  j["basis"] = phi.basis.parts();
  j["orientation"] = printed_orientation ? "row=target" : "row=source";

  if (primitive) {
    const PrimitiveData pd = primitive_data(k, cfg.symbolic_limit);
    std::ostringstream s;
    s << "k = " << k << "\n" << basis_line(phi.basis) << "\n"
      << "M (column i = coordinates of s_(1)^i) =\n"
      << grid(matrix_cells(pd.m, [](const MultiPoly& p) { return p.str(); })) << "Delta = " << pd.delta.str()
      << "\n";
    json pj = json::object();
    for (std::size_t i = 0; i < pd.p.size(); ++i) {
      s << "P" << phi.basis[i].str() << "(T) = " << pd.p[i].str() << "\n";
      pj[phi.basis[i].str()] = pd.p[i].str();
    }
    json mj = json::array();
    for (std::size_t r = 0; r < pd.m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < pd.m.cols(); ++c) row.push_back(pd.m(r, c).str());
      mj.push_back(row);
    }
    j.update({{"M", mj}, {"Delta", pd.delta.str()}, {"P", pj}});
    em.emit(j, s.str());
    return kOk;
  }

  if (xi_only) {
    const UniPoly xi = xi_char_poly(k, cfg.symbolic_limit);
    j["Xi"] = xi.str();
    em.emit(j, "Xi(T) = " + xi.str() + "\n");
    return kOk;
  }

  if (!at.empty()) {
    const std::vector<Rational> r = parse_rational_list(at);
    const Matrix<Rational> numeric = specialize(phi, r);
    const Matrix<Rational> shown = printed_orientation ? numeric.transpose() : numeric;
    const std::vector<double> rd = to_doubles(r);
    const bool criterion = criterion_irreducible(rd, k);
    const bool graph = graph_irreducible(numeric);
    if (criterion != graph) throw InternalError("irreducibility criterion disagrees with the support graph");
    std::ostringstream s;
    s << "k = " << k << ", r = " << tuple(r) << "\n" << basis_line(phi.basis) << "\n"
      << "Phi =\n"
      << grid(matrix_cells(shown, [](const Rational& q) { return to_string(q); }))
      << "irreducible: " << (criterion ? "yes" : "no") << "\n";
    json mj = json::array();
    for (std::size_t i = 0; i < shown.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < shown.cols(); ++c) row.push_back(to_string(shown(i, c)));
      mj.push_back(row);
    }
    j.update({{"r", rational_strings(r)}, {"matrix", mj}, {"irreducible", criterion}});
    if (criterion) {
      const BoundaryPoint p = boundary_point(k, rd, cfg.tol);
      s << "perron t = " << num(p.t) << "\n";
      j["t"] = p.t;
      j["X"] = values_by_partition(phi.basis, p.x);
    }
    em.emit(j, s.str());
    return kOk;
  }

  std::string pretty = phi_text(phi, printed_orientation);
  json mj = json::array();
  const Matrix<MultiPoly> m = printed_orientation ? phi.printed() : phi.entries;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
    mj.push_back(row);
  }
  j["matrix"] = mj;
  if (k <= cfg.symbolic_limit) {
    const UniPoly xi = xi_char_poly(k, cfg.symbolic_limit);
    pretty += "Xi(T) = " + xi.str() + "\n";
    j["Xi"] = xi.str();
  }
  em.emit(j, pretty);
  return kOk;
}

int cmd_alcove(const Emitter& em, int k, const std::string& partition) {
  const Partition lambda = parse_partition(partition);
  require_bounded(lambda, k);
  const auto word = reduced_word(lambda, k);
  const WeightVector center = alcove_center(lambda, k);
  const bool irreducible = is_irreducible(lambda, k);
  json j = envelope("alcove");
  j.update({{"k", k}, {"partition", lambda}, {"word", word}, {"center", rational_strings(center)},
            {"irreducible", irreducible}});
  std::ostringstream s;
  s << "partition: " << lambda.str() << "\n"
    << "word:      " << (word.empty() ? std::string("(empty)") : tuple(word)) << "\n"
    << "center:    " << tuple(center) << "\n";
  if (irreducible) {
    const Partition image = involution_I(lambda, k);
    const Partition omega = omega_conjugate(lambda, k);
    j["I"] = image;
    j["omega"] = omega;
    s << "I-image:   " << image.str() << "\n"
      << "omega_k:   " << omega.str() << "\n";
  } else {
    s << "I-image:   (only defined on irreducible partitions)\n";
  }
  em.emit(j, s.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// boundary

json point_json(const BoundaryPoint& p) {
  const auto& basis = cached_phi(p.k).basis;
  return json{{"k", p.k},
              {"r", p.r},
              {"t", p.t},
              {"h", p.h},
              {"X", values_by_partition(basis, p.x)},
              {"Xhat", values_by_partition(basis, p.xhat)},
              {"nabla", p.nabla}};
}

int cmd_boundary(const Emitter& em, const RunConfig& cfg, const std::string& action, int k, const std::string& r_text,
                 const std::string& h_text, const std::string& partition, const std::string& s_text, double h2,
                 double h3) {
  json j = envelope("boundary " + action);
  std::ostringstream s;
  const auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw DomainError(std::string("missing ") + flag);
    return v;
  };
  if (action == "f") {
    const auto r = parse_doubles(need(r_text, "--r"));
    const FResult f = f_map(k, r, cfg.tol);
    j.update({{"k", k}, {"r", r}, {"h", f.h}, {"extrapolated", f.extrapolated}});
    if (f.extrapolated) j["error_estimate"] = f.error_estimate;
    if (criterion_irreducible(r, k)) {
      const BoundaryPoint p = boundary_point(k, r, cfg.tol);
      j["t"] = p.t;
      j["X"] = values_by_partition(cached_phi(k).basis, p.x);
    }
    s << "h = " << tuple(f.h) << "\n";
    if (f.extrapolated) s << "note: r is on the reducible locus; value is a limit (error ~ " << num(f.error_estimate) << ")\n";
  } else if (action == "g") {
    const auto h = parse_doubles(need(h_text, "--h"));
    const auto r = g_map(k, h);
    j.update({{"k", k}, {"h", h}, {"r", r}});
    s << "r = " << tuple(r) << "\n";
  } else if (action == "point") {
    const auto r = parse_doubles(need(r_text, "--r"));
    const BoundaryPoint p = boundary_point(k, r, cfg.tol);
    j.update(point_json(p));
    s << "t = " << num(p.t) << "\nh = " << tuple(p.h) << "\nnabla = " << num(p.nabla) << "\n";
    for (std::size_t i = 0; i < p.x.size(); ++i)
      s << "X" << cached_phi(k).basis[i].str() << " = " << num(p.x[i]) << "\n";
  } else if (action == "normalize") {
    const auto r = parse_doubles(need(r_text, "--r"));
    const Normalized simplex = simplex_normalize(k, r);
    j.update({{"k", k}, {"r", r}, {"simplex", {{"t", simplex.t}, {"r", simplex.r}}}});
    s << "simplex: t = " << num(simplex.t) << ", r = " << tuple(simplex.r) << "\n";
    if (criterion_irreducible(r, k)) {
      const Normalized unit = unit_normalize(k, r, cfg.tol);
      j["unit"] = {{"t", unit.t}, {"r", unit.r}};
      s << "unit:    t = " << num(unit.t) << ", r = " << tuple(unit.r) << "\n";
    }
  } else if (action == "zeta") {
    const auto r = parse_doubles(need(r_text, "--r"));
    const Normalized unit = unit_normalize(k, r, cfg.tol);
    const BoundaryPoint p = boundary_point(k, unit.r, cfg.tol);
    const auto z = zeta_coefficients(p);
    j.update({{"k", k}, {"r", r}, {"normalized_r", unit.r}, {"coefficients", z}});
    s << "normalized r = " << tuple(unit.r) << "\nzeta(T) coefficients (constant first) = " << tuple(z) << "\n";
  } else if (action == "project") {
    const auto h = parse_doubles(need(h_text, "--h"));
    const auto out = project_pi(k, h, std::max(cfg.tol, 1e-9));
    j.update({{"k", k}, {"h", h}, {"projection", out}});
    s << "pi(h) = " << tuple(out) << "\n";
  } else if (action == "region") {
    const bool inequalities = region_k3(h2, h3);
    const bool positivity = in_v_bar(3, {1.0, h2, h3}, cfg.tol);
    j.update({{"h2", h2}, {"h3", h3}, {"inequalities", inequalities}, {"positivity", positivity}});
    s << "inequalities: " << (inequalities ? "inside" : "outside") << "\n"
      << "positivity:   " << (positivity ? "inside" : "outside") << "\n";
  } else if (action == "rational") {
    const auto r = parse_doubles(need(r_text, "--r"));
    const Partition kappa = parse_partition(need(partition, "--partition"));
    const double sv = s_text.empty() ? f_map(k, r, cfg.tol).h[0] : parse_rational(s_text).get_d();
    const RationalValue v = rational_formula(k, kappa, sv, r);
    j.update({{"k", k}, {"r", r}, {"partition", kappa}, {"s", sv}, {"value", v.value}, {"limit", v.limit}});
    s << "value = " << num(v.value) << "\n";
    if (v.limit) s << "note: Delta(r) = 0, value is a limit (error ~ " << num(v.error_estimate) << ")\n";
  } else {
    throw DomainError("unknown boundary action '" + action + "'");
  }
  em.emit(j, s.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// toeplitz / walk

std::string toeplitz_text(const std::vector<double>& h) {
  return grid(matrix_cells(toeplitz_matrix(h), [](double x) { return num(x); }));
}

int cmd_toeplitz(const Emitter& em, const RunConfig& cfg, const std::string& action, int k, const std::string& r_text,
                 const std::string& h_text) {
  json j = envelope("toeplitz " + action);
  std::ostringstream s;
  if (action == "check") {
    if (h_text.empty()) throw DomainError("missing --h");
    const auto h = parse_doubles(h_text);
    const int kk = static_cast<int>(h.size());
    json minors = json::array();
    s << "M =\n" << toeplitz_text(h) << "initial minors:\n";
    for (const auto& rows : initial_row_sets(kk)) {
      const double v = initial_minor(h, rows);
      const Partition shape = initial_minor_partition(rows);
      minors.push_back({{"rows", rows}, {"partition", shape}, {"value", v}});
      s << "  rows " << tuple(rows) << "  s" << shape.str() << " = " << num(v) << "\n";
    }
    const bool tp = is_totally_positive(h, 0);
    const bool tnn = is_totally_nonnegative(h, cfg.tol);
    j.update({{"h", h}, {"initial_minors", minors}, {"totally_positive", tp}, {"totally_nonnegative", tnn}});
    s << "totally positive:    " << (tp ? "yes" : "no") << "\n"
      << "totally nonnegative: " << (tnn ? "yes" : "no") << "\n";
  } else if (action == "reconstruct") {
    if (r_text.empty()) throw DomainError("missing --r");
    const auto r = parse_doubles(r_text);
    const Reconstruction rec = rietsch_reconstruct(k, r, std::max(cfg.tol, 1e-9));
    j.update({{"k", k}, {"r", r}, {"h", rec.h}, {"rectangle_minors", rec.rectangle_minors}, {"max_error", rec.max_error}});
    s << "h = " << tuple(rec.h) << "\nM =\n" << toeplitz_text(rec.h) << "rectangle minors = " << tuple(rec.rectangle_minors)
      << "\n";
  } else {
    throw DomainError("unknown toeplitz action '" + action + "'");
  }
  em.emit(j, s.str());
  return kOk;
}

void write_csv(std::ostream& os, const WalkTrajectory& traj) {
  os << "step,state";
  for (int i = 1; i <= traj.k; ++i) os << ",x_" << i;
  os << "\n";
  for (const auto& c : traj.checkpoints) {
    os << c.step << "," << c.state;
    for (double x : c.x) os << "," << num(x);
    os << "\n";
  }
}

int cmd_walk(const Emitter& em, const RunConfig& cfg, const std::string& action, int k, const std::string& r_text,
             std::uint64_t steps, std::uint64_t seed, std::uint64_t every, const std::string& out_path, int batches) {
  if (r_text.empty()) throw DomainError("missing --r");
  const auto r = parse_doubles(r_text);
  if (!criterion_irreducible(r, k))
    throw DomainError("r is on the reducible locus; the walk is only simulated for irreducible Φ");
  const Normalized unit = unit_normalize(k, r, cfg.tol);
  const BoundaryPoint p = boundary_point(k, unit.r, cfg.tol);
  const Multigraph g = build_multigraph(k);
  const auto kernel = transition_kernel(g, p);
  json j = envelope("walk " + action);
  j.update({{"k", k}, {"r", r}, {"normalized_r", unit.r}, {"steps", steps}, {"seed", seed}});
  std::ostringstream s;
  if (action == "simulate") {
    const WalkTrajectory traj = simulate(g, kernel, p, {steps, seed, 0, every});
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw DomainError("cannot open " + out_path);
      write_csv(f, traj);
    } else if (cfg.format == "csv") {
      write_csv(em.out, traj);
      return kOk;
    }
    const auto& last = traj.checkpoints.back();
    j.update({{"final_state", g.basis[last.state]}, {"weight", last.weight}, {"x", last.x}});
    s << "normalized r = " << tuple(unit.r) << "\n"
      << "after " << steps << " steps: state " << g.basis[last.state].str() << ", x = " << tuple(last.x) << "\n";
    if (!out_path.empty()) s << "trajectory written to " << out_path << "\n";
  } else if (action == "drift") {
    if (batches < 2) throw DomainError("--batches must be at least 2");
    if (steps % static_cast<std::uint64_t>(batches) != 0) throw DomainError("--steps must be a multiple of --batches");
    const auto formula = drift_formula(g, p);
    const WalkTrajectory traj = simulate(g, kernel, p, {steps, seed, 0, steps / batches});
    const DriftEstimate est = drift_estimate(traj);
    if (cfg.format == "csv") {
      em.out << "coordinate,formula,estimate,standard_error\n";
      for (int i = 0; i < k; ++i)
        em.out << i + 1 << "," << num(formula[i]) << "," << num(est.mean[i]) << "," << num(est.standard_error[i]) << "\n";
      return kOk;
    }
    j.update({{"formula", formula}, {"estimate", est.mean}, {"standard_error", est.standard_error}, {"batches", est.batches}});
    std::vector<std::vector<std::string>> rows{{"i", "formula", "estimate", "std.err"}};
    for (int i = 0; i < k; ++i)
      rows.push_back({std::to_string(i + 1), num(formula[i]), num(est.mean[i]), num(est.standard_error[i])});
    s << "normalized r = " << tuple(unit.r) << "\n" << grid(rows, "");
  } else {
    throw DomainError("unknown walk action '" + action + "'");
  }
  em.emit(j, s.str());
  return kOk;
}

}  // namespace

std::string phi_pretty(int k) {
  const TransferMatrix phi = build_phi(k);
  return phi_text(phi, true) + "Xi(T) = " + xi_char_poly(k).str() + "\n";
}

bool selftest(std::ostream& out) {
  const std::pair<int, const char*> cases[] = {{2, kGoldenPhiK2}, {3, kGoldenPhiK3}};
  bool ok = true;
  for (const auto& [k, golden] : cases) {
    const std::string got = phi_pretty(k);
    const bool match = got == golden;
    out << (match ? "PASS" : "FAIL") << "  phi/xi golden k=" << k << "\n";
    if (!match) out << "--- expected\n" << golden << "--- got\n" << got;
    ok = ok && match;
  }
  return ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.tol = default_tolerance();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"k-Schur combinatorics, transfer matrices, boundary maps and alcove walks", "kschur"};
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", cfg.tol, "numeric tolerance (default 1e-12 or $KSCHUR_TOL)")
      ->check(CLI::Range(0.0, 1e-3))
      ->check(CLI::Validator([](std::string& v) { return std::stod(v) > 0 ? "" : "tolerance must be positive"; },
                             "POSITIVE"));
  app.add_option("--symbolic-limit", cfg.symbolic_limit, "largest k for symbolic determinants")->check(CLI::Range(1, 6));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"pretty", "json", "csv"}));

  int k = 0;
  std::string partition, to = "h", product, content, at, orientation = "printed", r_text, h_text, s_text, out_path;
  int size = -1, max_size = -1, pieri_r = 0, batches = 50;
  bool irreducible = false, symbolic = false, xi_only = false, primitive = false;
  double h2 = 0, h3 = 0;
  std::uint64_t steps = 1000, seed = 42, every = 0;
  std::function<int(const Emitter&)> action;

  const auto add_k = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--k", k, "level k")->check(CLI::Range(1, 8));
    if (required) opt->required();
  };

  auto* partitions = app.add_subcommand("partitions", "cores, k-conjugates, chains and rectangle factorizations");
  add_k(partitions);
  partitions->add_option("--partition", partition, "a k-bounded partition, e.g. 2,1,1");
  partitions->add_option("--size", size, "list the k-bounded partitions of this size");
  partitions->add_flag("--irreducible", irreducible, "list the irreducible k-bounded partitions");
  partitions->callback([&] {
    action = [&](const Emitter& em) { return cmd_partitions(em, k, partition, size, irreducible); };
  });

  auto* lattice = app.add_subcommand("lattice", "cover relations of B_k");
  add_k(lattice);
  lattice->add_option("--partition", partition, "list the covers of this partition");
  lattice->add_option("--max-size", max_size, "export every edge with source of size < max-size");
  lattice->callback([&] { action = [&](const Emitter& em) { return cmd_lattice(em, k, partition, max_size); }; });

  auto* kschur = app.add_subcommand("kschur", "expansions and products of k-Schur functions");
  add_k(kschur);
  kschur->add_option("--partition", partition, "index of the k-Schur function")->required();
  kschur->add_option("--to", to, "target basis")->check(CLI::IsMember({"h", "schur", "lift"}));
  kschur->add_option("--product", product, "multiply by the k-Schur function of this partition");
  kschur->add_option("--pieri", pieri_r, "multiply by h_r")->check(CLI::Range(1, 8));
  kschur->add_option("--tableaux", content, "count k-tableaux of this content, e.g. 2,1,1");
  kschur->callback([&] {
    action = [&](const Emitter& em) { return cmd_kschur(em, k, partition, to, product, pieri_r, content); };
  });

  auto* phi = app.add_subcommand("phi", "transfer matrix, characteristic polynomial, primitive element data");
  add_k(phi);
  phi->add_flag("--symbolic", symbolic, "symbolic matrix and Xi (default)");
  phi->add_option("--at", at, "specialize at r1,...,rk");
  phi->add_flag("--xi", xi_only, "print only the characteristic polynomial");
  phi->add_flag("--primitive", primitive, "print M, Delta and the polynomials P_kappa");
  phi->add_option("--orientation", orientation, "printed: row = target; source: row = source")
      ->check(CLI::IsMember({"printed", "source"}));
  phi->callback([&] {
    action = [&](const Emitter& em) { return cmd_phi(em, cfg, k, at, xi_only, primitive, orientation); };
  });

  auto* alcove = app.add_subcommand("alcove", "reduced word, alcove center and the involution I");
  add_k(alcove);
  alcove->add_option("--partition", partition, "a k-bounded partition")->required();
  alcove->callback([&] { action = [&](const Emitter& em) { return cmd_alcove(em, k, partition); }; });

  auto* boundary = app.add_subcommand("boundary", "Perron evaluation and the maps f, g");
  boundary->require_subcommand(1);
  for (const char* name : {"f", "g", "point", "normalize", "zeta", "project", "rational", "region"}) {
    auto* sub = boundary->add_subcommand(name);
    const std::string n = name;
    if (n != "region") add_k(sub);
    if (n == "f" || n == "point" || n == "normalize" || n == "zeta" || n == "rational")
      sub->add_option("--r", r_text, "r1,...,rk")->required();
    if (n == "g" || n == "project") sub->add_option("--h", h_text, "h1,...,hk")->required();
    if (n == "rational") {
      sub->add_option("--partition", partition, "kappa")->required();
      sub->add_option("--s", s_text, "value of s_(1) (default: the Perron eigenvalue)");
    }
    if (n == "region") {
      sub->add_option("--h2", h2)->required();
      sub->add_option("--h3", h3)->required();
    }
    sub->callback([&, n] {
      action = [&, n](const Emitter& em) {
        return cmd_boundary(em, cfg, n, k, r_text, h_text, partition, s_text, h2, h3);
      };
    });
  }

  auto* toeplitz = app.add_subcommand("toeplitz", "unitriangular Toeplitz matrices and total positivity");
  toeplitz->require_subcommand(1);
  auto* tcheck = toeplitz->add_subcommand("check", "initial minors, TP and TNN tests");
  tcheck->add_option("--h", h_text, "h1,...,hk")->required();
  auto* trec = toeplitz->add_subcommand("reconstruct", "matrix with prescribed rectangle minors");
  add_k(trec);
  trec->add_option("--r", r_text, "r1,...,rk")->required();
  for (auto* sub : {tcheck, trec}) {
    const std::string n = sub->get_name();
    sub->callback([&, n] {
      action = [&, n](const Emitter& em) { return cmd_toeplitz(em, cfg, n, k, r_text, h_text); };
    });
  }

  auto* walk = app.add_subcommand("walk", "central random walks on alcoves");
  walk->require_subcommand(1);
  for (const char* name : {"simulate", "drift"}) {
    auto* sub = walk->add_subcommand(name);
    const std::string n = name;
    add_k(sub);
    sub->add_option("--r", r_text, "r1,...,rk (rescaled so that t = 1)")->required();
    sub->add_option("--steps", steps, "number of steps");
    sub->add_option("--seed", seed, "random seed");
    if (n == "simulate") {
      sub->add_option("--every", every, "record a checkpoint every N steps");
      sub->add_option("--out", out_path, "CSV file for the trajectory");
    } else {
      sub->add_option("--batches", batches, "number of batches for standard errors");
    }
    sub->callback([&, n] {
      action = [&, n](const Emitter& em) {
        return cmd_walk(em, cfg, n, k, r_text, steps, seed, every, out_path, batches);
      };
    });
  }

  auto* self = app.add_subcommand("selftest", "compare k=2,3 matrices and polynomials with golden files");
  self->callback([&] { action = [&](const Emitter& em) { return selftest(em.out) ? kOk : kInternal; }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Emitter em{cfg, out};
  try {
    return action(em);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const Error& e) {  // DomainError, CapabilityError
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace kschur::cli
