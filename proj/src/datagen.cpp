#include "rmrk/datagen.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rmrk/errors.hpp"
#include "rmrk/matrix_io.hpp"
#include "rmrk/rng.hpp"
#include "rmrk/svd.hpp"

namespace rmrk {

namespace {

DenseMatrix gaussian(Rng& rng, std::size_t rows, std::size_t cols, double stddev) {
  DenseMatrix out(rows, cols);
  for (double& v : out.values()) v = stddev * rng.normal();
  return out;
}

// ||U V^T||_nuc from the r x r core R_U R_V^T (U = Q_U R_U, V = Q_V R_V);
// avoids an SVD of the full m x n product.
double factored_nuclear_norm(const DenseMatrix& u, const DenseMatrix& v) {
  const DenseMatrix ru = matmul_tn(orthonormal_basis(u), u);
  const DenseMatrix rv = matmul_tn(orthonormal_basis(v), v);
  const std::vector<double> s = singular_values(matmul(ru, rv.transposed()));
  return std::accumulate(s.begin(), s.end(), 0.0);
}

}  // namespace

std::string_view instance_kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::Sec5: return "sec5";
    case InstanceKind::Table2: return "table2";
    case InstanceKind::KnownOptimum: return "known_optimum";
  }
  return "unknown";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  for (InstanceKind k : {InstanceKind::Sec5, InstanceKind::Table2, InstanceKind::KnownOptimum})
    if (instance_kind_name(k) == name) return k;
  return std::nullopt;
}

void validate(const InstanceSpec& spec) {
  if (spec.m < 1 || spec.n < 1) throw std::invalid_argument("instance: m and n must be >= 1");
  if (spec.r < 1 || spec.r > std::min(spec.m, spec.n)) throw std::invalid_argument("instance: need 1 <= r <= min(m, n)");
  if (!(spec.p > 0.0 && spec.p < 1.0)) throw std::invalid_argument("instance: p must lie in (0, 1)");
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) throw std::invalid_argument("instance: scale must be > 0");
  if (spec.kind == InstanceKind::Table2 && !(spec.delta && *spec.delta > 0.0 && *spec.delta <= 1.0))
    throw std::invalid_argument("instance: table2 needs delta in (0, 1]");
}

Instance gen_sec5_instance(const InstanceSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  const DenseMatrix u = gaussian(rng, spec.m, spec.r, 1.0);
  const DenseMatrix v = gaussian(rng, spec.n, spec.r, 1.0);
  const DenseMatrix noise = gaussian(rng, spec.m, spec.n, spec.scale);

  DenseMatrix s(spec.m, spec.n);
  auto sv = s.values();
  auto nv = noise.values();
  for (std::size_t i = 0; i < sv.size(); ++i)
    if (rng.uniform() < spec.p) sv[i] = nv[i];
  const double s_bound = l1_norm(s);
  if (s_bound == 0.0) throw DegenerateInstance("sparse component has no nonzero entry; increase p or m * n");

  DenseMatrix l = spec.scale * matmul(u, v.transposed());
  Instance inst{l + s, std::move(l), std::move(s), spec.scale * factored_nuclear_norm(u, v), s_bound, std::nullopt};
  return inst;
}

Instance gen_table2_instance(const InstanceSpec& spec) {
  validate(spec);
  if (spec.kind != InstanceKind::Table2) throw std::invalid_argument("gen_table2_instance: kind must be table2");
  Rng rng(spec.seed);
  const double stddev = 1.0 / std::sqrt(static_cast<double>(spec.n));
  const DenseMatrix u = gaussian(rng, spec.m, spec.r, stddev);
  const DenseMatrix v = gaussian(rng, spec.n, spec.r, stddev);

  DenseMatrix s(spec.m, spec.n);
  for (double& e : s.values()) {
    const double draw = rng.uniform();
    if (draw < 0.5 * spec.p)
      e = 1.0;
    else if (draw < spec.p)
      e = -1.0;
  }
  if (max_abs(s) == 0.0) throw DegenerateInstance("Y* is the zero matrix; increase p or m * n");

  DenseMatrix l = matmul(u, v.transposed());
  const double s_bound = lp_norm(s, 1.0 + *spec.delta);
  Instance inst{l + s, std::move(l), std::move(s), factored_nuclear_norm(u, v), s_bound, std::nullopt};
  return inst;
}

Instance gen_known_optimum(const InstanceSpec& spec) {
  Instance inst = gen_sec5_instance(spec);
  inst.f_star = 0.0;
  return inst;
}

Instance generate(const InstanceSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::Sec5: return gen_sec5_instance(spec);
    case InstanceKind::Table2: return gen_table2_instance(spec);
    case InstanceKind::KnownOptimum: return gen_known_optimum(spec);
  }
  throw std::invalid_argument("generate: unknown instance kind");
}

void export_instance(const Instance& inst, const InstanceSpec& spec, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
  const fs::path base(dir);
  write_matrix((base / "M.mtx").string(), inst.m_data);
  write_matrix((base / "L.mtx").string(), inst.l_true);
  write_matrix((base / "S.mtx").string(), inst.s_true);

  std::ofstream meta(base / "meta.txt");
  if (!meta) throw IoError("cannot write " + (base / "meta.txt").string());
  meta << "kind=" << instance_kind_name(spec.kind) << '\n'
       << "m=" << spec.m << '\n'
       << "n=" << spec.n << '\n'
       << "r=" << spec.r << '\n'
       << "p=" << format_double(spec.p) << '\n'
       << "scale=" << format_double(spec.scale) << '\n';
  if (spec.delta) meta << "delta=" << format_double(*spec.delta) << '\n';
  meta << "seed=" << spec.seed << '\n'
       << "tau=" << format_double(inst.tau) << '\n'
       << "s_bound=" << format_double(inst.s_bound) << '\n';
  if (inst.f_star) meta << "f_star=" << format_double(*inst.f_star) << '\n';
  if (!meta) throw IoError("write failed for " + (base / "meta.txt").string());
}

}  // namespace rmrk
