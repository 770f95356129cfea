#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rmrk/matrix.hpp"

namespace rmrk {

enum class InstanceKind { Sec5, Table2, KnownOptimum };

std::string_view instance_kind_name(InstanceKind k);
std::optional<InstanceKind> parse_instance_kind(std::string_view name);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::KnownOptimum;
  std::size_t m = 20;
  std::size_t n = 20;
  std::size_t r = 3;
  double p = 0.05;  // probability that an entry of S is nonzero
  double scale = 10.0;
  std::optional<double> delta;  // Table2: Y is bounded in the l_{1+delta} norm
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when r > min(m, n), p is outside (0, 1),
/// scale <= 0, or a Table2 spec lacks delta in (0, 1].
void validate(const InstanceSpec& spec);

struct Instance {
  DenseMatrix m_data;
  DenseMatrix l_true;
  DenseMatrix s_true;
  double tau = 0.0;      // ||L||_nuc
  double s_bound = 0.0;  // ||S||_1, or ||S||_{1+delta} for Table2
  std::optional<double> f_star;  // 0 for known-optimum instances
};

/// L = scale * U V^T with U (m x r), V (n x r) standard Gaussian;
/// S = scale * N masked entrywise, keeping an entry with probability p.
/// Draw order: U, V, N, then one uniform per mask entry.
/// Throws DegenerateInstance when no entry of S survives.
Instance gen_sec5_instance(const InstanceSpec& spec);

/// X* = U V^T with U, V entries from N(0, 1/n). Each entry of Y* is +1 with
/// probability p / 2, -1 with probability p / 2, else 0 (the default p = 0.1
/// gives the 0.9 / 0.05 / 0.05 split). Draw order: U, V, one uniform per entry
/// of Y*. Throws DegenerateInstance when Y* is all zero.
Instance gen_table2_instance(const InstanceSpec& spec);

/// gen_sec5_instance with f_star = 0: (L, S) is feasible for the exact
/// bounds and fits M exactly.
Instance gen_known_optimum(const InstanceSpec& spec);

/// Dispatch on spec.kind.
Instance generate(const InstanceSpec& spec);

/// Writes M.mtx, L.mtx, S.mtx and meta.txt (key=value) into dir.
void export_instance(const Instance& inst, const InstanceSpec& spec, const std::string& dir);

}  // namespace rmrk
