#include <omp.h>

#include <cstring>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "rmrk/kernels.hpp"

namespace k = rmrk::kernels;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool bitwise_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<double> values(std::size_t n, std::uint64_t seed) {
  const rmrk::DenseMatrix m = testing::random_matrix(1, n, seed);
  return {m.values().begin(), m.values().end()};
}

}  // namespace

TEST_CASE("omp kernels match the serial reference bit for bit") {
  for (int threads : {1, 2, 3, 4}) {
    omp_set_num_threads(threads);
    CAPTURE(threads);
    for (std::size_t n : {1u, 7u, 1024u, 1025u, 5000u, 70001u}) {
      CAPTURE(n);
      const auto a = values(n, 11 + n);
      const auto b = values(n, 23 + n);
      CHECK(bitwise_equal(k::serial::dot(a, b), k::omp::dot(a, b)));
      CHECK(bitwise_equal(k::serial::sum_abs(a), k::omp::sum_abs(a)));
      std::vector<double> s(n), o(n);
      k::serial::lerp(a, b, 0.3, s);
      k::omp::lerp(a, b, 0.3, o);
      CHECK(bitwise_equal(s, o));
    }
    for (auto [m, kk, n] : {std::array<std::size_t, 3>{1, 1, 1}, {3, 5, 2}, {40, 40, 40}, {97, 61, 83}, {150, 40, 130}}) {
      CAPTURE(m);
      const auto a = values(m * kk, 5);
      const auto b = values(kk * n, 6);
      std::vector<double> s(m * n), o(m * n);
      k::serial::gemm(m, kk, n, a, b, s);
      k::omp::gemm(m, kk, n, a, b, o);
      CHECK(bitwise_equal(s, o));
      std::vector<double> ts(m * kk), to(m * kk);
      k::serial::transpose(m, kk, a, ts);
      k::omp::transpose(m, kk, a, to);
      CHECK(bitwise_equal(ts, to));
    }
  }
  omp_set_num_threads(1);
}

TEST_CASE("serial kernels compute the textbook results") {
  const std::vector<double> a{1, 2, 3, 4, 5, 6};  // 2 x 3
  const std::vector<double> b{7, 8, 9, 10, 11, 12};  // 3 x 2
  std::vector<double> c(4);
  k::serial::gemm(2, 3, 2, a, b, c);
  CHECK(c == std::vector<double>{58, 64, 139, 154});
  std::vector<double> t(6);
  k::serial::transpose(2, 3, a, t);
  CHECK(t == std::vector<double>{1, 4, 2, 5, 3, 6});
  CHECK(k::serial::dot(a, a) == 91.0);
  CHECK(k::serial::sum_abs(std::vector<double>{-1, 2, -3}) == 6.0);
  std::vector<double> l(2);
  k::serial::lerp(std::vector<double>{0, 10}, std::vector<double>{10, 0}, 0.25, l);
  CHECK(l == std::vector<double>{2.5, 7.5});
}
