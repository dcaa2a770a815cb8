#pragma once

#include <Eigen/Dense>

#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ccf {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using VecX = Eigen::VectorXd;
using Mat3 = Eigen::Matrix3d;
using Mat43 = Eigen::Matrix<double, 4, 3>;

/// Tangent vector stored as components (a,b,c) along the orthonormal
/// frame {X, Y, T} at its base point.  The frame is orthonormal, so the
/// metric on components is the Euclidean dot product.
using FrameVec = Eigen::Vector3d;

// ---------------------------------------------------------------------------
// Error taxonomy.  All conditions are reported through exceptions; the CLI
// maps them onto its exit-code contract.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point lies outside the model space (hyperbolic disc, unit sphere).
struct DomainError : Error {
  using Error::Error;
};

/// Malformed or inconsistent user input (configs, parameter ranges).
struct InputError : Error {
  using Error::Error;
};

/// Evaluation requested at a singular point (|N_h| = 0).
struct SingularPointError : Error {
  using Error::Error;
};

/// Adaptive integration failed; carries the last accepted state.
struct IntegrationError : Error {
  IntegrationError(const std::string& what, double s, VecX y)
      : Error(what), last_s(s), last_y(std::move(y)) {}
  double last_s;
  VecX last_y;
};

/// Quadrature refinement did not converge.
struct QuadratureError : Error {
  using Error::Error;
};

/// Operation not defined for the given variant.
struct UnsupportedError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Deterministic numerics helpers.
// ---------------------------------------------------------------------------

/// Pairwise summation over a fixed-order sequence.  The reduction tree
/// depends only on the length, so results are reproducible for a fixed
/// grid regardless of how the terms were produced.
inline double pairwise_sum(const double* data, std::size_t n) {
  if (n == 0) return 0.0;
  if (n == 1) return data[0];
  if (n <= 8) {
    double acc = data[0];
    for (std::size_t i = 1; i < n; ++i) acc += data[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), v.size());
}

/// Number of worker threads: CCFORMS_THREADS caps the hardware count.
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CCFORMS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

/// Static-partition parallel loop.  Each index writes only its own slot,
/// so the result is independent of the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = thread_budget();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

/// Fixed float formatting used by every emitted file: 17 significant
/// digits, '.' decimal separator, no locale dependence.
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace ccf
