#include "ncq/spectral.hpp"

#include <fftw3.h>

#include <mutex>

#include "ncq/kernels.hpp"

namespace ncq {

namespace {
// The FFTW planner mutates global state; serialize plan create/destroy.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

SpectralOp::SpectralOp(const Grid& grid) : grid_(grid) {
  const std::size_t n = grid_.total_points();
  std::vector<std::complex<double>> scratch(n);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());

  // FFTW is row-major (last dim fastest); our axis 0 is fastest, so the
  // dims are passed in reverse axis order.
  int dims[3] = {1, 1, 1};
  const int rank = grid_.dim();
  for (int a = 0; a < rank; ++a) dims[a] = grid_.axis(rank - 1 - a).n_points;

  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward_plan_ = reinterpret_cast<fftw_plan_s*>(
        fftw_plan_dft(rank, dims, ptr, ptr, FFTW_FORWARD, flags));
    inverse_plan_ = reinterpret_cast<fftw_plan_s*>(
        fftw_plan_dft(rank, dims, ptr, ptr, FFTW_BACKWARD, flags));
  }
  if (forward_plan_ == nullptr || inverse_plan_ == nullptr)
    fail(ErrKind::numerical, "FFTW plan creation failed");

  q_squared_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double q2 = 0.0;
    for (int a = 0; a < rank; ++a) {
      const double q = grid_.frequency(a, grid_.index_on_axis(i, a));
      q2 += q * q;
    }
    q_squared_[i] = q2;
  }
}

SpectralOp::~SpectralOp() {
  if (forward_plan_ != nullptr || inverse_plan_ != nullptr) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward_plan_) fftw_destroy_plan(reinterpret_cast<fftw_plan>(forward_plan_));
    if (inverse_plan_) fftw_destroy_plan(reinterpret_cast<fftw_plan>(inverse_plan_));
  }
}

SpectralOp::SpectralOp(SpectralOp&& other) noexcept
    : grid_(std::move(other.grid_)),
      forward_plan_(other.forward_plan_),
      inverse_plan_(other.inverse_plan_),
      q_squared_(std::move(other.q_squared_)) {
  other.forward_plan_ = nullptr;
  other.inverse_plan_ = nullptr;
}

SpectralOp& SpectralOp::operator=(SpectralOp&& other) noexcept {
  if (this != &other) {
    this->~SpectralOp();
    new (this) SpectralOp(std::move(other));
  }
  return *this;
}

void SpectralOp::forward(std::complex<double>* data) const {
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(reinterpret_cast<fftw_plan>(forward_plan_), ptr, ptr);
}

void SpectralOp::inverse(std::complex<double>* data) const {
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(reinterpret_cast<fftw_plan>(inverse_plan_), ptr, ptr);
  const std::size_t n = grid_.total_points();
  kernels::scale({data, n}, 1.0 / static_cast<double>(n));
}

std::vector<double> SpectralOp::q_axis(int a) const {
  const std::size_t n = grid_.total_points();
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i)
    q[i] = grid_.frequency(a, grid_.index_on_axis(i, a));
  return q;
}

}  // namespace ncq
