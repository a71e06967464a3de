#include "homcon/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "homcon/parallel.hpp"

namespace homcon {

std::vector<std::size_t> GradedComplex::dims() const {
  std::vector<std::size_t> d(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) d[i] = labels[i].size();
  if (reversed_grading) std::reverse(d.begin(), d.end());
  return d;
}

void GradedComplex::validate() const {
  if (boundary.size() != labels.size())
    throw std::logic_error("GradedComplex: boundary/label count mismatch");
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    std::size_t want_rows = i == 0 ? 0 : labels[i - 1].size();
    if (boundary[i].rows() != want_rows || boundary[i].cols() != labels[i].size())
      throw std::logic_error("GradedComplex: boundary shape mismatch at rank " +
                             std::to_string(i));
  }
}

bool GradedComplex::is_chain_complex() const {
  for (std::size_t i = 0; i + 1 < boundary.size(); ++i) {
    if (i == 0) continue;  // boundary[0] has zero rows
    if (!(boundary[i] * boundary[i + 1]).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> homology_ranks(const GradedComplex& c) {
  std::size_t top = c.labels.size();
  std::vector<std::size_t> bd_rank(top + 1, 0);  // bd_rank[i] = rank of d_i, d_{top} = 0
  parallel_for(top, [&](std::size_t i) { bd_rank[i] = c.boundary[i].rank(); });
  std::vector<std::size_t> h(top);
  for (std::size_t i = 0; i < top; ++i) {
    std::size_t outgoing = bd_rank[i];
    std::size_t incoming = i + 1 < top ? bd_rank[i + 1] : 0;
    h[i] = c.labels[i].size() - outgoing - incoming;
  }
  if (c.reversed_grading) std::reverse(h.begin(), h.end());
  return h;
}

long long euler_characteristic(const GradedComplex& c) {
  long long chi = 0;
  int sign = 1;
  for (std::size_t d : c.dims()) {
    chi += sign * static_cast<long long>(d);
    sign = -sign;
  }
  return chi;
}

}  // namespace homcon
