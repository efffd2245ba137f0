#pragma once

#include <cstddef>
#include <vector>

#include "ulp/numerics.hpp"
#include "ulp/random.hpp"

namespace ulp {

/// Candidate users, one single-antenna user per row, entries CN(0, 1).
struct UserPool {
  ComplexMatrix rows;  // K_t x M_T

  std::size_t user_count() const noexcept { return rows.rows(); }
  std::size_t antenna_count() const noexcept { return rows.cols(); }
};

/// Downlink channel of the active users.
struct ChannelMatrix {
  ComplexMatrix h;                                  // K_at x M_T
  std::vector<std::size_t> selected_user_indices;   // ascending pool indices

  std::size_t user_count() const noexcept { return h.rows(); }
  std::size_t antenna_count() const noexcept { return h.cols(); }
};

/// Channel stacked over u * I_{M_T}.
struct UnifiedChannel {
  ComplexMatrix h_u;  // (K_at + M_T) x M_T
  double u = 0.0;
};

/// i.i.d. Rayleigh pool; consumes exactly 4 * K_t * M_T words of `rng`,
/// entries drawn row by row.
UserPool draw_user_pool(RandomStream& rng, std::size_t user_count, std::size_t antenna_count);

/// Keeps the `active_users` rows with the largest Euclidean norm, ties going
/// to the smaller pool index, and returns them in pool order.
ChannelMatrix select_users(const UserPool& pool, std::size_t active_users);

ChannelMatrix full_channel(ComplexMatrix h);

UnifiedChannel augment(const ChannelMatrix& channel, double u);

}  // namespace ulp
