#include "ulp/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ulp/errors.hpp"

namespace ulp {

UserPool draw_user_pool(RandomStream& rng, std::size_t user_count, std::size_t antenna_count) {
  if (user_count == 0 || antenna_count == 0) {
    throw ConfigError("draw_user_pool: K_t and M_T must be at least 1");
  }
  std::vector<Complex> entries(user_count * antenna_count);
  for (Complex& v : entries) v = rng.complex_normal();
  return UserPool{ComplexMatrix(user_count, antenna_count, std::move(entries))};
}

ChannelMatrix select_users(const UserPool& pool, std::size_t active_users) {
  const std::size_t total = pool.user_count();
  if (active_users == 0 || active_users > total) {
    throw ConfigError("select_users: K_at = " + std::to_string(active_users) +
                      " must lie in [1, K_t = " + std::to_string(total) + "]");
  }
  const std::vector<double> norms = row_norms(pool.rows);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });
  order.resize(active_users);
  std::sort(order.begin(), order.end());

  ComplexMatrix h(active_users, pool.antenna_count());
  for (std::size_t i = 0; i < active_users; ++i) {
    const auto src = pool.rows.row(order[i]);
    std::copy(src.begin(), src.end(), h.row(i).begin());
  }
  return ChannelMatrix{std::move(h), std::move(order)};
}

ChannelMatrix full_channel(ComplexMatrix h) {
  std::vector<std::size_t> indices(h.rows());
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  return ChannelMatrix{std::move(h), std::move(indices)};
}

UnifiedChannel augment(const ChannelMatrix& channel, double u) {
  if (!(u >= 0.0) || !std::isfinite(u)) {
    throw ConfigError("augment: u must be finite and non-negative");
  }
  const std::size_t m_t = channel.antenna_count();
  return UnifiedChannel{vstack(channel.h, u * ComplexMatrix::identity(m_t)), u};
}

}  // namespace ulp
