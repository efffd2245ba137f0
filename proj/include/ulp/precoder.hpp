#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ulp/channel.hpp"
#include "ulp/numerics.hpp"

namespace ulp {

/// Which channel the precoder inverts: H itself, or H stacked over u * I.
enum class PrecoderFamily { conventional, unified };

enum class SchemeLabel { lzfp, lmmsep, ulzfp, ulmmsep };

std::string_view to_string(SchemeLabel label) noexcept;

/// Point in the (u, m) precoder family.
///
/// The label follows from (u, m): u = 0 selects the plain channel, m = 0
/// disables the noise regularizer. A unified-family mode with u = 0 is the
/// unified construction evaluated at its reduction point; its name carries a
/// "-u0" suffix so it can be told apart from the conventional scheme.
struct SchemeMode {
  PrecoderFamily family = PrecoderFamily::conventional;
  double u = 0.0;
  double m = 0.0;

  SchemeLabel label() const noexcept;

  /// Canonical name, e.g. "LZFP", "LMMSEP-u0", "ULMMSEP:u=0.5".
  /// Parameters equal to the defaults (u = 1, m = 1) are omitted.
  std::string name() const;

  /// Inverse of name(); throws ConfigError on unknown or inconsistent input.
  static SchemeMode parse(std::string_view text);

  /// Throws ConfigError if (family, u, m) is inconsistent.
  void validate() const;

  bool operator==(const SchemeMode&) const = default;
};

/// LZFP, LMMSEP (m = 1), ULZFP (u = 1), ULMMSEP (u = 1, m = 1).
std::vector<SchemeMode> default_schemes();

struct PowerScaled {
  ComplexMatrix f;
  double beta = 0.0;
};

/// beta = sqrt(total_power / tr(F_raw F_raw^H)), F = beta * F_raw.
PowerScaled power_scale(const ComplexMatrix& f_raw, std::size_t total_power);

/// Which part of a unified precoder sets beta.
enum class PowerNormalization {
  full_matrix,  // all K_at + M_T columns, trailing block included
  data_block,   // only the K_at columns that carry symbols
};

struct Precoder {
  ComplexMatrix f;  // M_T x K_at (conventional or u = 0) or M_T x (K_at + M_T)
  double beta = 0.0;
  SchemeMode mode;
  double sigma2 = 0.0;
  std::size_t data_columns = 0;

  /// Columns that multiply the transmitted symbol vector.
  ComplexMatrix data_block() const { return column_block(f, 0, data_columns); }
};

/// F = beta * H^H (H H^H + m sigma2 I)^{-1}.
Precoder build_conventional(const ChannelMatrix& channel, double m, double sigma2);

/// F_u = beta_u * (H^H H + (u^2 + m sigma2) I)^{-1} [H^H  u I].
///
/// This column-space form equals H_u^H (H_u H_u^H + m sigma2 I)^{-1} whenever
/// the latter exists and is the pseudo-inverse of H_u when m = 0 < u. At u = 0
/// the result is exactly build_conventional (conventional width, same bits).
Precoder build_unified(const ChannelMatrix& channel, double u, double m, double sigma2,
                       PowerNormalization normalization = PowerNormalization::full_matrix);

Precoder build_precoder(const ChannelMatrix& channel, const SchemeMode& mode, double sigma2,
                        PowerNormalization normalization = PowerNormalization::full_matrix);

/// beta^{-1} H F_data; the identity for exact zero forcing.
ComplexMatrix effective_gain(const ChannelMatrix& channel, const Precoder& precoder);

}  // namespace ulp
