#include "ulp/precoder.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "ulp/errors.hpp"
#include "ulp/text.hpp"

namespace ulp {
namespace {

void require_nonnegative(double value, const char* what) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(what) + " must be finite and non-negative");
  }
}

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

// tr(F F^H) as the sum of squared magnitudes.
double trace_power(const ComplexMatrix& f) {
  double s = 0.0;
  for (const Complex& v : f.entries()) s += std::norm(v);
  return s;
}

}  // namespace

std::string_view to_string(SchemeLabel label) noexcept {
  switch (label) {
    case SchemeLabel::lzfp: return "LZFP";
    case SchemeLabel::lmmsep: return "LMMSEP";
    case SchemeLabel::ulzfp: return "ULZFP";
    case SchemeLabel::ulmmsep: return "ULMMSEP";
  }
  return "?";
}

SchemeLabel SchemeMode::label() const noexcept {
  if (u > 0.0) return m > 0.0 ? SchemeLabel::ulmmsep : SchemeLabel::ulzfp;
  return m > 0.0 ? SchemeLabel::lmmsep : SchemeLabel::lzfp;
}

std::string SchemeMode::name() const {
  std::string out(to_string(label()));
  if (family == PrecoderFamily::unified && u == 0.0) out += "-u0";
  if (u > 0.0 && u != 1.0) out += ":u=" + format_shortest(u);
  if (m > 0.0 && m != 1.0) out += ":m=" + format_shortest(m);
  return out;
}

void SchemeMode::validate() const {
  require_nonnegative(u, "scheme parameter u");
  require_nonnegative(m, "scheme parameter m");
  if (family == PrecoderFamily::conventional && u != 0.0) {
    throw ConfigError("conventional scheme cannot carry u = " + format_shortest(u));
  }
}

SchemeMode SchemeMode::parse(std::string_view text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.empty() || parts.front().empty()) throw ConfigError("empty scheme name");

  const std::string base = upper(parts.front());
  SchemeMode mode;
  bool wants_u = false;
  bool wants_m = false;
  if (base == "LZFP") {
    mode = {PrecoderFamily::conventional, 0.0, 0.0};
  } else if (base == "LMMSEP") {
    mode = {PrecoderFamily::conventional, 0.0, 1.0};
    wants_m = true;
  } else if (base == "LZFP-U0") {
    mode = {PrecoderFamily::unified, 0.0, 0.0};
  } else if (base == "LMMSEP-U0") {
    mode = {PrecoderFamily::unified, 0.0, 1.0};
    wants_m = true;
  } else if (base == "ULZFP") {
    mode = {PrecoderFamily::unified, 1.0, 0.0};
    wants_u = true;
  } else if (base == "ULMMSEP") {
    mode = {PrecoderFamily::unified, 1.0, 1.0};
    wants_u = wants_m = true;
  } else {
    throw ConfigError("unknown scheme '" + std::string(parts.front()) +
                      "' (expected LZFP, LMMSEP, ULZFP, ULMMSEP, LZFP-u0 or LMMSEP-u0)");
  }

  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    const std::string key = parts[i].substr(0, eq);
    if (eq == std::string::npos || (key != "u" && key != "m")) {
      throw ConfigError("scheme '" + std::string(text) + "': bad parameter '" + parts[i] +
                        "' (expected u=X or m=X)");
    }
    const double value = parse_double(parts[i].substr(eq + 1), "scheme parameter " + key);
    if (key == "u") {
      if (!wants_u) throw ConfigError("scheme " + parts.front() + " does not take u");
      mode.u = value;
    } else {
      if (!wants_m) throw ConfigError("scheme " + parts.front() + " does not take m");
      mode.m = value;
    }
  }
  mode.validate();
  if (upper(to_string(mode.label())) != base.substr(0, base.find('-'))) {
    throw ConfigError("scheme '" + std::string(text) + "': parameters u=" +
                      format_shortest(mode.u) + ", m=" + format_shortest(mode.m) +
                      " define " + std::string(to_string(mode.label())));
  }
  return mode;
}

std::vector<SchemeMode> default_schemes() {
  return {
      {PrecoderFamily::conventional, 0.0, 0.0},
      {PrecoderFamily::conventional, 0.0, 1.0},
      {PrecoderFamily::unified, 1.0, 0.0},
      {PrecoderFamily::unified, 1.0, 1.0},
  };
}

PowerScaled power_scale(const ComplexMatrix& f_raw, std::size_t total_power) {
  const double power = trace_power(f_raw);
  if (!(power > 0.0) || !std::isfinite(power)) {
    throw DegeneratePrecoderError("power_scale: tr(F F^H) = " + format_shortest(power) +
                                  " cannot be normalized");
  }
  const double beta = std::sqrt(static_cast<double>(total_power) / power);
  return {beta * f_raw, beta};
}

Precoder build_conventional(const ChannelMatrix& channel, double m, double sigma2) {
  require_nonnegative(m, "m");
  require_nonnegative(sigma2, "sigma2");
  const ComplexMatrix& h = channel.h;
  // (H H^H + r I)^{-1} is Hermitian, so F_raw = ((H H^H + r I)^{-1} H)^H.
  const ComplexMatrix f_raw = hermitian(solve_hermitian(matmul(h, hermitian(h)), h, m * sigma2));
  auto [f, beta] = power_scale(f_raw, channel.antenna_count());
  return Precoder{std::move(f), beta, {PrecoderFamily::conventional, 0.0, m}, sigma2,
                  channel.user_count()};
}

Precoder build_unified(const ChannelMatrix& channel, double u, double m, double sigma2,
                       PowerNormalization normalization) {
  require_nonnegative(u, "u");
  require_nonnegative(m, "m");
  require_nonnegative(sigma2, "sigma2");
  if (u == 0.0) {
    Precoder p = build_conventional(channel, m, sigma2);
    p.mode = {PrecoderFamily::unified, 0.0, m};
    return p;
  }

  const ComplexMatrix& h = channel.h;
  const std::size_t m_t = channel.antenna_count();
  const std::size_t k = channel.user_count();
  const ComplexMatrix h_h = hermitian(h);
  // H_u^H H_u = H^H H + u^2 I and H_u^H = [H^H  u I].
  const ComplexMatrix f_raw = solve_hermitian(
      matmul(h_h, h), hstack(h_h, u * ComplexMatrix::identity(m_t)), u * u + m * sigma2);

  PowerScaled scaled;
  if (normalization == PowerNormalization::full_matrix) {
    scaled = power_scale(f_raw, m_t);
  } else {
    const double beta = power_scale(column_block(f_raw, 0, k), m_t).beta;
    scaled = {beta * f_raw, beta};
  }
  auto& [f, beta] = scaled;
  return Precoder{std::move(f), beta, {PrecoderFamily::unified, u, m}, sigma2, k};
}

Precoder build_precoder(const ChannelMatrix& channel, const SchemeMode& mode, double sigma2,
                        PowerNormalization normalization) {
  mode.validate();
  if (mode.family == PrecoderFamily::conventional) {
    return build_conventional(channel, mode.m, sigma2);
  }
  return build_unified(channel, mode.u, mode.m, sigma2, normalization);
}

ComplexMatrix effective_gain(const ChannelMatrix& channel, const Precoder& precoder) {
  return (1.0 / precoder.beta) * matmul(channel.h, precoder.data_block());
}

}  // namespace ulp
