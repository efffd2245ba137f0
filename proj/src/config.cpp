#include "ulp/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "ulp/errors.hpp"
#include "ulp/text.hpp"

namespace ulp {
namespace {

std::string_view strip_brackets(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = text.substr(1, text.size() - 2);
  }
  return text;
}

std::uint64_t positive_count(std::string_view value, std::string_view key) {
  const auto n = parse_unsigned(value, key);
  if (n == 0) throw ConfigError(std::string(key) + ": expected an integer >= 1, got 0");
  return n;
}

bool parse_flag(std::string_view value, std::string_view key) {
  const std::string_view v = trim(value);
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(v) + "'");
}

template <typename Joinable, typename Format>
std::string join(const Joinable& items, Format format) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += format(item);
  }
  return out;
}

}  // namespace

void SimulationConfig::validate() const {
  if (tx_antennas == 0) throw ConfigError("M_T: expected an integer >= 1");
  if (candidate_users == 0) throw ConfigError("K_t: expected an integer >= 1");
  if (active_users == 0) throw ConfigError("K_at: expected an integer >= 1");
  if (active_users > candidate_users) {
    throw ConfigError("K_at: expected K_at <= K_t = " + std::to_string(candidate_users) +
                      ", got " + std::to_string(active_users));
  }
  if (active_users != tx_antennas) {
    throw ConfigError("K_at: expected K_at = M_T = " + std::to_string(tx_antennas) + ", got " +
                      std::to_string(active_users));
  }
  if (realizations == 0 || realizations > std::numeric_limits<std::uint32_t>::max()) {
    throw ConfigError("n_realizations: expected an integer in [1, 2^32 - 1]");
  }
  if (frames_per_realization == 0) {
    throw ConfigError("frames_per_realization: expected an integer >= 1");
  }
  if (symbols_per_frame == 0) throw ConfigError("symbols_per_frame: expected an integer >= 1");
  const double bits = static_cast<double>(realizations) * frames_per_realization *
                      symbols_per_frame * active_users * 2.0;
  if (bits > 9.0e18) throw ConfigError("n_realizations: total bit count per point overflows");

  if (snr_db_list.empty()) throw ConfigError("snr_db_list: expected at least one SNR value");
  std::set<double> seen_snr;
  for (double s : snr_db_list) {
    if (std::isnan(s) || s == -std::numeric_limits<double>::infinity()) {
      throw ConfigError("snr_db_list: expected real dB values");
    }
    if (!seen_snr.insert(s).second) {
      throw ConfigError("snr_db_list: duplicate value " + format_shortest(s));
    }
  }
  if (schemes.empty()) throw ConfigError("schemes: expected at least one scheme");
  std::set<std::string> seen_scheme;
  for (const SchemeMode& s : schemes) {
    s.validate();
    if (!seen_scheme.insert(s.name()).second) {
      throw ConfigError("schemes: duplicate scheme " + s.name());
    }
  }
  if (!std::isfinite(snr_offset_db)) throw ConfigError("snr_offset_db: expected a finite real");
}

std::uint64_t SimulationConfig::bits_per_point() const noexcept {
  return realizations * frames_per_realization * symbols_per_frame * active_users * 2;
}

std::string to_config_text(const SimulationConfig& c) {
  std::ostringstream out;
  out << "M_T = " << c.tx_antennas << '\n'
      << "K_t = " << c.candidate_users << '\n'
      << "K_at = " << c.active_users << '\n'
      << "snr_db_list = " << join(c.snr_db_list, format_shortest) << '\n'
      << "schemes = " << join(c.schemes, [](const SchemeMode& s) { return s.name(); }) << '\n'
      << "n_realizations = " << c.realizations << '\n'
      << "frames_per_realization = " << c.frames_per_realization << '\n'
      << "symbols_per_frame = " << c.symbols_per_frame << '\n'
      << "master_seed = " << c.master_seed << '\n'
      << "normalize_data_block_only = " << (c.normalize_data_block_only ? "true" : "false")
      << '\n'
      << "snr_offset_db = " << format_shortest(c.snr_offset_db) << '\n';
  return out.str();
}

std::uint64_t config_hash(const SimulationConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : to_config_text(config)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<double> parse_snr_list(std::string_view text) {
  std::vector<double> out;
  for (const std::string& item : split(strip_brackets(text), ',')) {
    out.push_back(parse_double(item, "snr_db_list"));
  }
  return out;
}

std::vector<SchemeMode> parse_scheme_list(std::string_view text) {
  std::vector<SchemeMode> out;
  for (const std::string& item : split(strip_brackets(text), ',')) {
    out.push_back(SchemeMode::parse(item));
  }
  return out;
}

void set_config_value(SimulationConfig& c, std::string_view key, std::string_view value) {
  auto count = [&] { return positive_count(value, key); };
  if (key == "M_T") {
    c.tx_antennas = count();
  } else if (key == "K_t") {
    c.candidate_users = count();
  } else if (key == "K_at") {
    c.active_users = count();
  } else if (key == "snr_db_list") {
    c.snr_db_list = parse_snr_list(value);
  } else if (key == "schemes") {
    c.schemes = parse_scheme_list(value);
  } else if (key == "n_realizations") {
    c.realizations = count();
  } else if (key == "frames_per_realization") {
    c.frames_per_realization = count();
  } else if (key == "symbols_per_frame") {
    c.symbols_per_frame = count();
  } else if (key == "master_seed") {
    c.master_seed = parse_unsigned(value, key);
  } else if (key == "normalize_data_block_only") {
    c.normalize_data_block_only = parse_flag(value, key);
  } else if (key == "snr_offset_db") {
    c.snr_offset_db = parse_double(value, key);
  } else {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
}

SimulationConfig parse_config_text(std::string_view text, const SimulationConfig& base) {
  SimulationConfig config = base;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(body.substr(0, eq)));
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": key '" + key + "' repeated");
    }
    set_config_value(config, key, body.substr(eq + 1));
  }
  config.validate();
  return config;
}

SimulationConfig parse_config_file(const std::filesystem::path& path,
                                   const SimulationConfig& base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str(), base);
}

}  // namespace ulp
