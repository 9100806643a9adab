#include "kshift/weight_spec.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace kshift {

namespace {

/// "key=value" -> value, checking the key.
std::string_view keyed_value(std::string_view body, std::string_view key, std::string_view spec) {
  const auto eq = body.find('=');
  if (eq == std::string_view::npos || body.substr(0, eq) != key) {
    throw std::invalid_argument("weight spec '" + std::string(spec) + "': expected '" + std::string(key) + "=<value>'");
  }
  return body.substr(eq + 1);
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  return v;
}

WeightSequence parse_weight_spec(std::string_view spec, int precision_bits) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (head == "const") {
    if (colon != std::string_view::npos) throw std::invalid_argument("weight spec 'const' takes no parameters");
    return WeightSequence::constant(precision_bits);
  }
  if (head == "paper") return WeightSequence::paper(parse_real(keyed_value(body, "c", spec)), precision_bits);
  if (head == "geom") return WeightSequence::geometric(parse_real(keyed_value(body, "r", spec)), precision_bits);
  if (head == "user") {
    const std::string_view list = keyed_value(body, "periodic", spec);
    auto logs = std::make_shared<std::vector<double>>();
    std::size_t start = 0;
    while (start <= list.size()) {
      const auto comma = list.find(',', start);
      const auto piece = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      logs->push_back(parse_real(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const mpz_class period(static_cast<unsigned long>(logs->size()));
    return WeightSequence::user(
        "periodic=" + std::string(list),
        [logs, period](const Index& n) {
          mpz_class r;
          mpz_fdiv_r(r.get_mpz_t(), n.mpz().get_mpz_t(), period.get_mpz_t());
          return (*logs)[r.get_ui()];
        },
        false, precision_bits);
  }
  throw std::invalid_argument("unknown weight spec '" + std::string(spec) + "' (expected paper:c=, geom:r=, const, user:periodic=)");
}

}  // namespace kshift
