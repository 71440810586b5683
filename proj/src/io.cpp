#include "siegelscan/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace siegelscan {

namespace {

std::string meta_to_string(const std::optional<long>& v) {
  return v ? std::to_string(*v) : "unset";
}

std::optional<long> meta_from_string(const std::string& s) {
  if (s == "unset") return std::nullopt;
  return std::stol(s);
}

// Parses "key=value" from a header token.
std::string header_value(const std::string& token, const std::string& key) {
  std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("malformed header token: " + token);
  }
  return token.substr(prefix.size());
}

}  // namespace

void write_qexp(std::ostream& out, const QExpansion& f) {
  out << "#qexp weight=" << meta_to_string(f.weight) << " level=" << meta_to_string(f.level)
      << " precision=" << f.precision() << "\n";
  for (long n = 0; n <= f.precision(); ++n) {
    out << n << '\t' << rational_to_string(f.coeff(n)) << "\n";
  }
}

QExpansion read_qexp(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty qexp stream");
  std::istringstream header(line);
  std::string tag, wtok, ltok, ptok;
  header >> tag >> wtok >> ltok >> ptok;
  if (tag != "#qexp") throw std::invalid_argument("missing #qexp header");
  QExpansion f(std::stol(header_value(ptok, "precision")));
  f.weight = meta_from_string(header_value(wtok, "weight"));
  f.level = meta_from_string(header_value(ltok, "level"));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    long n;
    std::string value;
    row >> n >> value;
    f.set_coeff(n, rational_from_string(value));
  }
  return f;
}

void write_jacobi(std::ostream& out, const JacobiExpansion& phi) {
  out << "#jacobi k=" << phi.weight() << " m=" << phi.index()
      << " precision=" << phi.precision() << "\n";
  for (const auto& [key, v] : phi.coeffs()) {
    out << key.first << '\t' << key.second << '\t' << rational_to_string(v) << "\n";
  }
}

JacobiExpansion read_jacobi(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty jacobi stream");
  std::istringstream header(line);
  std::string tag, ktok, mtok, ptok;
  header >> tag >> ktok >> mtok >> ptok;
  if (tag != "#jacobi") throw std::invalid_argument("missing #jacobi header");
  long k = std::stol(header_value(ktok, "k"));
  long m = std::stol(header_value(mtok, "m"));
  long precision = std::stol(header_value(ptok, "precision"));

  struct Row { long n, r; Rational v; };
  std::vector<Row> rows;
  bool has_singular = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    long n, r;
    std::string value;
    row >> n >> r >> value;
    rows.push_back({n, r, rational_from_string(value)});
    if (r * r >= 4 * n * m) has_singular = true;
  }
  JacobiExpansion phi(k, m, precision, /*is_cusp=*/!has_singular);
  for (const Row& row : rows) phi.set_coeff(row.n, row.r, row.v);
  return phi;
}

void write_siegel(std::ostream& out, const SiegelExpansion& f) {
  out << "#siegel k=" << f.weight() << " N=" << f.level()
      << " trace_bound=" << f.trace_bound() << "\n";
  for (const auto& [key, v] : f.coeffs()) {
    out << std::get<0>(key) << '\t' << std::get<1>(key) << '\t' << std::get<2>(key) << '\t'
        << rational_to_string(v) << "\n";
  }
}

SiegelExpansion read_siegel(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty siegel stream");
  std::istringstream header(line);
  std::string tag, ktok, ntok, btok;
  header >> tag >> ktok >> ntok >> btok;
  if (tag != "#siegel") throw std::invalid_argument("missing #siegel header");
  SiegelExpansion f(std::stol(header_value(ktok, "k")), std::stol(header_value(ntok, "N")),
                    std::stol(header_value(btok, "trace_bound")));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    long n, r, m;
    std::string value;
    row >> n >> r >> m >> value;
    f.set_coeff({n, r, m}, rational_from_string(value));
  }
  return f;
}

}  // namespace siegelscan
