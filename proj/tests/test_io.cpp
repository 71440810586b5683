#include <doctest.h>

#include <sstream>

#include "siegelscan/eta.hpp"
#include "siegelscan/io.hpp"

using namespace siegelscan;

TEST_CASE("qexp round trip") {
  QExpansion f = newform_catalog("12.1").expansion(10);
  std::stringstream buf;
  write_qexp(buf, f);
  std::string text = buf.str();
  CHECK(text.rfind("#qexp weight=12 level=1 precision=10", 0) == 0);
  QExpansion g = read_qexp(buf);
  CHECK(g == f);
  CHECK(g.weight == 12);
  CHECK(g.level == 1);
}

TEST_CASE("qexp round trip without metadata") {
  QExpansion f(3);
  f.set_coeff(0, Rational(1, 2));
  f.set_coeff(2, Rational(-7, 3));
  std::stringstream buf;
  write_qexp(buf, f);
  CHECK(buf.str().rfind("#qexp weight=unset level=unset precision=3", 0) == 0);
  QExpansion g = read_qexp(buf);
  CHECK(g == f);
  CHECK_FALSE(g.weight.has_value());
}

TEST_CASE("qexp rejects malformed input") {
  std::stringstream empty;
  CHECK_THROWS_AS(read_qexp(empty), std::invalid_argument);
  std::stringstream wrong("#jacobi k=4 m=1 precision=2\n");
  CHECK_THROWS_AS(read_qexp(wrong), std::invalid_argument);
}

TEST_CASE("jacobi round trip, cusp and eisenstein") {
  JacobiExpansion phi = jacobi_cusp_phi(10, 6);
  std::stringstream buf;
  write_jacobi(buf, phi);
  CHECK(buf.str().rfind("#jacobi k=10 m=1 precision=6", 0) == 0);
  JacobiExpansion back = read_jacobi(buf);
  CHECK(back.is_cusp());
  CHECK(back.coeffs() == phi.coeffs());

  JacobiExpansion e41 = jacobi_eisenstein(4, 6);
  std::stringstream buf2;
  write_jacobi(buf2, e41);
  JacobiExpansion back2 = read_jacobi(buf2);
  CHECK_FALSE(back2.is_cusp());
  CHECK(back2.coeffs() == e41.coeffs());
  CHECK(back2.coeff(0, 0) == 1);
}

TEST_CASE("siegel round trip") {
  JacobiExpansion phi = jacobi_cusp_phi(12, 25);
  SiegelExpansion f = maass_lift(phi, 8);
  std::stringstream buf;
  write_siegel(buf, f);
  CHECK(buf.str().rfind("#siegel k=12 N=1 trace_bound=8", 0) == 0);
  SiegelExpansion back = read_siegel(buf);
  CHECK(back.weight() == 12);
  CHECK(back.level() == 1);
  CHECK(back.trace_bound() == 8);
  CHECK(back.coeffs() == f.coeffs());
}

TEST_CASE("rational serialization is always num/den") {
  CHECK(rational_to_string(Rational(3)) == "3/1");
  CHECK(rational_to_string(Rational(-7, 2)) == "-7/2");
  CHECK(rational_from_string("3/1") == Rational(3));
  CHECK(rational_from_string("-7/2") == Rational(-7, 2));
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}
