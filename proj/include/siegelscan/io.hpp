#pragma once

#include <iosfwd>
#include <string>

#include "siegelscan/siegel.hpp"

namespace siegelscan {

// Coefficient cache: header "#qexp weight=<k> level=<N> precision=<P>",
// then lines "n<TAB>numerator/denominator", exponents ascending.
void write_qexp(std::ostream& out, const QExpansion& f);
QExpansion read_qexp(std::istream& in);

// Header "#jacobi k=<k> m=<m> precision=<P>", lines "n<TAB>r<TAB>value".
void write_jacobi(std::ostream& out, const JacobiExpansion& phi);
JacobiExpansion read_jacobi(std::istream& in);

// Header "#siegel k=<k> N=<N> trace_bound=<B>", lines "n<TAB>r<TAB>m<TAB>value".
void write_siegel(std::ostream& out, const SiegelExpansion& f);
SiegelExpansion read_siegel(std::istream& in);

}  // namespace siegelscan
