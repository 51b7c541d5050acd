#include "hankel/gft/coeffs.hpp"

namespace hankel::gft {

template ClassCoeffs<Rational> schwarz_to_coeffs(const SchwarzCoeffs<Rational>&);
template ClassCoeffs<double> schwarz_to_coeffs(const SchwarzCoeffs<double>&);
template CaratheodoryCoeffs<Rational> caratheodory_from_schwarz(const SchwarzCoeffs<Rational>&);
template CaratheodoryCoeffs<double> caratheodory_from_schwarz(const SchwarzCoeffs<double>&);
template CaratheodoryCoeffs<Rational> lz_parametrize(const Rational&, const ParamTriple<Rational>&);
template CaratheodoryCoeffs<double> lz_parametrize(const double&, const ParamTriple<double>&);
template SchwarzCoeffs<Rational> schwarz_parametrize(const Rational&, const ParamTriple<Rational>&);
template SchwarzCoeffs<double> schwarz_parametrize(const double&, const ParamTriple<double>&);
template ComplexQ hankel2(const ClassCoeffs<Rational>&);
template ComplexD hankel2(const ClassCoeffs<double>&);
template ComplexQ hankel3(const ClassCoeffs<Rational>&);
template ComplexD hankel3(const ClassCoeffs<double>&);
template ComplexQ h3_schwarz_poly(const SchwarzCoeffs<Rational>&);
template ComplexD h3_schwarz_poly(const SchwarzCoeffs<double>&);

}  // namespace hankel::gft
