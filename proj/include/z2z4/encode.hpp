// Systematic encoding: the standard information set J = J1 u J2 u J3, the
// eta correction for gamma > kappa, and the encoding map
// f(a) = Phi(sigma(Phi^-1(a)) G). All coordinates are in the standard-form
// frame of the code.

#ifndef Z2Z4_ENCODE_HPP
#define Z2Z4_ENCODE_HPP

#include "z2z4/code.hpp"
#include "z2z4/core.hpp"

namespace z2z4 {

/// J1 = {1..kappa},
/// J2 = { phi1(alpha+beta+kappa-gamma-delta+i) : 1 <= i <= gamma-kappa },
/// J3 = the Gray pairs of the last delta quaternary coordinates.
/// |J| = gamma + 2*delta.
CoordSet standard_info_set(const CodeType& ct);

/// Split of an information vector a of length gamma + 2*delta into
/// b (kappa bits), c (gamma-kappa bits) and d (2*delta bits), with
/// Phi^-1(a) = (b, c, Phi^-1(d)) in Z2^gamma x Z4^delta.
struct InfoVector {
    BinaryVector a;
    BinaryVector b, c, d;
    MixedVector mixed;  // (b, c | Phi^-1(d))
    InfoVector(const BinaryVector& a, const CodeType& ct);
};

/// Product of a (gamma + delta)-coefficient mixed vector with the
/// standard-form rows: bits weight the order-two rows mod 2, quats weight
/// the order-four rows mod 4.
MixedVector info_times_generator(const MixedVector& coeffs, const StandardForm& sf);

/// eta_i = 0 when bit j_i of Phi(Phi^-1(a) G) equals c_i, else 1
/// (j_i the i-th element of J2). Length gamma - kappa.
BinaryVector eta(const BinaryVector& a, const StandardForm& sf);

/// Systematic encoding f(a) = Phi(sigma(Phi^-1(a)) G) with
/// sigma(b, c, q) = (b, c + eta, q); restrict_to(f(a), J) = a. Costs one
/// generator-matrix product when eta = 0, two otherwise.
BinaryVector encode(const BinaryVector& a, const Z2Z4Code& C);

}  // namespace z2z4

#endif
