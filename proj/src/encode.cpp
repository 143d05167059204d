#include "z2z4/encode.hpp"

#include <algorithm>
#include <stdexcept>

namespace z2z4 {

CoordSet standard_info_set(const CodeType& ct) {
    validate_type(ct);
    CoordSet J;
    for (std::size_t i = 1; i <= ct.kappa; ++i) J.push_back(static_cast<int>(i));
    for (std::size_t i = 1; i <= ct.gamma - ct.kappa; ++i)
        J.push_back(phi1(ct.alpha,
                         static_cast<int>(ct.alpha + ct.beta + ct.kappa - ct.gamma - ct.delta + i)));
    for (std::size_t i = ct.alpha + ct.beta - ct.delta + 1; i <= ct.alpha + ct.beta; ++i) {
        J.push_back(phi1(ct.alpha, static_cast<int>(i)));
        J.push_back(phi2(ct.alpha, static_cast<int>(i)));
    }
    std::sort(J.begin(), J.end());
    return J;
}

InfoVector::InfoVector(const BinaryVector& a_, const CodeType& ct) : a(a_) {
    if (a.size() != ct.gamma + 2 * ct.delta)
        throw std::invalid_argument("information vector length must be gamma + 2*delta");
    b.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ct.kappa));
    c.assign(a.begin() + static_cast<std::ptrdiff_t>(ct.kappa),
             a.begin() + static_cast<std::ptrdiff_t>(ct.gamma));
    d.assign(a.begin() + static_cast<std::ptrdiff_t>(ct.gamma), a.end());
    MixedVector qpart = gray_inverse(d, 0);
    mixed = MixedVector(ct.gamma, ct.delta);
    std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ct.gamma), mixed.bits.begin());
    mixed.quats = qpart.quats;
}

MixedVector info_times_generator(const MixedVector& coeffs, const StandardForm& sf) {
    const auto& ct = sf.type;
    if (coeffs.alpha != ct.gamma || coeffs.beta != ct.delta)
        throw std::invalid_argument("coefficient shape must be Z2^gamma x Z4^delta");
    MixedVector x(ct.alpha, ct.beta);
    for (std::size_t i = 0; i < ct.gamma; ++i)
        if (coeffs.bits[i]) x = x + sf.rows[i];
    for (std::size_t j = 0; j < ct.delta; ++j)
        if (coeffs.quats[j]) x = x + scaled(sf.rows[ct.gamma + j], coeffs.quats[j]);
    return x;
}

BinaryVector eta(const BinaryVector& a, const StandardForm& sf) {
    const auto& ct = sf.type;
    InfoVector info(a, ct);
    BinaryVector image = gray(info_times_generator(info.mixed, sf));
    BinaryVector e(ct.gamma - ct.kappa);
    for (std::size_t i = 1; i <= ct.gamma - ct.kappa; ++i) {
        int ji = phi1(ct.alpha,
                      static_cast<int>(ct.alpha + ct.beta + ct.kappa - ct.gamma - ct.delta + i));
        e[i - 1] = image[static_cast<std::size_t>(ji) - 1] != info.c[i - 1];
    }
    return e;
}

BinaryVector encode(const BinaryVector& a, const Z2Z4Code& C) {
    const StandardForm& sf = C.standard();
    const auto& ct = sf.type;
    InfoVector info(a, ct);
    MixedVector x = info_times_generator(info.mixed, sf);
    if (ct.gamma > ct.kappa) {
        BinaryVector image = gray(x);
        MixedVector corrected = info.mixed;
        bool redo = false;
        for (std::size_t i = 1; i <= ct.gamma - ct.kappa; ++i) {
            int ji = phi1(ct.alpha,
                          static_cast<int>(ct.alpha + ct.beta + ct.kappa - ct.gamma - ct.delta + i));
            if (image[static_cast<std::size_t>(ji) - 1] != info.c[i - 1]) {
                corrected.bits[ct.kappa + i - 1] ^= 1;
                redo = true;
            }
        }
        if (redo) x = info_times_generator(corrected, sf);
    }
    return gray(x);
}

}  // namespace z2z4
