#pragma once

#include <array>

#include "kstab/multivector.hpp"

namespace kstab {

// A polynomial 1-form a dx + b dy + c dz on R^3.
struct OneForm {
    std::array<Polynomial, 3> comp; // coefficients of dx, dy, dz

    static OneForm zero() {
        return OneForm{{Polynomial(3), Polynomial(3), Polynomial(3)}};
    }
    bool operator==(const OneForm& o) const { return comp == o.comp; }
    std::string str(const std::vector<std::string>& vars) const;
};

// Contraction of a bivector on R^3 into the standard volume form
// omega = dx ^ dy ^ dz, with the sign convention anchored on
//   i_{dy ^ dz} omega = dx,  i_{dz ^ dx} omega = dy,  i_{dx ^ dy} omega = dz.
// So P e[1,2] + Q e[2,3] + R e[3,1]  |->  Q dx + R dy + P dz.
OneForm contract_with_volume(const MultiVector& A);

// alpha ^ d(alpha) as the polynomial coefficient of dx ^ dy ^ dz; zero iff
// the 1-form is integrable. For alpha = a dx + b dy + c dz this equals
//   a (c_y - b_z) + b (a_z - c_x) + c (b_x - a_y).
Polynomial integrability_check(const OneForm& alpha);

} // namespace kstab
