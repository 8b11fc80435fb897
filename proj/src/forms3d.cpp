#include "kstab/forms3d.hpp"

#include <sstream>

namespace kstab {

std::string OneForm::str(const std::vector<std::string>& vars) const {
    static const char* d[3] = {"dx", "dy", "dz"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        if (comp[i].is_zero()) continue;
        std::string cs = comp[i].str(vars);
        bool wrap = cs.find(" + ") != std::string::npos ||
                    cs.find(" - ") != std::string::npos;
        if (!first) os << " + ";
        first = false;
        if (cs == "1")
            os << d[i];
        else if (cs == "-1")
            os << "-" << d[i];
        else
            os << (wrap ? "(" + cs + ")" : cs) << "*" << d[i];
    }
    if (first) return "0";
    return os.str();
}

OneForm contract_with_volume(const MultiVector& A) {
    if (A.dim() != 3)
        throw DimensionMismatch("volume contraction is defined on R^3");
    if (A.degree() != 2)
        throw InvalidInput("volume contraction needs a bivector");
    OneForm alpha = OneForm::zero();
    // e[1,2] -> dz, e[2,3] -> dx, e[1,3] = -(dz ^ dx direction) -> -dy.
    alpha.comp[0] = A.coeff(IndexTuple{2, 3});
    alpha.comp[1] = -A.coeff(IndexTuple{1, 3});
    alpha.comp[2] = A.coeff(IndexTuple{1, 2});
    return alpha;
}

Polynomial integrability_check(const OneForm& alpha) {
    const Polynomial& a = alpha.comp[0];
    const Polynomial& b = alpha.comp[1];
    const Polynomial& c = alpha.comp[2];
    for (const Polynomial* p : {&a, &b, &c})
        if (p->dim() != 3)
            throw DimensionMismatch("integrability check is defined on R^3");
    return a * (c.derivative(2) - b.derivative(3)) +
           b * (a.derivative(3) - c.derivative(1)) +
           c * (b.derivative(1) - a.derivative(2));
}

} // namespace kstab
