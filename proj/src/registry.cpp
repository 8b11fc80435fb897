#include "kstab/registry.hpp"

#include <sstream>

#include "kstab/analysis3d.hpp"
#include "kstab/cohomology.hpp"
#include "kstab/errors.hpp"

namespace kstab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw InvalidInput(msg); }

struct Spec {
    std::string name;
    std::vector<std::string> args;
};

Spec split_spec(const std::string& s) {
    Spec out;
    auto colon = s.find(':');
    out.name = s.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = s.substr(colon + 1);
        std::stringstream ss(rest);
        std::string piece;
        while (std::getline(ss, piece, ',')) out.args.push_back(piece);
        if (rest.empty() || rest.back() == ',') out.args.push_back("");
    }
    return out;
}

void want_args(const Spec& s, std::size_t count, const char* what) {
    if (s.args.size() != count)
        fail("example '" + s.name + "' takes " + what +
             " (write '" + s.name + ":" + what + "')");
}

int int_arg(const Spec& s, std::size_t i, int lo, const char* what) {
    const std::string& a = s.args[i];
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(a, &pos);
    } catch (const std::exception&) {
        fail("argument '" + a + "' of '" + s.name + "' is not an integer");
    }
    if (pos != a.size())
        fail("argument '" + a + "' of '" + s.name + "' is not an integer");
    if (v < lo) fail(std::string("'") + s.name + "' needs " + what);
    return v;
}

Rational rational_arg(const Spec& s, std::size_t i) {
    try {
        return Rational::parse(s.args[i]);
    } catch (const Error& e) {
        fail("argument '" + s.args[i] + "' of '" + s.name + "': " + e.what());
    }
}

MultiVector monomial_bivector(int n, int i, int j,
                              const std::vector<std::uint32_t>& exps) {
    Polynomial p(n);
    p.add_term(Monomial(exps), Rational(1));
    MultiVector mv(n, 2);
    mv.add_term({i, j}, p);
    return mv;
}

RegistryExample from_representation(std::string name, std::string descr,
                                    Representation rep) {
    RegistryExample ex;
    ex.name = std::move(name);
    ex.description = std::move(descr);
    MultiVector pi = action_algebroid(rep);
    ex.doc.n = pi.dim();
    ex.doc.fibered = FiberedSpace{rep.module_dim(), rep.algebra().dim()};
    ex.doc.multivectors.emplace_back("pi", std::move(pi));
    ex.doc.algebra = rep.algebra();
    ex.doc.representation = std::move(rep);
    ex.k = 1;
    return ex;
}

} // namespace

RegistryExample registry_example(const std::string& spec) {
    Spec s = split_spec(spec);
    RegistryExample ex;
    ex.name = spec;

    if (s.name == "linear2d") {
        want_args(s, 0, "no arguments");
        ex.description = "x d/dx ^ d/dy on R^2, the stable linear model";
        ex.doc.n = 2;
        ex.doc.multivectors.emplace_back("pi", monomial_bivector(2, 1, 2, {1, 0}));
        ex.k = 1;
        return ex;
    }
    if (s.name == "quadratic-xy") {
        want_args(s, 0, "no arguments");
        ex.description = "x*y d/dx ^ d/dy on R^2, degenerate at order 2";
        ex.doc.n = 2;
        ex.doc.multivectors.emplace_back("pi", monomial_bivector(2, 1, 2, {1, 1}));
        ex.k = 2;
        return ex;
    }
    if (s.name == "quadratic-diagonal") {
        want_args(s, 3, "three rational coefficients a,b,c");
        std::vector<std::vector<Rational>> a(3, std::vector<Rational>(3, Rational(0)));
        const std::pair<int, int> slots[] = {{0, 1}, {0, 2}, {1, 2}};
        for (std::size_t t = 0; t < 3; ++t) {
            Rational c = rational_arg(s, t);
            a[static_cast<std::size_t>(slots[t].first)]
             [static_cast<std::size_t>(slots[t].second)] = c;
            a[static_cast<std::size_t>(slots[t].second)]
             [static_cast<std::size_t>(slots[t].first)] = -c;
        }
        ex.description = "quadratic bivector a*x1x2 e[1,2] + b*x1x3 e[1,3] "
                         "+ c*x2x3 e[2,3] on R^3";
        ex.doc.n = 3;
        ex.doc.multivectors.emplace_back("pi", quadratic_diagonal(a).mv);
        ex.k = 2;
        return ex;
    }
    if (s.name == "cyclic3d") {
        want_args(s, 1, "one integer order k >= 2");
        int k = int_arg(s, 0, 2, "an integer order k >= 2");
        ex.description = "cyclic degree-" + std::to_string(k) + " bivector on R^3";
        ex.doc.n = 3;
        ex.doc.multivectors.emplace_back("pi", example_pi_k(k).mv);
        ex.k = k;
        return ex;
    }
    if (s.name == "aff1-poisson") {
        want_args(s, 0, "no arguments");
        ex.description = "Lie-Poisson structure of aff(1) on R^2";
        ex.doc.n = 2;
        ex.doc.multivectors.emplace_back("pi", lie_poisson(aff1_algebra()));
        ex.doc.algebra = aff1_algebra();
        ex.k = 1;
        return ex;
    }
    if (s.name == "aff1") {
        want_args(s, 0, "no arguments");
        return from_representation(spec,
            "action algebroid of the coadjoint aff(1) action on R^2",
            aff1_coadjoint());
    }
    if (s.name == "sl2-irrep2") {
        want_args(s, 0, "no arguments");
        return from_representation(spec,
            "action algebroid of the 2-dimensional irreducible sl(2) module",
            sl2_irrep2());
    }
    if (s.name == "scaling-r1") {
        want_args(s, 0, "no arguments");
        return from_representation(spec,
            "action algebroid of R acting on R by scaling",
            scaling_rep());
    }
    if (s.name == "monnier" || s.name == "monnier-recentered") {
        want_args(s, 1, "one integer n >= 1");
        int n = int_arg(s, 0, 1, "an integer n >= 1");
        int d = n + 1;
        MultiVector pi = monnier_algebroid(n);
        ex.doc.n = pi.dim();
        ex.doc.fibered = FiberedSpace{d, d};
        if (s.name == "monnier") {
            ex.description = "fiberwise-linear bivector on R^" +
                             std::to_string(2 * d) + " singular on the unit sphere";
            ex.doc.multivectors.emplace_back("pi", std::move(pi));
            // Inhomogeneous (degrees 1 and 3 in total grading): no natural k.
        } else {
            std::vector<Rational> p(static_cast<std::size_t>(2 * d), Rational(0));
            p[0] = Rational(1);
            ex.description = "degree-1 part at the sphere point (1,0,...,0) of the "
                             "fiberwise-linear sphere bivector on R^" +
                             std::to_string(2 * d);
            ex.doc.multivectors.emplace_back(
                "pi", homogeneous_part(recenter(pi, p), 1).mv);
            ex.k = 1;
        }
        return ex;
    }
    fail("unknown example '" + s.name + "' (run the 'examples' command for the list)");
}

std::vector<RegistryEntry> registry_list() {
    return {
        {"linear2d", "x d/dx ^ d/dy on R^2 (k = 1, stable)"},
        {"quadratic-xy", "x*y d/dx ^ d/dy on R^2 (k = 2, degenerate)"},
        {"quadratic-diagonal:<a>,<b>,<c>",
         "a*x1x2 e[1,2] + b*x1x3 e[1,3] + c*x2x3 e[2,3] on R^3 (k = 2)"},
        {"cyclic3d:<k>", "cyclic degree-k bivector on R^3 (zero at k = 2)"},
        {"aff1-poisson", "Lie-Poisson structure of aff(1) on R^2 (k = 1)"},
        {"aff1", "action algebroid of coadjoint aff(1) on R^2 (fibered 2+2)"},
        {"sl2-irrep2", "action algebroid of the irreducible sl(2) plane (fibered 2+3)"},
        {"scaling-r1", "action algebroid of R scaling R (fibered 1+1)"},
        {"monnier:<n>", "fiberwise-linear sphere bivector on R^{2n+2}"},
        {"monnier-recentered:<n>",
         "its degree-1 part at (1,0,...,0) (k = 1, fibered (n+1)+(n+1))"},
    };
}

} // namespace kstab
