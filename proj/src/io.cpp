#include "kstab/io.hpp"

#include <cctype>
#include <set>

#include <json.hpp>

#include "kstab/dsl.hpp"
#include "kstab/errors.hpp"

namespace kstab {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "kstab-1";

[[noreturn]] void fail(const std::string& msg) { throw InvalidInput(msg); }

// ---- JSON field extraction -------------------------------------------------

const ordered_json& field(const ordered_json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing required field '") + key + "'");
    return *it;
}

int int_field(const ordered_json& obj, const char* key) {
    const ordered_json& v = field(obj, key);
    if (!v.is_number_integer())
        fail(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string string_field(const ordered_json& obj, const char* key) {
    const ordered_json& v = field(obj, key);
    if (!v.is_string())
        fail(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Rational rational_entry(const ordered_json& v, const char* what) {
    if (!v.is_string())
        fail(std::string(what) + " must be a rational written as a string, e.g. \"-3/4\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
        fail(std::string(what) + ": " + e.what());
    }
}

// ---- JSON -> document ------------------------------------------------------

MultiVector parse_multivector_json(const ordered_json& mvj, int n) {
    int rank = int_field(mvj, "rank");
    if (rank < 0 || rank > n) fail("multivector rank must lie in [0, dimension]");
    MultiVector out(n, rank);
    const ordered_json& terms = field(mvj, "terms");
    if (!terms.is_array()) fail("'terms' must be an array");
    for (const ordered_json& term : terms) {
        const ordered_json& idxj = field(term, "indices");
        if (!idxj.is_array() || static_cast<int>(idxj.size()) != rank)
            fail("'indices' must list exactly rank-many coordinates");
        IndexTuple idx;
        for (const ordered_json& ij : idxj) {
            if (!ij.is_number_integer()) fail("'indices' entries must be integers");
            int i = ij.get<int>();
            if (i < 1 || i > n) fail("basis index out of range for the given dimension");
            idx.push_back(i);
        }
        const ordered_json& polyj = field(term, "poly");
        if (!polyj.is_array()) fail("'poly' must be an array of monomials");
        Polynomial p(n);
        for (const ordered_json& mono : polyj) {
            Rational c = rational_entry(field(mono, "coeff"), "'coeff'");
            const ordered_json& expsj = field(mono, "exps");
            if (!expsj.is_array() || static_cast<int>(expsj.size()) != n)
                fail("'exps' must list one exponent per coordinate");
            std::vector<std::uint32_t> e;
            for (const ordered_json& ej : expsj) {
                if (!ej.is_number_integer() || ej.get<long long>() < 0)
                    fail("'exps' entries must be non-negative integers");
                e.push_back(ej.get<std::uint32_t>());
            }
            p.add_term(Monomial(std::move(e)), c);
        }
        out.add_term(idx, p);
    }
    return out;
}

LieAlgebra parse_algebra_json(const ordered_json& gj) {
    int r = int_field(gj, "dim");
    if (r < 1) fail("'lie_algebra.dim' must be positive");
    std::vector<std::vector<std::vector<Rational>>> a(
        static_cast<std::size_t>(r),
        std::vector<std::vector<Rational>>(
            static_cast<std::size_t>(r),
            std::vector<Rational>(static_cast<std::size_t>(r), Rational(0))));
    const ordered_json& brackets = field(gj, "brackets");
    if (!brackets.is_array()) fail("'brackets' must be an array");
    for (const ordered_json& b : brackets) {
        int i = int_field(b, "i");
        int j = int_field(b, "j");
        if (i < 1 || j < 1 || i > r || j > r || i >= j)
            fail("bracket entries must satisfy 1 <= i < j <= dim");
        const ordered_json& cj = field(b, "coeffs");
        if (!cj.is_array() || static_cast<int>(cj.size()) != r)
            fail("'coeffs' must list dim-many rationals");
        for (int k = 0; k < r; ++k) {
            Rational c = rational_entry(cj[static_cast<std::size_t>(k)], "'coeffs'");
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]
             [static_cast<std::size_t>(k)] = c;
            a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]
             [static_cast<std::size_t>(k)] = -c;
        }
    }
    return LieAlgebra(std::move(a));
}

Representation parse_representation_json(const ordered_json& rj, const LieAlgebra& g) {
    int d = int_field(rj, "dim");
    if (d < 1) fail("'representation.dim' must be positive");
    const ordered_json& mats = field(rj, "matrices");
    if (!mats.is_array() || static_cast<int>(mats.size()) != g.dim())
        fail("'matrices' must list one matrix per Lie algebra generator");
    std::vector<RationalMatrix> rho;
    for (const ordered_json& mj : mats) {
        if (!mj.is_array() || static_cast<int>(mj.size()) != d * d)
            fail("each representation matrix must list dim*dim row-major entries");
        RationalMatrix m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m.at(i, j) = rational_entry(
                    mj[static_cast<std::size_t>(i * d + j)], "matrix entry");
        rho.push_back(std::move(m));
    }
    return Representation(g, std::move(rho));
}

InputDocument load_json(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("document is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("the JSON document must be an object");
    std::string tag = string_field(root, "format");
    if (tag != kFormatTag)
        fail("unsupported format tag '" + tag + "' (expected '" + kFormatTag + "')");

    InputDocument doc;
    doc.n = int_field(root, "dimension");
    if (doc.n < 1) fail("'dimension' must be positive");

    if (auto it = root.find("fibered"); it != root.end()) {
        int d = int_field(*it, "base");
        int rf = int_field(*it, "fiber");
        if (d < 1 || rf < 1) fail("'fibered.base' and 'fibered.fiber' must be positive");
        if (d + rf != doc.n)
            fail("'fibered.base' + 'fibered.fiber' must equal 'dimension'");
        doc.fibered = FiberedSpace{d, rf};
    }

    if (auto it = root.find("multivectors"); it != root.end()) {
        if (!it->is_array()) fail("'multivectors' must be an array");
        std::set<std::string> seen;
        for (const ordered_json& mvj : *it) {
            std::string name = string_field(mvj, "name");
            if (name.empty()) fail("multivector names must be non-empty");
            if (!seen.insert(name).second)
                fail("duplicate multivector name '" + name + "'");
            doc.multivectors.emplace_back(name, parse_multivector_json(mvj, doc.n));
        }
    }

    if (auto it = root.find("lie_algebra"); it != root.end())
        doc.algebra = parse_algebra_json(*it);

    if (auto it = root.find("representation"); it != root.end()) {
        if (!doc.algebra)
            fail("'representation' requires a 'lie_algebra' block");
        doc.representation = parse_representation_json(*it, *doc.algebra);
    }
    return doc;
}

// ---- document -> JSON ------------------------------------------------------

ordered_json multivector_json(const MultiVector& mv) {
    ordered_json mvj;
    mvj["rank"] = mv.degree();
    ordered_json terms = ordered_json::array();
    for (const auto& [idx, poly] : mv.terms()) {
        ordered_json tj;
        tj["indices"] = idx;
        ordered_json pj = ordered_json::array();
        for (const auto& [mono, coeff] : poly.terms()) {
            ordered_json mj;
            mj["coeff"] = coeff.str();
            mj["exps"] = mono.exps;
            pj.push_back(std::move(mj));
        }
        tj["poly"] = std::move(pj);
        terms.push_back(std::move(tj));
    }
    mvj["terms"] = std::move(terms);
    return mvj;
}

} // namespace

const MultiVector* InputDocument::find(const std::string& name) const {
    for (const auto& [k, mv] : multivectors)
        if (k == name) return &mv;
    return nullptr;
}

InputDocument load_document(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') return load_json(text);

    NamedMultiVectors parsed = parse_document_dsl(text);
    InputDocument doc;
    doc.n = parsed.n;
    doc.multivectors = std::move(parsed.entries);
    return doc;
}

std::string print_document(const InputDocument& doc) {
    if (doc.n < 1) fail("cannot serialize a document without a dimension");
    ordered_json root;
    root["format"] = kFormatTag;
    root["dimension"] = doc.n;
    if (doc.fibered) {
        ordered_json fj;
        fj["base"] = doc.fibered->d;
        fj["fiber"] = doc.fibered->rf;
        root["fibered"] = std::move(fj);
    }
    ordered_json mvs = ordered_json::array();
    for (const auto& [name, mv] : doc.multivectors) {
        if (mv.dim() != doc.n)
            fail("multivector '" + name + "' does not live on the document's R^n");
        ordered_json mvj;
        mvj["name"] = name;
        ordered_json body = multivector_json(mv);
        mvj["rank"] = body["rank"];
        mvj["terms"] = body["terms"];
        mvs.push_back(std::move(mvj));
    }
    root["multivectors"] = std::move(mvs);
    if (doc.algebra) {
        const LieAlgebra& g = *doc.algebra;
        ordered_json gj;
        gj["dim"] = g.dim();
        ordered_json brackets = ordered_json::array();
        for (int i = 0; i < g.dim(); ++i)
            for (int j = i + 1; j < g.dim(); ++j) {
                ordered_json bj;
                bj["i"] = i + 1;
                bj["j"] = j + 1;
                ordered_json coeffs = ordered_json::array();
                for (int k = 0; k < g.dim(); ++k) coeffs.push_back(g.a(i, j, k).str());
                bj["coeffs"] = std::move(coeffs);
                brackets.push_back(std::move(bj));
            }
        gj["brackets"] = std::move(brackets);
        root["lie_algebra"] = std::move(gj);
    }
    if (doc.representation) {
        const Representation& rep = *doc.representation;
        ordered_json rj;
        rj["dim"] = rep.module_dim();
        ordered_json mats = ordered_json::array();
        for (int p = 0; p < rep.algebra().dim(); ++p) {
            const RationalMatrix& m = rep.rho(p);
            ordered_json mj = ordered_json::array();
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) mj.push_back(m.at(i, j).str());
            mats.push_back(std::move(mj));
        }
        rj["matrices"] = std::move(mats);
        root["representation"] = std::move(rj);
    }
    return root.dump(2) + "\n";
}

} // namespace kstab
