#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kstab/fibered.hpp"
#include "kstab/liealg.hpp"
#include "kstab/multivector.hpp"

namespace kstab {

// =========================================================================
// Structured input documents. Two on-disk forms denote the same data:
//
//   - the expression language (see dsl.hpp): one "name = expr;" per line;
//   - a JSON document, format tag "kstab-1", with explicit dimension,
//     optional fibered split, multivectors as exact term lists, and
//     optional Lie-algebra / representation blocks:
//
//       {
//         "format": "kstab-1",
//         "dimension": 4,
//         "fibered": {"base": 2, "fiber": 2},
//         "multivectors": [
//           {"name": "pi", "rank": 2, "terms": [
//             {"indices": [3,4], "poly": [{"coeff": "1", "exps": [0,0,0,1]}]}
//           ]}
//         ],
//         "lie_algebra": {"dim": 2,
//                         "brackets": [{"i": 1, "j": 2, "coeffs": ["0","1"]}]},
//         "representation": {"dim": 2,
//                            "matrices": [["0","0","0","-1"],
//                                         ["0","1","0","0"]]}
//       }
//
// Indices are 1-based; "brackets" lists [e_i, e_j] coordinates for i < j
// (omitted pairs are zero); "matrices" holds one row-major dim x dim matrix
// per generator. Coefficients are exact rationals written as strings;
// decimal literals are rejected. print_document emits a canonical form
// (fixed key order, 2-space indent, every i < j bracket listed), and
// load_document(print_document(doc)) reproduces the document exactly.
// =========================================================================

struct InputDocument {
    int n = 0;
    std::optional<FiberedSpace> fibered;
    std::vector<std::pair<std::string, MultiVector>> multivectors;
    std::optional<LieAlgebra> algebra;
    std::optional<Representation> representation;

    // Entry by name; nullptr when absent.
    const MultiVector* find(const std::string& name) const;
};

// Parses either on-disk form: JSON when the first non-space character is
// '{', the expression language otherwise.
InputDocument load_document(const std::string& text);

// Canonical JSON serialization (ends with a newline).
std::string print_document(const InputDocument& doc);

} // namespace kstab
