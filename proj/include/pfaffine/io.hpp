#ifndef PFAFFINE_IO_HPP
#define PFAFFINE_IO_HPP

#include <string>

#include <json.hpp>

#include "pfaffine/cartan.hpp"
#include "pfaffine/classical.hpp"
#include "pfaffine/forms.hpp"

namespace pfaffine {

// Canonical text forms. Terms are emitted in the term-map order (graded,
// then lexicographic by the HC generator order), coefficients as reduced
// fractions in K. Factors are joined with " * ".
std::string to_string(const Scalar& s);
std::string to_string(const Gen& g);
std::string to_string(const UPoly& p);
std::string to_string(const Form& f, int n);
std::string to_string(const CartanPoly& p);
std::string to_string(const ClassicalPoly& p);
std::string to_string(const ClassicalForm& f, int n);

// JSON schema:
//   { "n": n, "terms": [ {"coeff": "p/q", "K_degree": k,
//                         "word": [["F",i,j,r] | ["Tau"]],
//                         "ext": [indices ascending]   // forms only
//                        } ] }
// A UPoly term with a coefficient of K-degree d contributes one entry per
// nonzero K coefficient.
nlohmann::json to_json(const UPoly& p, int n);
nlohmann::json to_json(const Form& f, int n);
UPoly upoly_from_json(const nlohmann::json& j);
Form form_from_json(const nlohmann::json& j);

// Output-only JSON for the homomorphism images (documented in the README).
nlohmann::json to_json(const CartanPoly& p, int n);
nlohmann::json to_json(const ClassicalForm& f, int n);

} // namespace pfaffine

#endif
