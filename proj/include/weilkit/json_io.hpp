#pragma once

#include <json.hpp>
#include <string>

#include "weilkit/groupoid.hpp"
#include "weilkit/simplicial.hpp"
#include "weilkit/weil.hpp"

namespace weilkit {

// Input problems (missing files, malformed JSON, schema violations) carry a
// human-readable location and map to the CLI's exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& s) : std::runtime_error(s) {}
};

using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);
std::string json_type_of(const Json& j);

LieAlgebraData parse_lie_algebra(const Json& j);
GDAlgebra parse_gd_algebra(const Json& j);
InvariantPolynomial parse_invariant_polynomial(const Json& j, const LieAlgebraData& lie);
FiniteGroup parse_group(const Json& j);
FiniteGroupoid parse_groupoid(const Json& j);
BundleCocycle parse_bundle(const Json& j, const FiniteGroupoid& base, const FiniteGroup& group);
// Bundle files carry their structure group inline; the base groupoid is
// supplied separately.
struct LoadedBundle {
  std::unique_ptr<FiniteGroup> group;
  std::vector<int> psi;
  BundleCocycle bind(const FiniteGroupoid& base) const;
};
LoadedBundle parse_bundle_file(const Json& j, const FiniteGroupoid& base);

// Term lists over a named generator table.
GradedElement parse_element(const Json& j, const TablePtr& table);
Json element_to_json(const GradedElement& x);
GVector parse_gvector(const Json& j, const TablePtr& table);

Json cocycle_to_json(const BigradedElement& x);
BigradedElement parse_cocycle(const Json& j, const SimplicialGDA& host);

std::string cocycle_to_latex(const BigradedElement& x);
std::string element_to_latex(const GradedElement& x);

Json gd_algebra_to_json(const GDAlgebra& a);
Json lie_to_json(const LieAlgebraData& lie);

}  // namespace weilkit
