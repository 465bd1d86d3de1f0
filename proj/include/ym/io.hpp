#pragma once

// JSON and text formats: structure-constant algebras, morphism specs,
// matrices, element expressions, and coefficient-map rendering.

#include "ym/kac_moody.hpp"
#include "ym/morphisms.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace ym::io {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
	enum class Kind { MalformedJson, UnknownTarget, ArityMismatch, BadElement, BadMatrix, BadAlgebra, Usage };

	InputError(Kind kind, const std::string &message);
	Kind kind() const { return kind_; }

private:
	Kind kind_;
};

Scalar parse_scalar(const Json &j);

// {"basis": [names], "brackets": [{"i": name|index, "j": name|index,
//  "coords": {name: scalar}}]}
AlgebraPtr parse_algebra(const Json &j);

// "sl(2)", "sl(m)", "slm", "heisenberg", "witt", "virasoro", or
// {"custom": algebra-JSON}.
using AnyTarget = std::variant<AlgebraTarget, WittTarget>;
AnyTarget parse_target(const Json &j);
std::string target_name(const Json &j);

// "E12+E23", "2*e - h", "(1+i)*e", "e_-2 + c". Terms are [scalar '*'] name.
TargetElement parse_element(const AlgebraPtr &algebra, const std::string &text);
WittElement parse_witt_element(const std::string &text);

// Coefficient map {name: scalar} or an expression string.
TargetElement parse_element(const AlgebraPtr &algebra, const Json &j);
WittElement parse_witt_element(const Json &j);

using AnyMorphism = std::variant<GeneratorMorphism<AlgebraTarget>, GeneratorMorphism<WittTarget>>;

struct MorphismSpec {
	int n = 0;
	std::string target;
	AnyMorphism morphism;
};

// {"n": int, "target": ..., "images": [...]}
MorphismSpec parse_morphism_spec(const Json &j);

// JSON array of arrays of scalar strings (integers also accepted).
MatrixData parse_matrix(const Json &j);

// Parses text, mapping parse failures to InputError::MalformedJson.
Json parse_json_text(const std::string &text);

Json to_json(const Scalar &s);
Json to_json(const TargetElement &x);
Json to_json(const WittElement &x);
Json to_json(const FreeLieElement &x);
Json to_json(const DenseMatrix &m);

} // namespace ym::io
