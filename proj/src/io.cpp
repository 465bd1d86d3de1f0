#include "ym/io.hpp"

#include <cctype>
#include <regex>

namespace ym::io {

InputError::InputError(Kind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}

Scalar parse_scalar(const Json &j)
{
	try {
		if (j.is_string())
			return Scalar::parse(j.get<std::string>());
		if (j.is_number_integer())
			return Scalar(j.get<long>());
	} catch (const std::invalid_argument &e) {
		throw InputError(InputError::Kind::BadElement, e.what());
	}
	throw InputError(InputError::Kind::BadElement, "expected a scalar string, got " + j.dump());
}

namespace {

std::string strip(const std::string &s)
{
	std::string out;
	for (char c : s)
		if (!std::isspace(static_cast<unsigned char>(c)))
			out.push_back(c);
	return out;
}

struct Term {
	Scalar coefficient;
	std::string name;
};

// Splits at top-level '+'/'-' that start a new term. A sign right after '_'
// belongs to an index ("e_-2"), one right after '*' to a name.
std::vector<Term> parse_terms(const std::string &raw)
{
	const std::string s = strip(raw);
	if (s.empty())
		throw InputError(InputError::Kind::BadElement, "empty element expression");
	std::vector<std::string> pieces;
	int depth = 0;
	std::size_t start = 0;
	for (std::size_t k = 0; k < s.size(); ++k) {
		char c = s[k];
		if (c == '(')
			++depth;
		else if (c == ')')
			--depth;
		else if ((c == '+' || c == '-') && depth == 0 && k > start && s[k - 1] != '_' && s[k - 1] != '*') {
			pieces.push_back(s.substr(start, k - start));
			start = k;
		}
	}
	pieces.push_back(s.substr(start));

	std::vector<Term> out;
	for (std::string piece : pieces) {
		Scalar sign = 1;
		if (piece[0] == '+' || piece[0] == '-') {
			if (piece[0] == '-')
				sign = -1;
			piece.erase(0, 1);
		}
		std::string coeff, name = piece;
		if (auto star = piece.rfind('*'); star != std::string::npos) {
			coeff = piece.substr(0, star);
			name = piece.substr(star + 1);
			if (coeff.size() >= 2 && coeff.front() == '(' && coeff.back() == ')')
				coeff = coeff.substr(1, coeff.size() - 2);
		}
		if (name.empty())
			throw InputError(InputError::Kind::BadElement, "missing basis name in '" + raw + "'");
		Scalar c = 1;
		if (!coeff.empty()) {
			try {
				c = Scalar::parse(coeff);
			} catch (const std::invalid_argument &e) {
				throw InputError(InputError::Kind::BadElement, e.what());
			}
		}
		out.push_back({sign * c, name});
	}
	return out;
}

std::size_t basis_index(const AlgebraPtr &algebra, const std::string &name)
{
	auto idx = algebra->index_of(name);
	if (!idx)
		throw InputError(InputError::Kind::BadElement, "unknown basis element '" + name + "'");
	return *idx;
}

std::size_t bracket_slot(const Json &j, const std::vector<std::string> &labels)
{
	if (j.is_number_unsigned() || j.is_number_integer()) {
		long k = j.get<long>();
		if (k < 0 || static_cast<std::size_t>(k) >= labels.size())
			throw InputError(InputError::Kind::BadAlgebra, "bracket index out of range: " + j.dump());
		return static_cast<std::size_t>(k);
	}
	if (j.is_string()) {
		for (std::size_t k = 0; k < labels.size(); ++k)
			if (labels[k] == j.get<std::string>())
				return k;
		throw InputError(InputError::Kind::BadAlgebra, "unknown basis label in bracket: " + j.dump());
	}
	throw InputError(InputError::Kind::BadAlgebra, "bracket slot must be a label or an index");
}

long witt_index(const std::string &name)
{
	static const std::regex pattern(R"(e_([+-]?[0-9]+))");
	std::smatch m;
	if (!std::regex_match(name, m, pattern))
		throw InputError(InputError::Kind::BadElement, "unknown Witt basis element '" + name + "'");
	return std::stol(m[1]);
}

} // namespace

AlgebraPtr parse_algebra(const Json &j)
{
	if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
		throw InputError(InputError::Kind::BadAlgebra, "algebra JSON needs a \"basis\" array");
	std::vector<std::string> labels;
	for (const auto &b : j["basis"]) {
		if (!b.is_string())
			throw InputError(InputError::Kind::BadAlgebra, "basis labels must be strings");
		labels.push_back(b.get<std::string>());
	}
	std::vector<StructureConstantAlgebra::Bracket> brackets;
	if (j.contains("brackets")) {
		if (!j["brackets"].is_array())
			throw InputError(InputError::Kind::BadAlgebra, "\"brackets\" must be an array");
		for (const auto &b : j["brackets"]) {
			if (!b.is_object() || !b.contains("i") || !b.contains("j"))
				throw InputError(InputError::Kind::BadAlgebra, "bracket entries need \"i\" and \"j\"");
			StructureConstantAlgebra::Bracket entry{bracket_slot(b["i"], labels),
			                                        bracket_slot(b["j"], labels), {}};
			if (b.contains("coords")) {
				if (!b["coords"].is_object())
					throw InputError(InputError::Kind::BadAlgebra, "\"coords\" must be an object");
				for (const auto &[name, value] : b["coords"].items())
					entry.coords[bracket_slot(Json(name), labels)] += parse_scalar(value);
			}
			brackets.push_back(std::move(entry));
		}
	}
	try {
		return std::make_shared<StructureConstantAlgebra>(std::move(labels), brackets);
	} catch (const std::invalid_argument &e) {
		throw InputError(InputError::Kind::BadAlgebra, e.what());
	}
}

std::string target_name(const Json &j)
{
	if (j.is_string())
		return j.get<std::string>();
	if (j.is_object() && j.contains("custom"))
		return "custom";
	return j.dump();
}

AnyTarget parse_target(const Json &j)
{
	if (j.is_object() && j.contains("custom"))
		return AlgebraTarget{parse_algebra(j["custom"])};
	if (!j.is_string())
		throw InputError(InputError::Kind::UnknownTarget, "unknown target " + j.dump());
	const std::string name = j.get<std::string>();
	if (name == "witt")
		return WittTarget{false};
	if (name == "virasoro")
		return WittTarget{true};
	if (name == "heisenberg")
		return AlgebraTarget{heisenberg()};
	static const std::regex sl(R"(sl\(?([2-9])\)?)");
	std::smatch m;
	if (std::regex_match(name, m, sl))
		return AlgebraTarget{sl_algebra(std::stoi(m[1]))};
	throw InputError(InputError::Kind::UnknownTarget, "unknown target '" + name + "'");
}

TargetElement parse_element(const AlgebraPtr &algebra, const std::string &text)
{
	SparseVector coords;
	for (const auto &t : parse_terms(text))
		axpy(coords, t.coefficient, {{basis_index(algebra, t.name), Scalar(1)}});
	return TargetElement(algebra, std::move(coords));
}

WittElement parse_witt_element(const std::string &text)
{
	WittElement out;
	for (const auto &t : parse_terms(text)) {
		if (t.name == "c")
			out.add_central(t.coefficient);
		else
			out.add_term(witt_index(t.name), t.coefficient);
	}
	return out;
}

TargetElement parse_element(const AlgebraPtr &algebra, const Json &j)
{
	if (j.is_string())
		return parse_element(algebra, j.get<std::string>());
	if (!j.is_object())
		throw InputError(InputError::Kind::BadElement, "image must be a coefficient map or an expression");
	SparseVector coords;
	for (const auto &[name, value] : j.items())
		axpy(coords, parse_scalar(value), {{basis_index(algebra, name), Scalar(1)}});
	return TargetElement(algebra, std::move(coords));
}

WittElement parse_witt_element(const Json &j)
{
	if (j.is_string())
		return parse_witt_element(j.get<std::string>());
	if (!j.is_object())
		throw InputError(InputError::Kind::BadElement, "image must be a coefficient map or an expression");
	WittElement out;
	for (const auto &[name, value] : j.items()) {
		if (name == "c")
			out.add_central(parse_scalar(value));
		else
			out.add_term(witt_index(name), parse_scalar(value));
	}
	return out;
}

MorphismSpec parse_morphism_spec(const Json &j)
{
	if (!j.is_object())
		throw InputError(InputError::Kind::MalformedJson, "morphism spec must be a JSON object");
	if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long>() < 1)
		throw InputError(InputError::Kind::MalformedJson, "morphism spec needs a positive integer \"n\"");
	if (!j.contains("target"))
		throw InputError(InputError::Kind::MalformedJson, "morphism spec needs a \"target\"");
	if (!j.contains("images") || !j["images"].is_array())
		throw InputError(InputError::Kind::MalformedJson, "morphism spec needs an \"images\" array");
	const int n = j["n"].get<int>();
	const auto &images = j["images"];
	AnyTarget target = parse_target(j["target"]);
	if (images.size() != static_cast<std::size_t>(n))
		throw InputError(InputError::Kind::ArityMismatch, "image arity mismatch: n = " + std::to_string(n) + " but " +
		                                                      std::to_string(images.size()) + " images given");
	MorphismSpec spec{n, target_name(j["target"]), GeneratorMorphism<WittTarget>(WittTarget{}, {WittElement{}})};
	if (auto *alg = std::get_if<AlgebraTarget>(&target)) {
		std::vector<TargetElement> elems;
		for (const auto &im : images)
			elems.push_back(parse_element(alg->algebra, im));
		spec.morphism = GeneratorMorphism<AlgebraTarget>(*alg, std::move(elems));
	} else {
		std::vector<WittElement> elems;
		for (const auto &im : images)
			elems.push_back(parse_witt_element(im));
		spec.morphism = GeneratorMorphism<WittTarget>(std::get<WittTarget>(target), std::move(elems));
	}
	return spec;
}

MatrixData parse_matrix(const Json &j)
{
	if (!j.is_array() || j.empty())
		throw InputError(InputError::Kind::BadMatrix, "matrix must be a nonempty array of rows");
	DenseMatrix rows;
	for (const auto &row : j) {
		if (!row.is_array())
			throw InputError(InputError::Kind::BadMatrix, "matrix rows must be arrays");
		std::vector<Scalar> r;
		for (const auto &x : row)
			r.push_back(parse_scalar(x));
		rows.push_back(std::move(r));
	}
	try {
		return MatrixData(std::move(rows));
	} catch (const std::invalid_argument &e) {
		throw InputError(InputError::Kind::BadMatrix, e.what());
	}
}

Json parse_json_text(const std::string &text)
{
	try {
		return Json::parse(text);
	} catch (const nlohmann::json::parse_error &e) {
		throw InputError(InputError::Kind::MalformedJson, std::string("malformed JSON: ") + e.what());
	}
}

Json to_json(const Scalar &s)
{
	return s.to_string();
}

Json to_json(const TargetElement &x)
{
	Json out = Json::object();
	for (const auto &[k, c] : x.coords())
		out[x.algebra()->labels()[k]] = c.to_string();
	return out;
}

Json to_json(const WittElement &x)
{
	Json out = Json::object();
	for (const auto &[n, c] : x.terms())
		out["e_" + std::to_string(n)] = c.to_string();
	if (!x.central().is_zero())
		out["c"] = x.central().to_string();
	return out;
}

Json to_json(const FreeLieElement &x)
{
	Json out = Json::object();
	for (const auto &[w, c] : x.terms())
		out[w.to_string()] = c.to_string();
	return out;
}

Json to_json(const DenseMatrix &m)
{
	Json out = Json::array();
	for (const auto &row : m) {
		Json r = Json::array();
		for (const auto &x : row)
			r.push_back(x.to_string());
		out.push_back(std::move(r));
	}
	return out;
}

} // namespace ym::io
