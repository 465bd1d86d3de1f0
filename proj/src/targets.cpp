#include "ym/targets.hpp"

#include <stdexcept>

namespace ym {

StructureConstantAlgebra::StructureConstantAlgebra(std::vector<std::string> labels,
                                                   const std::vector<Bracket> &brackets)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size())
{
	const std::size_t n = labels_.size();
	for (std::size_t k = 0; k < n; ++k)
		if (!names_.emplace(labels_[k], k).second)
			throw std::invalid_argument("duplicate basis label '" + labels_[k] + "'");

	std::vector<bool> seen(n * n, false);
	for (const auto &b : brackets) {
		if (b.i >= n || b.j >= n)
			throw std::invalid_argument("bracket index out of range");
		for (const auto &[col, c] : b.coords)
			if (col >= n)
				throw std::invalid_argument("bracket coordinate out of range");
		SparseVector coords;
		for (const auto &[col, c] : b.coords)
			if (!c.is_zero())
				coords.emplace(col, c);
		if (b.i == b.j) {
			if (!coords.empty())
				throw std::invalid_argument("antisymmetry violated: [" + labels_[b.i] + ", " + labels_[b.i] +
				                            "] must be zero");
			continue;
		}
		SparseVector negated = scaled(coords, Scalar(-1));
		const std::size_t ij = b.i * n + b.j, ji = b.j * n + b.i;
		if ((seen[ij] && table_[ij] != coords) || (seen[ji] && table_[ji] != negated))
			throw std::invalid_argument("antisymmetry violated for [" + labels_[b.i] + ", " + labels_[b.j] + "]");
		table_[ij] = std::move(coords);
		table_[ji] = std::move(negated);
		seen[ij] = seen[ji] = true;
	}

	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k) {
				SparseVector sum = bracket({{i, 1}}, structure(j, k));
				axpy(sum, 1, bracket({{j, 1}}, structure(k, i)));
				axpy(sum, 1, bracket({{k, 1}}, structure(i, j)));
				if (!sum.empty())
					throw std::invalid_argument("Jacobi identity fails on (" + labels_[i] + ", " + labels_[j] +
					                            ", " + labels_[k] + ")");
			}
}

std::optional<std::size_t> StructureConstantAlgebra::index_of(const std::string &label) const
{
	auto it = names_.find(label);
	if (it == names_.end())
		return std::nullopt;
	return it->second;
}

void StructureConstantAlgebra::add_alias(std::string alias, std::size_t index)
{
	if (index >= dim())
		throw std::invalid_argument("alias index out of range");
	names_.emplace(std::move(alias), index);
}

SparseVector StructureConstantAlgebra::bracket(const SparseVector &u, const SparseVector &v) const
{
	SparseVector out;
	for (const auto &[i, a] : u)
		for (const auto &[j, b] : v)
			axpy(out, a * b, structure(i, j));
	return out;
}

// ---------------------------------------------------------------------------

TargetElement::TargetElement(AlgebraPtr algebra, SparseVector coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords))
{
	if (!algebra_)
		throw std::invalid_argument("target element without an algebra");
	for (auto it = coords_.begin(); it != coords_.end();) {
		if (it->first >= algebra_->dim())
			throw std::invalid_argument("coordinate out of range");
		it = it->second.is_zero() ? coords_.erase(it) : std::next(it);
	}
}

TargetElement TargetElement::basis(const AlgebraPtr &algebra, const std::string &label, Scalar c)
{
	auto idx = algebra->index_of(label);
	if (!idx)
		throw std::invalid_argument("unknown basis element '" + label + "'");
	return TargetElement(algebra, {{*idx, c}});
}

Scalar TargetElement::coefficient(const std::string &label) const
{
	auto idx = algebra_->index_of(label);
	if (!idx)
		throw std::invalid_argument("unknown basis element '" + label + "'");
	auto it = coords_.find(*idx);
	return it == coords_.end() ? Scalar{} : it->second;
}

TargetElement &TargetElement::operator+=(const TargetElement &o)
{
	if (algebra_ != o.algebra_)
		throw std::invalid_argument("elements of different algebras");
	axpy(coords_, 1, o.coords_);
	return *this;
}

TargetElement &TargetElement::operator*=(const Scalar &c)
{
	coords_ = scaled(coords_, c);
	return *this;
}

std::string TargetElement::to_string() const
{
	if (coords_.empty())
		return "0";
	std::string out;
	for (const auto &[k, c] : coords_)
		out += format_term(c, algebra_->labels()[k], out.empty());
	return out;
}

// ---------------------------------------------------------------------------

AlgebraPtr sl_algebra(int m)
{
	if (m < 2 || m > 9)
		throw std::invalid_argument("sl(m) requires 2 <= m <= 9");
	// Basis as m x m integer matrices.
	using Matrix = std::vector<long>;
	auto zero = [m] { return Matrix(static_cast<std::size_t>(m * m), 0); };
	std::vector<std::string> labels;
	std::vector<Matrix> mats;
	std::map<std::pair<int, int>, std::size_t> unit_index;
	std::vector<std::size_t> cartan_index;
	auto add_unit = [&](int i, int j) {
		unit_index[{i, j}] = labels.size();
		Matrix e = zero();
		e[static_cast<std::size_t>(i * m + j)] = 1;
		labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
		mats.push_back(std::move(e));
	};
	auto add_cartan = [&](int i) {
		cartan_index.push_back(labels.size());
		Matrix h = zero();
		h[static_cast<std::size_t>(i * m + i)] = 1;
		h[static_cast<std::size_t>((i + 1) * m + i + 1)] = -1;
		labels.push_back("H" + std::to_string(i + 1));
		mats.push_back(std::move(h));
	};
	for (int i = 0; i < m; ++i)
		for (int j = i + 1; j < m; ++j)
			add_unit(i, j);
	for (int i = 0; i + 1 < m; ++i)
		add_cartan(i);
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < i; ++j)
			add_unit(i, j);

	auto decompose = [&](const Matrix &a) {
		SparseVector v;
		long partial = 0;
		for (int i = 0; i < m; ++i)
			for (int j = 0; j < m; ++j) {
				long x = a[static_cast<std::size_t>(i * m + j)];
				if (i != j && x != 0)
					v.emplace(unit_index.at({i, j}), Scalar(x));
			}
		// diag(d_1..d_m) traceless = sum_i (d_1 + ... + d_i) H_i
		for (int i = 0; i + 1 < m; ++i) {
			partial += a[static_cast<std::size_t>(i * m + i)];
			if (partial != 0)
				v.emplace(cartan_index[static_cast<std::size_t>(i)], Scalar(partial));
		}
		return v;
	};
	auto commutator = [&](const Matrix &a, const Matrix &b) {
		Matrix c = zero();
		for (int i = 0; i < m; ++i)
			for (int j = 0; j < m; ++j) {
				long s = 0;
				for (int k = 0; k < m; ++k)
					s += a[static_cast<std::size_t>(i * m + k)] * b[static_cast<std::size_t>(k * m + j)] -
					     b[static_cast<std::size_t>(i * m + k)] * a[static_cast<std::size_t>(k * m + j)];
				c[static_cast<std::size_t>(i * m + j)] = s;
			}
		return c;
	};

	std::vector<StructureConstantAlgebra::Bracket> brackets;
	for (std::size_t i = 0; i < mats.size(); ++i)
		for (std::size_t j = i + 1; j < mats.size(); ++j)
			brackets.push_back({i, j, decompose(commutator(mats[i], mats[j]))});

	std::vector<std::string> names = labels;
	if (m == 2)
		names = {"e", "h", "f"};
	auto algebra = std::make_shared<StructureConstantAlgebra>(names, brackets);
	if (m == 2)
		for (std::size_t k = 0; k < labels.size(); ++k)
			algebra->add_alias(labels[k], k);
	return algebra;
}

AlgebraPtr heisenberg()
{
	return std::make_shared<StructureConstantAlgebra>(std::vector<std::string>{"p", "q", "z"},
	                                                  std::vector<StructureConstantAlgebra::Bracket>{{0, 1, {{2, 1}}}});
}

TargetElement bracket_in(const StructureConstantAlgebra &algebra, const TargetElement &u, const TargetElement &v)
{
	if (u.algebra().get() != &algebra || v.algebra().get() != &algebra)
		throw std::invalid_argument("bracket_in: element from a different algebra");
	return TargetElement(u.algebra(), algebra.bracket(u.coords(), v.coords()));
}

Subspace subalgebra_closure(const StructureConstantAlgebra &algebra, const std::vector<TargetElement> &gens)
{
	Subspace span(algebra.dim());
	for (const auto &g : gens) {
		if (g.algebra().get() != &algebra)
			throw std::invalid_argument("subalgebra_closure: generator from a different algebra");
		span.insert(g.coords());
	}
	for (bool grew = true; grew;) {
		grew = false;
		auto rows = span.rows();
		for (std::size_t a = 0; a < rows.size(); ++a) {
			for (const auto &g : gens)
				grew |= span.insert(algebra.bracket(rows[a], g.coords()));
			for (std::size_t b = a + 1; b < rows.size(); ++b)
				grew |= span.insert(algebra.bracket(rows[a], rows[b]));
		}
	}
	return span;
}

bool is_bracket_closed(const StructureConstantAlgebra &algebra, const Subspace &s)
{
	auto rows = s.rows();
	for (std::size_t a = 0; a < rows.size(); ++a)
		for (std::size_t b = a + 1; b < rows.size(); ++b)
			if (!s.contains(algebra.bracket(rows[a], rows[b])))
				return false;
	return true;
}

std::vector<std::size_t> SeriesReport::derived_dims() const
{
	std::vector<std::size_t> out;
	for (const auto &s : derived_series)
		out.push_back(s.dim());
	return out;
}

std::vector<std::size_t> SeriesReport::lower_central_dims() const
{
	std::vector<std::size_t> out;
	for (const auto &s : lower_central_series)
		out.push_back(s.dim());
	return out;
}

namespace {

Subspace bracket_span(const StructureConstantAlgebra &algebra, const Subspace &a, const Subspace &b)
{
	Subspace out(algebra.dim());
	auto ra = a.rows(), rb = b.rows();
	for (const auto &u : ra)
		for (const auto &v : rb)
			out.insert(algebra.bracket(u, v));
	return out;
}

} // namespace

SeriesReport series_analysis(const StructureConstantAlgebra &algebra, const Subspace &s)
{
	if (!is_bracket_closed(algebra, s))
		throw std::invalid_argument("series_analysis: subspace is not bracket-closed");
	SeriesReport report;
	report.derived_series.push_back(s);
	while (report.derived_series.back().dim() > 0) {
		const Subspace &last = report.derived_series.back();
		Subspace next = bracket_span(algebra, last, last);
		if (next.dim() == last.dim())
			break;
		report.derived_series.push_back(std::move(next));
	}
	report.lower_central_series.push_back(s);
	while (report.lower_central_series.back().dim() > 0) {
		const Subspace &last = report.lower_central_series.back();
		Subspace next = bracket_span(algebra, s, last);
		if (next.dim() == last.dim())
			break;
		report.lower_central_series.push_back(std::move(next));
	}
	report.is_solvable = report.derived_series.back().dim() == 0;
	report.is_nilpotent = report.lower_central_series.back().dim() == 0;
	return report;
}

} // namespace ym
