#include "ym/sl2_case.hpp"

#include <random>

namespace ym {

Scalar dot(const Pair &x, const Pair &y)
{
	return x[0] * y[0] + x[1] * y[1];
}

namespace {

const char *reason_text(WitnessError::Reason r)
{
	switch (r) {
	case WitnessError::Reason::XIsZero:
		return "x is zero";
	case WitnessError::Reason::XNotIsotropic:
		return "x . x is not zero";
	case WitnessError::Reason::NotOrthogonal:
		return "x . y is not zero";
	}
	return "unknown";
}

} // namespace

WitnessError::WitnessError(Reason reason) : std::domain_error(reason_text(reason)), reason_(reason) {}

Scalar isotropic_orthogonal_witness(const Pair &x, const Pair &y)
{
	if (x[0].is_zero() && x[1].is_zero())
		throw WitnessError(WitnessError::Reason::XIsZero);
	if (!dot(x, x).is_zero())
		throw WitnessError(WitnessError::Reason::XNotIsotropic);
	if (!dot(x, y).is_zero())
		throw WitnessError(WitnessError::Reason::NotOrthogonal);
	const std::size_t k = x[0].is_zero() ? 1 : 0;
	Scalar lambda = y[k] / x[k];
	if (!(y[0] == lambda * x[0] && y[1] == lambda * x[1]))
		throw std::logic_error("isotropic witness: y is not a multiple of x");
	return lambda;
}

std::string to_string(Sl2Branch branch)
{
	return branch == Sl2Branch::Nilpotent ? "nilpotent" : "semisimple";
}

bool Sl2CaseConditions::all_zero() const
{
	for (const auto &s : r3)
		if (!s.is_zero())
			return false;
	for (const auto &p : rj)
		if (!p[0].is_zero() || !p[1].is_zero())
			return false;
	return true;
}

Sl2CaseConditions sl2_case_residual(const Sl2CaseParameters &p)
{
	const Pair &a = p.alpha, &b = p.beta, &g = p.gamma;
	const Scalar aa = dot(a, a), bb = dot(b, b), cc = dot(g, g);
	const Scalar ab = dot(a, b), ac = dot(a, g), bc = dot(b, g);
	auto combo = [](const Scalar &s1, const Pair &v1, const Scalar &s2, const Pair &v2, const Scalar &s3,
	                const Pair &v3) {
		return Pair{s1 * v1[0] + s2 * v2[0] + s3 * v3[0], s1 * v1[1] + s2 * v2[1] + s3 * v3[1]};
	};

	Sl2CaseConditions out;
	if (p.branch == Sl2Branch::Nilpotent) {
		const Scalar lead = Scalar(2) * bb + ac;
		out.r3 = {lead, bc, cc};
		out.rj[0] = combo(lead, a, Scalar(-2) * ab, b, -(aa + Scalar(1)), g);
		out.rj[2] = combo(lead, g, -cc, a, Scalar(-2) * bc, b);
	} else {
		const Scalar lead = Scalar(2) * bb + Scalar(2) + ac;
		out.r3 = {ab, ac, bc};
		out.rj[0] = combo(lead, a, Scalar(-2) * ab, b, -aa, g);
		out.rj[2] = combo(lead, g, -cc, a, Scalar(-2) * bc, b);
	}
	out.rj[1] = combo(Scalar(2) * ac, b, -ab, g, -bc, a);
	return out;
}

const AlgebraPtr &sl2()
{
	static const AlgebraPtr algebra = sl_algebra(2);
	return algebra;
}

namespace {

TargetElement sl2_element(const Scalar &e, const Scalar &h, const Scalar &f)
{
	return TargetElement(sl2(), {{0, e}, {1, h}, {2, f}});
}

} // namespace

GeneratorMorphism<AlgebraTarget> assemble_morphism(const Sl2CaseParameters &p)
{
	TargetElement x3 = p.branch == Sl2Branch::Nilpotent ? sl2_element(1, 0, 0) : sl2_element(0, 1, 0);
	return {AlgebraTarget{sl2()},
	        {sl2_element(p.alpha[0], p.beta[0], p.gamma[0]), sl2_element(p.alpha[1], p.beta[1], p.gamma[1]), x3}};
}

GeneratorMorphism<AlgebraTarget> remark_morphism()
{
	return {AlgebraTarget{sl2()}, {sl2_element(0, 1, 0), sl2_element(1, 0, 0), sl2_element(0, Scalar::i(), 0)}};
}

// ---------------------------------------------------------------------------

namespace {

class SampleRng {
public:
	SampleRng(std::uint64_t seed, std::uint64_t index)
	{
		std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
		                  static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
		engine_.seed(seq);
	}

	// Uniform-ish in [lo, hi]; the raw engine output is specified exactly.
	long range(long lo, long hi)
	{
		return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
	}

	Scalar rational()
	{
		return Scalar::rational(range(-4, 4), range(1, 3));
	}

	Scalar scalar()
	{
		switch (range(0, 3)) {
		case 0:
			return 0;
		case 1:
			return rational();
		default:
			return {rational().re(), rational().re()};
		}
	}

	Scalar nonzero()
	{
		for (;;)
			if (Scalar s = scalar(); !s.is_zero())
				return s;
	}

	Pair pair() { return {scalar(), scalar()}; }

private:
	std::mt19937_64 engine_;
};

Pair times(const Scalar &s, const Pair &v)
{
	return {s * v[0], s * v[1]};
}

// Rational point (a, b) on a^2 + b^2 = 1.
Pair unit_circle_point(SampleRng &rng)
{
	Scalar t = rng.rational();
	Scalar den = Scalar(1) + t * t;
	return {(Scalar(1) - t * t) / den, Scalar(2) * t / den};
}

Pair isotropic(SampleRng &rng)
{
	Pair base = rng.range(0, 1) ? Pair{1, Scalar::i()} : Pair{1, -Scalar::i()};
	return times(rng.nonzero(), base);
}

struct FamilySample {
	std::string family;
	Sl2CaseParameters params;
	bool residual_free;
};

// Parameter families. All but the "*-r3-only" ones kill r1, r2, r3; the
// r3-only ones satisfy the r3 conditions and violate the r1/r2 conditions.
FamilySample family_sample(Sl2Branch branch, SampleRng &rng)
{
	FamilySample out{"", {branch, {}, {}, {}}, true};
	auto &p = out.params;
	const Pair zero{};
	if (branch == Sl2Branch::Nilpotent) {
		switch (rng.range(0, 2)) {
		case 0: // image in k.e
			out.family = "nilpotent-gamma0-beta0";
			p.alpha = rng.pair();
			p.beta = p.gamma = zero;
			break;
		case 1: { // alpha, beta on one isotropic line
			out.family = "nilpotent-gamma0-isotropic";
			Pair u = isotropic(rng);
			p.beta = u;
			p.alpha = times(rng.scalar(), u);
			p.gamma = zero;
			break;
		}
		default: { // beta isotropic, alpha off its line
			out.family = "nilpotent-r3-only";
			Pair u = isotropic(rng);
			p.beta = u;
			// alpha . beta = s u_1 != 0
			p.alpha = {u[0] + rng.nonzero(), u[1]};
			p.gamma = zero;
			out.residual_free = false;
			break;
		}
		}
		return out;
	}
	switch (rng.range(0, 3)) {
	case 0: // image in k.h
		out.family = "semisimple-alpha0-gamma0";
		p.beta = rng.pair();
		p.alpha = p.gamma = zero;
		break;
	case 1: { // beta.beta = -1, alpha orthogonal to beta
		out.family = "semisimple-gamma0-unit";
		Pair u = unit_circle_point(rng);
		p.beta = times(Scalar::i(), u);
		p.alpha = times(rng.nonzero(), Pair{-u[1], u[0]});
		p.gamma = zero;
		break;
	}
	case 2: { // beta.beta = -1, gamma orthogonal to beta
		out.family = "semisimple-alpha0-unit";
		Pair u = unit_circle_point(rng);
		p.beta = times(Scalar::i(), u);
		p.gamma = times(rng.nonzero(), Pair{-u[1], u[0]});
		p.alpha = zero;
		break;
	}
	default: { // alpha orthogonal to beta but beta.beta = 1
		out.family = "semisimple-r3-only";
		Pair u = unit_circle_point(rng);
		p.beta = u;
		p.alpha = times(rng.nonzero(), Pair{-u[1], u[0]});
		p.gamma = zero;
		out.residual_free = false;
		break;
	}
	}
	return out;
}

Sl2CaseParameters random_parameters(Sl2Branch branch, SampleRng &rng)
{
	return {branch, rng.pair(), rng.pair(), rng.pair()};
}

// Conjugation by g in SL(2, Q(i)) followed by scaling; both preserve the
// vanishing of the cubic relators and the structure of the image.
TargetElement twist(const TargetElement &x, const Scalar &upper, const Scalar &lower, const Scalar &scale)
{
	// x = [[h, e], [f, -h]]
	Scalar e = x.coefficient("e"), h = x.coefficient("h"), f = x.coefficient("f");
	auto conjugate = [](std::array<Scalar, 4> m, const std::array<Scalar, 4> &g, const std::array<Scalar, 4> &gi) {
		auto mul = [](const std::array<Scalar, 4> &a, const std::array<Scalar, 4> &b) {
			return std::array<Scalar, 4>{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
			                             a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
		};
		return mul(mul(g, m), gi);
	};
	std::array<Scalar, 4> m{h, e, f, -h};
	m = conjugate(m, {1, upper, 0, 1}, {1, -upper, 0, 1});
	m = conjugate(m, {1, 0, lower, 1}, {1, 0, -lower, 1});
	return scale * sl2_element(m[1], m[0], m[2]);
}

GeneratorMorphism<AlgebraTarget> twisted(const GeneratorMorphism<AlgebraTarget> &phi, SampleRng &rng)
{
	Scalar upper = rng.scalar(), lower = rng.scalar(), scale = rng.nonzero();
	std::vector<TargetElement> images;
	for (const auto &x : phi.images())
		images.push_back(twist(x, upper, lower, scale));
	return {phi.target(), std::move(images)};
}

void record(AuditReport &report, const std::string &family, const GeneratorMorphism<AlgebraTarget> &phi)
{
	++report.candidates;
	auto residuals = relation_residuals(phi);
	if (!all_zero(residuals)) {
		++report.excluded;
		return;
	}
	++report.residual_zero;
	++report.family_hits[family];
	auto series = series_analysis(*phi.target().algebra, image_closure(phi));
	if (!series.is_solvable) {
		++report.solvable_violations;
		report.counterexamples.push_back({family, phi.images()});
	}
}

} // namespace

AuditReport solvable_image_audit(std::size_t samples, std::uint64_t seed, const AuditOptions &options)
{
	if (samples < 1)
		throw std::invalid_argument("solvable_image_audit requires samples >= 1");
	AuditReport report;
	report.seed = seed;
	report.samples = samples;

	report.remark = analyze(remark_morphism());
	record(report, "remark", remark_morphism());
	AlgebraTarget target{sl2()};
	record(report, "zero", {target, {target.zero(), target.zero(), target.zero()}});

	std::vector<Sl2Branch> branches;
	if (options.nilpotent_branch)
		branches.push_back(Sl2Branch::Nilpotent);
	if (options.semisimple_branch)
		branches.push_back(Sl2Branch::Semisimple);

	for (std::size_t k = 0; k < samples; ++k) {
		SampleRng rng(seed, k);
		if (options.random_candidates) {
			std::vector<TargetElement> images;
			for (int j = 0; j < 3; ++j)
				images.push_back(sl2_element(rng.scalar(), rng.scalar(), rng.scalar()));
			record(report, "random", {target, std::move(images)});
		}
		if (options.targeted_families && !branches.empty()) {
			Sl2Branch branch = branches[static_cast<std::size_t>(rng.range(0, static_cast<long>(branches.size()) - 1))];
			FamilySample s = family_sample(branch, rng);
			auto phi = assemble_morphism(s.params);
			record(report, s.family, phi);
			record(report, s.family + "-conjugated", twisted(phi, rng));
		}
	}
	return report;
}

EquivalenceReport sl2_oracle_equivalence(Sl2Branch branch, std::size_t samples, std::uint64_t seed)
{
	EquivalenceReport report;
	report.seed = seed;
	report.branch = branch;
	report.samples = samples;
	for (std::size_t k = 0; k < samples; ++k) {
		SampleRng rng(seed, k);
		Sl2CaseParameters p = rng.range(0, 1) ? family_sample(branch, rng).params : random_parameters(branch, rng);
		const bool closed_form = sl2_case_residual(p).all_zero();
		const bool direct = all_zero(relation_residuals(assemble_morphism(p)));
		if (closed_form != direct) {
			++report.mismatches;
			if (report.mismatch_examples.size() < 10)
				report.mismatch_examples.push_back(p);
		} else if (closed_form) {
			++report.both_zero;
		} else {
			++report.both_nonzero;
		}
	}
	return report;
}

} // namespace ym
