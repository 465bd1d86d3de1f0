#pragma once

// Morphisms ym(3) -> sl(2) with phi(x3) normalized to e (nilpotent branch) or
// h (semisimple branch) and phi(x_i) = alpha_i e + beta_i h + gamma_i f for
// i = 1, 2. Closed-form vanishing conditions, an isotropy witness on k^2,
// and a seeded audit that residual-free morphisms have solvable image.

#include "ym/morphisms.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ym {

using Pair = std::array<Scalar, 2>;

// x . y = x1 y1 + x2 y2 (bilinear, no conjugation).
Scalar dot(const Pair &x, const Pair &y);

class WitnessError : public std::domain_error {
public:
	enum class Reason { XIsZero, XNotIsotropic, NotOrthogonal };

	explicit WitnessError(Reason reason);
	Reason reason() const { return reason_; }

private:
	Reason reason_;
};

// For x != 0 with x.x = 0 and x.y = 0, the lambda with y = lambda x.
// Throws WitnessError naming the first violated precondition.
Scalar isotropic_orthogonal_witness(const Pair &x, const Pair &y);

enum class Sl2Branch { Nilpotent, Semisimple };

std::string to_string(Sl2Branch branch);

struct Sl2CaseParameters {
	Sl2Branch branch = Sl2Branch::Nilpotent;
	Pair alpha;
	Pair beta;
	Pair gamma;
};

struct Sl2CaseConditions {
	// phi(r3) = 0 conditions.
	std::array<Scalar, 3> r3;
	// phi(r1) = phi(r2) = 0 conditions: pair-valued coefficients of e, h, f
	// (each scaled by 1/2).
	std::array<Pair, 3> rj;

	bool all_zero() const;
};

Sl2CaseConditions sl2_case_residual(const Sl2CaseParameters &p);

// The morphism ym(3) -> sl(2) described by p, over the shared sl(2) instance.
GeneratorMorphism<AlgebraTarget> assemble_morphism(const Sl2CaseParameters &p);

// Shared sl(2) used by the case study.
const AlgebraPtr &sl2();

// x1 -> h, x2 -> e, x3 -> i h.
GeneratorMorphism<AlgebraTarget> remark_morphism();

struct AuditCounterexample {
	std::string family;
	std::vector<TargetElement> images;
};

struct AuditOptions {
	bool nilpotent_branch = true;
	bool semisimple_branch = true;
	bool random_candidates = true;
	bool targeted_families = true;
};

struct AuditReport {
	std::uint64_t seed = 0;
	std::size_t samples = 0;
	std::size_t candidates = 0;
	std::size_t residual_zero = 0;
	std::size_t excluded = 0; // nonzero residuals, outside the assertion
	std::size_t solvable_violations = 0;
	std::vector<AuditCounterexample> counterexamples;
	// Families that produced residual-free candidates, with counts.
	std::map<std::string, std::size_t> family_hits;
	MorphismReport remark;
};

// Per-sample generators are derived deterministically from (seed, index).
AuditReport solvable_image_audit(std::size_t samples, std::uint64_t seed, const AuditOptions &options = {});

struct EquivalenceReport {
	std::uint64_t seed = 0;
	Sl2Branch branch = Sl2Branch::Nilpotent;
	std::size_t samples = 0;
	std::size_t both_zero = 0;
	std::size_t both_nonzero = 0;
	std::size_t mismatches = 0;
	std::vector<Sl2CaseParameters> mismatch_examples;
};

// Closed-form conditions versus direct relator evaluation on seeded random
// parameters, half of them drawn from residual-free families.
EquivalenceReport sl2_oracle_equivalence(Sl2Branch branch, std::size_t samples, std::uint64_t seed);

} // namespace ym
