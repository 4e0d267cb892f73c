/*
* Copyright 2026 The nearfield authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include "error.hpp"
#include "gf.hpp"
#include "numth.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nearfield {

using gf::Elem;

/// Finite Dickson nearfield DN_g(q, n): the field F_{q^n} with
///
///     a o b = a * b^(q^k)   where a lies in the coset g^([k]_q) H, H = <g^n>,
///     0 o b = 0.
///
/// Cosets are labelled by k in {0..n-1}; coset(a) is the k with
/// dlog(a) = [k]_q (mod n). The label of 0 is stored as 0 but never consulted
/// by circ().
class Nearfield
{
public:
	using Options = gf::FieldOptions;

	static Nearfield Build(std::uint64_t q, std::uint64_t n, const Options& opt = {})
	{
		auto pair = numth::MakeDicksonPair(q, n);
		std::uint64_t m = std::uint64_t(pair.l) * n;
		if (m > 64)
			throw Error(ErrorKind::SizeCapExceeded, "q^n exceeds the size cap");
		return Nearfield(pair, gf::Field::Build(std::uint32_t(pair.p), unsigned(m), opt));
	}

	const gf::Field& field() const { return _field; }
	std::uint64_t p() const { return _pair.p; }
	unsigned l() const { return _pair.l; }
	std::uint64_t q() const { return _pair.q; }
	unsigned n() const { return unsigned(_pair.n); }
	std::uint32_t size() const { return _field.size(); }
	Elem generator() const { return _field.generator(); }
	const numth::CosetLabelMap& labels() const { return _labels; }

	unsigned coset(Elem a) const { return _coset[a.index]; }

	/// b^(q^k)
	Elem qPower(Elem b, unsigned k) const { return _field.frobenius(b, std::uint64_t(_pair.l) * k); }

	Elem circ(Elem a, Elem b) const
	{
		if (a.index == 0)
			return gf::Field::Zero();
		return _field.mul(a, qPower(b, _coset[a.index]));
	}

	Elem add(Elem a, Elem b) const { return _field.add(a, b); }

	/// Left-associated power ((x o x) o x) ... with e factors; x^0 = 1.
	Elem circPow(Elem x, std::uint64_t e) const
	{
		Elem r = gf::Field::One();
		for (std::uint64_t i = 0; i < e; ++i)
			r = i == 0 ? x : circ(r, x);
		return r;
	}

	/// Inverse in (R*, o): b with a o b = 1.
	Elem circInv(Elem a) const
	{
		if (a.index == 0)
			throw Error(ErrorKind::DivisionByZero, "nearfield inverse of zero");
		// a * b^(q^k) = 1  =>  b = (a^-1)^(q^(n-k))
		unsigned k = _coset[a.index];
		return qPower(_field.inv(a), (n() - k) % n());
	}

	/// The subfield F_q = { x : x^q = x }, sorted.
	std::vector<Elem> baseSubfield() const { return gf::FixedSet(_field, _pair.l); }

private:
	Nearfield(numth::DicksonPair pair, gf::Field field)
		: _pair(pair), _field(std::move(field)), _labels(numth::MakeCosetLabelMap(pair.q, pair.n))
	{
		_coset.assign(_field.size(), 0);
		for (std::uint32_t i = 1; i < _field.size(); ++i)
			_coset[i] = _labels.inverse[_field.dlog({i}) % _pair.n];
	}

	numth::DicksonPair _pair;
	gf::Field _field;
	numth::CosetLabelMap _labels;
	std::vector<unsigned> _coset;
};

struct Triple
{
	Elem a, b, c;

	bool operator==(const Triple&) const = default;
};

/// How the triple-based checks run. Exhaustive scans every triple; Sampled
/// draws `count` triples from the seeded stream; Auto is exhaustive up to
/// kExhaustiveLimit elements and sampled (10^6 triples, seed 1) above.
struct CheckMode
{
	enum Kind { Auto, Exhaustive, Sampled } kind = Auto;
	std::uint64_t seed = 1;
	std::uint64_t count = 1000000;

	static constexpr std::uint32_t kExhaustiveLimit = 128;
};

struct AxiomReport
{
	bool additiveAbelian = false;
	bool multiplicativeGroup = false;
	bool leftDistributive = false;
	bool rightDistributive = false;
	std::optional<Triple> rightCounterexample;
	std::optional<Triple> leftCounterexample;
	bool exhaustive = false;
	std::uint64_t triplesChecked = 0;
	std::uint64_t leftViolations = 0;
	std::uint64_t rightTriplesScanned = 0;

	bool isProperNearfield() const
	{
		return additiveAbelian && multiplicativeGroup && leftDistributive && !rightDistributive;
	}
};

namespace detail {

inline bool ResolveExhaustive(const CheckMode& mode, std::uint32_t size)
{
	switch (mode.kind) {
	case CheckMode::Exhaustive:
		if (size > CheckMode::kExhaustiveLimit)
			throw Error(ErrorKind::TooLarge, "exhaustive triple scans are limited to " + std::to_string(CheckMode::kExhaustiveLimit)
				+ " elements; use sampled mode");
		return true;
	case CheckMode::Sampled: return false;
	case CheckMode::Auto: return size <= CheckMode::kExhaustiveLimit;
	}
	return false;
}

template <typename Fn>
void ForEachTriple(std::uint32_t size, bool exhaustive, const CheckMode& mode, Fn&& fn)
{
	if (exhaustive) {
		for (std::uint32_t a = 0; a < size; ++a)
			for (std::uint32_t b = 0; b < size; ++b)
				for (std::uint32_t c = 0; c < size; ++c)
					fn(Elem{a}, Elem{b}, Elem{c});
	} else {
		SampleStream rng(mode.seed);
		for (std::uint64_t i = 0; i < mode.count; ++i) {
			Elem a{rng.below(size)};
			Elem b{rng.below(size)};
			Elem c{rng.below(size)};
			fn(a, b, c);
		}
	}
}

} // namespace detail

/// Checks the left-nearfield axioms of a constructed DN(q, n) and searches
/// for a right-distributivity counterexample.
inline AxiomReport VerifyLeftNearfield(const Nearfield& nf, const CheckMode& mode = {})
{
	const auto& F = nf.field();
	const std::uint32_t size = nf.size();
	AxiomReport r;
	r.exhaustive = detail::ResolveExhaustive(mode, size);

	// (R,+): commutativity, identity and inverses over all pairs; associativity with the triples
	bool addOk = true;
	for (std::uint32_t a = 0; a < size && addOk; ++a) {
		addOk = F.add({a}, Elem{0}) == Elem{a} && F.add({a}, F.neg({a})) == Elem{0};
		for (std::uint32_t b = a + 1; b < size && addOk; ++b)
			addOk = F.add({a}, {b}) == F.add({b}, {a});
	}

	// (R*,o): closure, two-sided identity, inverses; associativity with the triples
	bool mulOk = true;
	for (std::uint32_t a = 1; a < size && mulOk; ++a) {
		Elem x{a};
		Elem inv = nf.circInv(x);
		mulOk = nf.circ(x, gf::Field::One()) == x && nf.circ(gf::Field::One(), x) == x
			&& nf.circ(x, inv) == gf::Field::One() && nf.circ(inv, x) == gf::Field::One();
		for (std::uint32_t b = 1; b < size && mulOk; ++b)
			mulOk = nf.circ(x, {b}).index != 0;
	}

	bool addAssoc = true, mulAssoc = true;
	detail::ForEachTriple(size, r.exhaustive, mode, [&](Elem a, Elem b, Elem c) {
		++r.triplesChecked;
		if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c)))
			addAssoc = false;
		if (nf.circ(nf.circ(a, b), c) != nf.circ(a, nf.circ(b, c)))
			mulAssoc = false;
		if (nf.circ(a, F.add(b, c)) != F.add(nf.circ(a, b), nf.circ(a, c))) {
			if (!r.leftCounterexample)
				r.leftCounterexample = Triple{a, b, c};
			++r.leftViolations;
		}
	});
	r.additiveAbelian = addOk && addAssoc;
	r.multiplicativeGroup = mulOk && mulAssoc;
	r.leftDistributive = r.leftViolations == 0;

	// (a + b) o c = a o c + b o c. Exhaustive mode scans c (outermost), a, b in
	// order; sampled mode draws `count` triples from a stream seeded with seed + 1.
	// Either way the scan stops at the first failure.
	r.rightDistributive = true;
	auto probe = [&](Elem a, Elem b, Elem c) {
		++r.rightTriplesScanned;
		if (nf.circ(F.add(a, b), c) != F.add(nf.circ(a, c), nf.circ(b, c))) {
			r.rightDistributive = false;
			r.rightCounterexample = Triple{a, b, c};
		}
	};
	if (r.exhaustive) {
		for (std::uint32_t c = 0; c < size && r.rightDistributive; ++c)
			for (std::uint32_t a = 0; a < size && r.rightDistributive; ++a)
				for (std::uint32_t b = 0; b < size && r.rightDistributive; ++b)
					probe({a}, {b}, {c});
	} else {
		SampleStream rng(mode.seed + 1);
		for (std::uint64_t i = 0; i < mode.count && r.rightDistributive; ++i) {
			Elem a{rng.below(size)};
			Elem b{rng.below(size)};
			Elem c{rng.below(size)};
			probe(a, b, c);
		}
	}
	return r;
}

/// True when (y + z) o lambda = y o lambda + z o lambda.
inline bool RightDistributes(const Nearfield& nf, Elem y, Elem z, Elem lambda)
{
	const auto& F = nf.field();
	return nf.circ(F.add(y, z), lambda) == F.add(nf.circ(y, lambda), nf.circ(z, lambda));
}

/// D(R) by the defining condition over every pair (y, z). O(size^3).
inline std::vector<Elem> DistributiveElementsFull(const Nearfield& nf)
{
	std::vector<Elem> out;
	const std::uint32_t size = nf.size();
	for (std::uint32_t l = 0; l < size; ++l) {
		bool ok = true;
		for (std::uint32_t y = 0; y < size && ok; ++y)
			for (std::uint32_t z = 0; z < size && ok; ++z)
				ok = RightDistributes(nf, {y}, {z}, {l});
		if (ok)
			out.push_back({l});
	}
	return out;
}

/// D(R) with y restricted to one representative g^j (j < n) per H-coset.
///
/// Exact: for h in H the labels of hy, hz, h(y+z) equal those of y, z, y+z,
/// so the defect at (hy, hz) is h times the defect at (y, z). Every nonzero y
/// is h g^j for some h in H. O(n size^2).
inline std::vector<Elem> DistributiveElementsReduced(const Nearfield& nf)
{
	std::vector<Elem> out;
	const auto& F = nf.field();
	const std::uint32_t size = nf.size();
	std::vector<Elem> reps;
	for (unsigned j = 0; j < nf.n(); ++j)
		reps.push_back(F.exp(j));
	for (std::uint32_t l = 0; l < size; ++l) {
		bool ok = true;
		for (std::size_t i = 0; i < reps.size() && ok; ++i)
			for (std::uint32_t z = 0; z < size && ok; ++z)
				ok = RightDistributes(nf, reps[i], {z}, {l});
		if (ok)
			out.push_back({l});
	}
	return out;
}

inline constexpr std::uint32_t kFullDistributorScanLimit = 704;

/// D(R): full pair scan up to kFullDistributorScanLimit elements, the
/// coset-representative scan above.
inline std::vector<Elem> DistributiveElements(const Nearfield& nf)
{
	return nf.size() <= kFullDistributorScanLimit ? DistributiveElementsFull(nf) : DistributiveElementsReduced(nf);
}

/// C(R) = { x : x o y = y o x for all y }.
inline std::vector<Elem> Center(const Nearfield& nf)
{
	std::vector<Elem> out;
	for (std::uint32_t x = 0; x < nf.size(); ++x) {
		bool ok = true;
		for (std::uint32_t y = 0; y < nf.size() && ok; ++y)
			ok = nf.circ({x}, {y}) == nf.circ({y}, {x});
		if (ok)
			out.push_back({x});
	}
	return out;
}

/// GC(R) = { x : x o y = y o x for all y in D(R) }.
inline std::vector<Elem> GeneralizedCenter(const Nearfield& nf, const std::vector<Elem>& distributive)
{
	std::vector<Elem> out;
	for (std::uint32_t x = 0; x < nf.size(); ++x) {
		bool ok = std::all_of(distributive.begin(), distributive.end(),
			[&](Elem y) { return nf.circ({x}, y) == nf.circ(y, {x}); });
		if (ok)
			out.push_back({x});
	}
	return out;
}

struct SkewfieldReport
{
	bool containsZeroOne = false;
	bool closedAdd = false;
	bool closedNeg = false;
	bool closedCirc = false;
	bool closedInverse = false;
	bool leftDistributive = false;
	bool rightDistributive = false;
	bool commutative = false;

	bool ok() const
	{
		return containsZeroOne && closedAdd && closedNeg && closedCirc && closedInverse && leftDistributive
			&& rightDistributive;
	}
};

/// Checks that D(R), under + and o, is a skewfield. `distributive` must be sorted.
inline SkewfieldReport VerifyDistributorSkewfield(const Nearfield& nf, const std::vector<Elem>& distributive)
{
	const auto& F = nf.field();
	std::vector<char> in(nf.size(), 0);
	for (Elem d : distributive)
		in[d.index] = 1;
	auto member = [&](Elem e) { return in[e.index] != 0; };

	SkewfieldReport r;
	r.containsZeroOne = member(gf::Field::Zero()) && member(gf::Field::One());
	r.closedAdd = r.closedNeg = r.closedCirc = r.closedInverse = true;
	r.leftDistributive = r.rightDistributive = r.commutative = true;
	for (Elem a : distributive) {
		r.closedNeg = r.closedNeg && member(F.neg(a));
		if (a.index != 0)
			r.closedInverse = r.closedInverse && member(nf.circInv(a));
		for (Elem b : distributive) {
			r.closedAdd = r.closedAdd && member(F.add(a, b));
			r.closedCirc = r.closedCirc && member(nf.circ(a, b));
			r.commutative = r.commutative && nf.circ(a, b) == nf.circ(b, a);
			for (Elem c : distributive) {
				r.leftDistributive = r.leftDistributive && nf.circ(a, F.add(b, c)) == F.add(nf.circ(a, b), nf.circ(a, c));
				r.rightDistributive = r.rightDistributive && RightDistributes(nf, b, c, a);
			}
		}
	}
	return r;
}

struct VectorSpaceReport
{
	bool scalarDistributesOverVectors = false; // a o (u + v) = a o u + a o v
	bool vectorDistributesOverScalars = false; // (a + b) o v = a o v + b o v
	bool compatible = false;                   // (a o b) o v = a o (b o v)
	bool unit = false;                         // 1 o v = v
	unsigned dimension = 0;                    // |R| = |D|^dimension, 0 if not a power
	bool dimensionMatchesN = false;

	bool ok() const
	{
		return scalarDistributesOverVectors && vectorDistributesOverScalars && compatible && unit && dimensionMatchesN;
	}
};

/// Left vector-space axioms for R over the scalars `distributive`, acting by o.
inline VectorSpaceReport VerifyVectorSpace(const Nearfield& nf, const std::vector<Elem>& distributive)
{
	const auto& F = nf.field();
	const std::uint32_t size = nf.size();
	VectorSpaceReport r;
	r.scalarDistributesOverVectors = r.vectorDistributesOverScalars = r.compatible = r.unit = true;

	for (std::uint32_t v = 0; v < size; ++v)
		r.unit = r.unit && nf.circ(gf::Field::One(), {v}) == Elem{v};

	for (Elem a : distributive) {
		for (std::uint32_t u = 0; u < size; ++u)
			for (std::uint32_t v = 0; v < size; ++v)
				r.scalarDistributesOverVectors = r.scalarDistributesOverVectors
					&& nf.circ(a, F.add({u}, {v})) == F.add(nf.circ(a, {u}), nf.circ(a, {v}));
		for (Elem b : distributive)
			for (std::uint32_t v = 0; v < size; ++v) {
				r.vectorDistributesOverScalars = r.vectorDistributesOverScalars && RightDistributes(nf, a, b, {v});
				r.compatible = r.compatible && nf.circ(nf.circ(a, b), {v}) == nf.circ(a, nf.circ(b, {v}));
			}
	}

	const std::uint64_t d = distributive.size();
	if (d >= 2) {
		std::uint64_t power = 1;
		unsigned dim = 0;
		while (power < size) {
			power *= d;
			++dim;
		}
		if (power == size)
			r.dimension = dim;
	}
	r.dimensionMatchesN = r.dimension == nf.n();
	return r;
}

/// Relations of the metacyclic group (R*, o) with a = g^n and b = g:
/// a^m = 1, b^n = a^t, b o a = a^q o b, where m = (q^n - 1)/n, t = m/(q - 1).
struct PresentationReport
{
	std::uint64_t mExp = 0;
	std::uint64_t tExp = 0;
	Elem a, b;
	bool aPowMIsOne = false;
	bool bPowNEqualsAPowT = false;
	bool commutation = false;
	bool bPowMEqualsAPowT = false; // informational: the relation as printed with exponent m on b

	bool relationsHold() const { return aPowMIsOne && bPowNEqualsAPowT && commutation; }
};

inline PresentationReport VerifyPresentation(const Nearfield& nf)
{
	const auto& F = nf.field();
	PresentationReport r;
	const std::uint64_t groupOrder = F.order();
	r.mExp = groupOrder / nf.n();
	r.tExp = r.mExp / (nf.q() - 1);
	r.a = F.exp(nf.n());
	r.b = nf.generator();

	const Elem one = gf::Field::One();
	Elem aT = nf.circPow(r.a, r.tExp);
	r.aPowMIsOne = nf.circPow(r.a, r.mExp) == one;
	r.bPowNEqualsAPowT = nf.circPow(r.b, nf.n()) == aT;
	r.commutation = nf.circ(r.b, r.a) == nf.circ(nf.circPow(r.a, nf.q()), r.b);
	r.bPowMEqualsAPowT = nf.circPow(r.b, r.mExp) == aT;
	return r;
}

} // namespace nearfield
