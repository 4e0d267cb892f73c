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

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace nearfield::numth {

inline constexpr std::uint64_t kFactorizeLimit = std::uint64_t(1) << 40;

struct PrimeFactor
{
	std::uint64_t prime;
	unsigned exponent;

	bool operator==(const PrimeFactor&) const = default;
};

/// Prime factorization, primes strictly increasing.
using Factorization = std::vector<PrimeFactor>;

inline bool IsPrime(std::uint64_t n)
{
	if (n < 2)
		return false;
	if (n % 2 == 0)
		return n == 2;
	for (std::uint64_t d = 3; d * d <= n; d += 2)
		if (n % d == 0)
			return false;
	return true;
}

/// Trial division; 1 <= m <= 2^40.
inline Factorization Factorize(std::uint64_t m)
{
	if (m < 1 || m > kFactorizeLimit)
		throw Error(ErrorKind::OutOfRange, "factorize: argument must be in [1, 2^40], got " + std::to_string(m));
	Factorization out;
	for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
		if (m % d != 0)
			continue;
		unsigned e = 0;
		while (m % d == 0) {
			m /= d;
			++e;
		}
		out.push_back({d, e});
	}
	if (m > 1)
		out.push_back({m, 1});
	return out;
}

inline std::uint64_t Multiply(const Factorization& f)
{
	std::uint64_t r = 1;
	for (const auto& [prime, exponent] : f)
		for (unsigned i = 0; i < exponent; ++i)
			r *= prime;
	return r;
}

struct PrimePower
{
	std::uint64_t p;
	unsigned l;

	bool operator==(const PrimePower&) const = default;
};

inline std::optional<PrimePower> AsPrimePower(std::uint64_t q)
{
	if (q < 2 || q > kFactorizeLimit)
		return std::nullopt;
	auto f = Factorize(q);
	if (f.size() != 1)
		return std::nullopt;
	return PrimePower{f[0].prime, f[0].exponent};
}

/// Which clause of the Dickson-pair definition failed.
enum class DicksonCondition {
	None,
	PrimePower,       // (i)   q = p^l
	PrimeDivisors,    // (ii)  every prime divisor of n divides q - 1
	ThreeModFour,     // (iii) q = 3 mod 4 forbids 4 | n
};

inline const char* ToString(DicksonCondition c)
{
	switch (c) {
	case DicksonCondition::None: return "none";
	case DicksonCondition::PrimePower: return "(i)";
	case DicksonCondition::PrimeDivisors: return "(ii)";
	case DicksonCondition::ThreeModFour: return "(iii)";
	}
	return "?";
}

struct DicksonVerdict
{
	bool valid = false;
	DicksonCondition violated = DicksonCondition::None;

	explicit operator bool() const { return valid; }
};

struct DicksonPair
{
	std::uint64_t p;
	unsigned l;
	std::uint64_t n;
	std::uint64_t q;
};

/// Checks (i), (ii), (iii) in order and reports the first one violated.
/// n = 1 is accepted: the pair describes the field F_q itself.
inline DicksonVerdict CheckDicksonPair(std::uint64_t q, std::uint64_t n)
{
	if (n < 1 || !AsPrimePower(q))
		return {false, DicksonCondition::PrimePower};
	if (n > kFactorizeLimit)
		throw Error(ErrorKind::OutOfRange, "n exceeds 2^40");
	for (const auto& f : Factorize(n))
		if ((q - 1) % f.prime != 0)
			return {false, DicksonCondition::PrimeDivisors};
	if (q % 4 == 3 && n % 4 == 0)
		return {false, DicksonCondition::ThreeModFour};
	return {true, DicksonCondition::None};
}

inline bool IsDicksonPair(std::uint64_t q, std::uint64_t n) { return CheckDicksonPair(q, n).valid; }

inline DicksonPair MakeDicksonPair(std::uint64_t q, std::uint64_t n)
{
	auto v = CheckDicksonPair(q, n);
	if (!v)
		throw Error(ErrorKind::NotADicksonPair, "(" + std::to_string(q) + "," + std::to_string(n)
			+ ") is not a Dickson pair: condition " + ToString(v.violated) + " fails");
	auto pp = *AsPrimePower(q);
	return {pp.p, pp.l, n, q};
}

/// [k]_q = 1 + q + ... + q^(k-1), with [0]_q = 0.
inline std::uint64_t KBracket(std::uint64_t q, unsigned k)
{
	if (q < 2 || k > 64)
		throw Error(ErrorKind::OutOfRange, "k_bracket: need q >= 2 and k <= 64");
	std::uint64_t r = 0;
	for (unsigned i = 0; i < k; ++i) {
		std::uint64_t next;
		if (__builtin_mul_overflow(r, q, &next) || __builtin_add_overflow(next, std::uint64_t(1), &next))
			throw Error(ErrorKind::Overflow, "k_bracket(" + std::to_string(q) + "," + std::to_string(k) + ") overflows 64 bits");
		r = next;
	}
	return r;
}

/// The bijection k -> [k]_q mod n on {0..n-1} and its inverse.
struct CosetLabelMap
{
	std::vector<std::uint64_t> forward; // k -> [k]_q mod n
	std::vector<unsigned> inverse;      // residue -> k
};

inline CosetLabelMap MakeCosetLabelMap(std::uint64_t q, std::uint64_t n)
{
	if (!IsDicksonPair(q, n))
		throw Error(ErrorKind::NotADicksonPair, "coset_label_map requires a Dickson pair");
	CosetLabelMap map;
	map.forward.resize(n);
	map.inverse.assign(n, unsigned(-1));
	// [k+1]_q = q [k]_q + 1, reduced mod n to stay in range for any k.
	std::uint64_t r = 0;
	for (std::uint64_t k = 0; k < n; ++k) {
		map.forward[k] = r;
		if (map.inverse[r] != unsigned(-1))
			throw Error(ErrorKind::NotBijective, "k -> [k]_q mod n is not injective");
		map.inverse[r] = unsigned(k);
		r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * q + 1) % n);
	}
	if (r != 0)
		throw Error(ErrorKind::NotBijective, "[n]_q is not divisible by n");
	return map;
}

inline std::uint64_t PowU64(std::uint64_t base, unsigned exp)
{
	std::uint64_t r = 1;
	for (unsigned i = 0; i < exp; ++i) {
		if (__builtin_mul_overflow(r, base, &r))
			throw Error(ErrorKind::Overflow, "integer power overflows 64 bits");
	}
	return r;
}

} // namespace nearfield::numth
