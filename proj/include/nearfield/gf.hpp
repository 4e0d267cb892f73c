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
#include "numth.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nearfield::gf {

inline constexpr std::uint32_t kDefaultSizeCap = 8192;

/// Polynomial over F_p, lowest degree first, no trailing zeros.
class Poly
{
public:
	Poly() = default;
	Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : _p(p), _coeffs(std::move(coeffs))
	{
		for (auto& c : _coeffs)
			c %= _p;
		trim();
	}

	static Poly Monomial(std::uint32_t p, unsigned degree, std::uint32_t coeff = 1)
	{
		std::vector<std::uint32_t> c(degree + 1, 0);
		c[degree] = coeff;
		return Poly(p, std::move(c));
	}

	std::uint32_t p() const { return _p; }
	const std::vector<std::uint32_t>& coeffs() const { return _coeffs; }
	bool isZero() const { return _coeffs.empty(); }
	int degree() const { return int(_coeffs.size()) - 1; }
	std::uint32_t lead() const { return _coeffs.empty() ? 0 : _coeffs.back(); }
	bool isMonic() const { return lead() == 1; }
	std::uint32_t operator[](std::size_t i) const { return i < _coeffs.size() ? _coeffs[i] : 0; }

	bool operator==(const Poly&) const = default;

	Poly operator+(const Poly& o) const
	{
		std::vector<std::uint32_t> c(std::max(_coeffs.size(), o._coeffs.size()), 0);
		for (std::size_t i = 0; i < c.size(); ++i)
			c[i] = ((*this)[i] + o[i]) % _p;
		return Poly(_p, std::move(c));
	}

	Poly operator*(const Poly& o) const
	{
		if (isZero() || o.isZero())
			return Poly(_p, {});
		std::vector<std::uint64_t> c(_coeffs.size() + o._coeffs.size() - 1, 0);
		for (std::size_t i = 0; i < _coeffs.size(); ++i)
			for (std::size_t j = 0; j < o._coeffs.size(); ++j)
				c[i + j] = (c[i + j] + std::uint64_t(_coeffs[i]) * o._coeffs[j]) % _p;
		return Poly(_p, std::vector<std::uint32_t>(c.begin(), c.end()));
	}

	/// Remainder modulo a monic divisor.
	Poly operator%(const Poly& divisor) const
	{
		if (!divisor.isMonic())
			throw Error(ErrorKind::NonMonic, "polynomial division requires a monic divisor");
		std::vector<std::uint64_t> r(_coeffs.begin(), _coeffs.end());
		const int dd = divisor.degree();
		for (int i = int(r.size()) - 1; i >= dd; --i) {
			std::uint64_t c = r[i] % _p;
			if (c == 0)
				continue;
			for (int j = 0; j <= dd; ++j)
				r[i - dd + j] = (r[i - dd + j] + (_p - c) * divisor._coeffs[j]) % _p;
		}
		r.resize(std::min<std::size_t>(r.size(), std::size_t(dd)));
		return Poly(_p, std::vector<std::uint32_t>(r.begin(), r.end()));
	}

	/// Ascending-power text, e.g. "2+3x+x^2"; the zero polynomial prints as "0".
	std::string toString() const
	{
		if (isZero())
			return "0";
		std::string s;
		for (std::size_t i = 0; i < _coeffs.size(); ++i) {
			auto c = _coeffs[i];
			if (c == 0)
				continue;
			if (!s.empty())
				s += '+';
			if (i == 0 || c != 1)
				s += std::to_string(c);
			if (i >= 1)
				s += 'x';
			if (i >= 2)
				s += '^' + std::to_string(i);
		}
		return s;
	}

private:
	void trim()
	{
		while (!_coeffs.empty() && _coeffs.back() == 0)
			_coeffs.pop_back();
	}

	std::uint32_t _p = 2;
	std::vector<std::uint32_t> _coeffs;
};

/// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool IsIrreducible(const Poly& f)
{
	if (!f.isMonic())
		throw Error(ErrorKind::NonMonic, "irreducibility test requires a monic polynomial");
	if (f.degree() < 1)
		throw Error(ErrorKind::InvalidInput, "irreducibility test requires degree >= 1");
	const std::uint32_t p = f.p();
	for (int d = 1; 2 * d <= f.degree(); ++d) {
		std::vector<std::uint32_t> c(d + 1, 0);
		c[d] = 1;
		// odometer over the d low coefficients
		while (true) {
			if ((f % Poly(p, c)).isZero())
				return false;
			int i = 0;
			while (i < d && ++c[i] == p)
				c[i++] = 0;
			if (i == d)
				break;
		}
	}
	return true;
}

/// Lexicographically smallest monic irreducible of degree m, comparing the
/// coefficient vector from the constant term upward.
inline Poly FindIrreducible(std::uint32_t p, unsigned m)
{
	if (m < 1)
		throw Error(ErrorKind::InvalidInput, "degree must be >= 1");
	std::vector<std::uint32_t> c(m + 1, 0);
	c[m] = 1;
	while (true) {
		Poly f(p, c);
		if (IsIrreducible(f))
			return f;
		// constant term is the most significant digit
		int i = int(m) - 1;
		while (i >= 0 && ++c[i] == p)
			c[i--] = 0;
		if (i < 0)
			throw Error(ErrorKind::DomainError, "no irreducible polynomial found");
	}
}

/// Element of a finite field: the base-p digit encoding of its coefficient
/// vector (digit i is the coefficient of x^i). 0 is zero, 1 is the unit.
struct Elem
{
	std::uint32_t index = 0;

	constexpr auto operator<=>(const Elem&) const = default;
};

struct FieldOptions
{
	std::optional<Poly> modulus;
	std::optional<Elem> generator;
	std::uint32_t sizeCap = kDefaultSizeCap;
};

/// F_{p^m} in polynomial basis with exp/log/Zech tables.
class Field
{
public:
	using Options = FieldOptions;

	static Field Build(std::uint32_t p, unsigned m, const Options& opt = {})
	{
		if (!numth::IsPrime(p))
			throw Error(ErrorKind::InvalidInput, "characteristic " + std::to_string(p) + " is not prime");
		if (m < 1)
			throw Error(ErrorKind::InvalidInput, "extension degree must be >= 1");
		std::uint64_t size = 1;
		for (unsigned i = 0; i < m; ++i) {
			size *= p;
			if (size > opt.sizeCap)
				throw Error(ErrorKind::SizeCapExceeded, "field of order " + std::to_string(p) + "^" + std::to_string(m)
					+ " exceeds the size cap " + std::to_string(opt.sizeCap));
		}

		Field f;
		f._p = p;
		f._m = m;
		f._size = std::uint32_t(size);
		f._order = f._size - 1;
		if (opt.modulus) {
			const Poly& mod = *opt.modulus;
			if (mod.p() != p || mod.degree() != int(m))
				throw Error(ErrorKind::InvalidInput, "modulus must have degree " + std::to_string(m) + " over F_" + std::to_string(p));
			if (!mod.isMonic())
				throw Error(ErrorKind::NonMonic, "modulus must be monic");
			if (!IsIrreducible(mod))
				throw Error(ErrorKind::ReducibleModulus, "modulus " + mod.toString() + " is reducible over F_" + std::to_string(p));
			f._modulus = mod;
		} else {
			f._modulus = FindIrreducible(p, m);
		}

		f._pow.resize(m + 1);
		f._pow[0] = 1;
		for (unsigned i = 1; i <= m; ++i)
			f._pow[i] = f._pow[i - 1] * p;

		if (opt.generator) {
			if (opt.generator->index >= f._size)
				throw Error(ErrorKind::InvalidInput, "generator index out of range");
			f._generator = *opt.generator;
			if (!f.hasFullOrder(f._generator))
				throw Error(ErrorKind::NotAGenerator, f.toString(f._generator) + " does not generate the multiplicative group");
		} else {
			f._generator = f.canonicalGenerator();
		}
		f.buildTables();
		return f;
	}

	std::uint32_t p() const { return _p; }
	unsigned m() const { return _m; }
	std::uint32_t size() const { return _size; }
	/// Order of the multiplicative group, p^m - 1.
	std::uint32_t order() const { return _order; }
	const Poly& modulus() const { return _modulus; }
	Elem generator() const { return _generator; }

	static constexpr Elem Zero() { return {0}; }
	static constexpr Elem One() { return {1}; }

	Elem add(Elem a, Elem b) const
	{
		if (a.index == 0)
			return b;
		if (b.index == 0)
			return a;
		std::uint32_t la = _log[a.index], lb = _log[b.index];
		std::uint32_t d = lb >= la ? lb - la : lb + _order - la;
		std::uint32_t z = _zech[d];
		if (z == kNoLog)
			return Zero();
		return {_exp[la + z]};
	}

	Elem neg(Elem a) const { return {_neg[a.index]}; }
	Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

	Elem mul(Elem a, Elem b) const
	{
		if (a.index == 0 || b.index == 0)
			return Zero();
		return {_exp[_log[a.index] + _log[b.index]]};
	}

	Elem inv(Elem a) const
	{
		if (a.index == 0)
			throw Error(ErrorKind::DivisionByZero, "inverse of zero");
		std::uint32_t l = _log[a.index];
		return {_exp[l == 0 ? 0 : _order - l]};
	}

	Elem pow(Elem a, std::uint64_t e) const
	{
		if (a.index == 0)
			return e == 0 ? One() : Zero();
		return exp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(_log[a.index]) * e) % _order));
	}

	/// a^(p^i); i is taken mod m.
	Elem frobenius(Elem a, std::uint64_t i) const { return {_frob[(i % _m) * _size + a.index]}; }

	std::uint32_t dlog(Elem a) const
	{
		if (a.index == 0)
			throw Error(ErrorKind::DomainError, "discrete log of zero");
		return _log[a.index];
	}

	/// g^e for any e >= 0.
	Elem exp(std::uint64_t e) const { return {_exp[e % _order]}; }

	std::vector<std::uint32_t> coeffs(Elem a) const
	{
		std::vector<std::uint32_t> c;
		for (std::uint32_t v = a.index; v != 0; v /= _p)
			c.push_back(v % _p);
		return c;
	}

	Poly toPoly(Elem a) const { return Poly(_p, coeffs(a)); }

	Elem fromCoeffs(std::span<const std::uint32_t> c) const
	{
		Poly reduced = Poly(_p, std::vector<std::uint32_t>(c.begin(), c.end())) % _modulus;
		return fromPoly(reduced);
	}

	Elem fromPoly(const Poly& reduced) const
	{
		std::uint32_t idx = 0;
		for (int i = reduced.degree(); i >= 0; --i)
			idx = idx * _p + reduced[i];
		return {idx};
	}

	std::string toString(Elem a) const { return toPoly(a).toString(); }

	/// Coefficient-wise addition, independent of the Zech tables.
	Elem addDigitwise(Elem a, Elem b) const
	{
		std::uint32_t r = 0;
		for (unsigned i = 0; i < _m; ++i) {
			std::uint32_t da = a.index / _pow[i] % _p, db = b.index / _pow[i] % _p;
			r += (da + db) % _p * _pow[i];
		}
		return {r};
	}

	/// Multiplication through polynomial arithmetic, independent of the log tables.
	Elem mulPoly(Elem a, Elem b) const { return fromPoly((toPoly(a) * toPoly(b)) % _modulus); }

	/// All elements, in index order.
	std::vector<Elem> elements() const
	{
		std::vector<Elem> v(_size);
		for (std::uint32_t i = 0; i < _size; ++i)
			v[i] = {i};
		return v;
	}

private:
	static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

	Field() = default;

	Elem powPoly(Elem a, std::uint64_t e) const
	{
		Poly r(_p, {1});
		Poly b = toPoly(a);
		while (e) {
			if (e & 1)
				r = (r * b) % _modulus;
			b = (b * b) % _modulus;
			e >>= 1;
		}
		return fromPoly(r);
	}

	bool hasFullOrder(Elem a) const
	{
		if (a.index == 0)
			return false;
		if (_order == 1)
			return a.index == 1;
		for (const auto& f : numth::Factorize(_order))
			if (powPoly(a, _order / f.prime) == One())
				return false;
		return true;
	}

	Elem canonicalGenerator() const
	{
		for (std::uint32_t i = 1; i < _size; ++i)
			if (hasFullOrder({i}))
				return {i};
		throw Error(ErrorKind::NotAGenerator, "no generator found");
	}

	void buildTables()
	{
		_exp.assign(2 * std::size_t(_order), 0);
		_log.assign(_size, kNoLog);
		Poly g = toPoly(_generator);
		Poly cur(_p, {1});
		for (std::uint32_t e = 0; e < _order; ++e) {
			Elem x = fromPoly(cur);
			if (_log[x.index] != kNoLog)
				throw Error(ErrorKind::NotAGenerator, "generator power cycle is shorter than p^m - 1");
			_exp[e] = _exp[e + _order] = x.index;
			_log[x.index] = e;
			cur = (cur * g) % _modulus;
		}

		_neg.resize(_size);
		for (std::uint32_t i = 0; i < _size; ++i) {
			std::uint32_t r = 0;
			for (unsigned j = 0; j < _m; ++j) {
				std::uint32_t d = i / _pow[j] % _p;
				r += (_p - d) % _p * _pow[j];
			}
			_neg[i] = r;
		}

		// zech[e] = log(1 + g^e), or kNoLog when 1 + g^e = 0
		_zech.assign(_order, kNoLog);
		for (std::uint32_t e = 0; e < _order; ++e) {
			Elem s = addDigitwise(One(), {_exp[e]});
			_zech[e] = s.index == 0 ? kNoLog : _log[s.index];
		}

		_frob.assign(std::size_t(_m) * _size, 0);
		for (unsigned i = 0; i < _m; ++i) {
			std::uint64_t pi = _pow[i] % _order;
			for (std::uint32_t a = 1; a < _size; ++a)
				_frob[std::size_t(i) * _size + a] = _exp[(_log[a] * pi) % _order];
		}
	}

	std::uint32_t _p = 2;
	unsigned _m = 1;
	std::uint32_t _size = 2;
	std::uint32_t _order = 1;
	Poly _modulus;
	Elem _generator{1};
	std::vector<std::uint32_t> _pow;
	std::vector<std::uint32_t> _exp;
	std::vector<std::uint32_t> _log;
	std::vector<std::uint32_t> _zech;
	std::vector<std::uint32_t> _neg;
	std::vector<std::uint32_t> _frob;
};

/// The fixed set of a -> a^(p^k) inside the field, sorted by index.
inline std::vector<Elem> FixedSet(const Field& f, unsigned k)
{
	std::vector<Elem> out;
	for (std::uint32_t i = 0; i < f.size(); ++i)
		if (f.frobenius({i}, k) == Elem{i})
			out.push_back({i});
	return out;
}

} // namespace nearfield::gf
