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


// Library tour: build a nearfield of order 625, take a product, and compute
// a distributive set.

#include "nearfield/dickson.hpp"
#include "nearfield/distrib.hpp"

#include <iostream>

int main()
{
	using namespace nearfield;

	Nearfield::Options opt;
	opt.modulus = gf::Poly(5, {2, 0, 0, 0, 1}); // x^4 + 2
	opt.generator = gf::Elem{2 + 5};            // x + 2, as the index sum c_i 5^i
	auto nf = Nearfield::Build(5, 4, opt);
	const auto& F = nf.field();

	auto alpha = F.fromCoeffs(std::vector<std::uint32_t>{3});
	auto beta = F.fromCoeffs(std::vector<std::uint32_t>{2, 0, 1});
	auto lambda = F.fromCoeffs(std::vector<std::uint32_t>{1, 0, 1});

	std::cout << "(" << F.toString(F.add(alpha, beta)) << ") o (" << F.toString(lambda)
			  << ") = " << F.toString(nf.circ(F.add(alpha, beta), lambda)) << "\n";

	auto report = distrib::AnalyzePair(nf, alpha, beta);
	std::cout << "case " << report.pairCase.label() << ", |D(alpha,beta)| = " << report.set.size()
			  << ", predicted " << report.predicted.label() << "\n";
	std::cout << "|D(R)| = " << DistributiveElements(nf).size() << "\n";
}
