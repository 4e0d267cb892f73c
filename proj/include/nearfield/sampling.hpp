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

#include <cstdint>
#include <random>

namespace nearfield {

/// Portable seeded stream for sampled checks: MT19937-64 (as standardised in
/// C++11, default tempering) seeded with the 64-bit seed, reduced to a range
/// by plain `% bound`. std::uniform_int_distribution is avoided because its
/// output is implementation-defined.
class SampleStream
{
public:
	explicit SampleStream(std::uint64_t seed) : _engine(seed) {}

	std::uint64_t next() { return _engine(); }

	std::uint32_t below(std::uint32_t bound) { return std::uint32_t(_engine() % bound); }

private:
	std::mt19937_64 _engine;
};

} // namespace nearfield
