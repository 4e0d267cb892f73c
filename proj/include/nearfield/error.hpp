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

#include <stdexcept>
#include <string>

namespace nearfield {

/// Machine-readable error categories. The CLI prints the tag name in its
/// error JSON, so these names are part of the external surface.
enum class ErrorKind {
	OutOfRange,
	Overflow,
	NotBijective,
	NonMonic,
	ReducibleModulus,
	NotAGenerator,
	DivisionByZero,
	DomainError,
	NotADicksonPair,
	SizeCapExceeded,
	TooLarge,
	BudgetExceeded,
	InvalidGroup,
	InvalidInput,
};

inline const char* ToString(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::OutOfRange: return "OutOfRange";
	case ErrorKind::Overflow: return "Overflow";
	case ErrorKind::NotBijective: return "NotBijective";
	case ErrorKind::NonMonic: return "NonMonic";
	case ErrorKind::ReducibleModulus: return "ReducibleModulus";
	case ErrorKind::NotAGenerator: return "NotAGenerator";
	case ErrorKind::DivisionByZero: return "DivisionByZero";
	case ErrorKind::DomainError: return "DomainError";
	case ErrorKind::NotADicksonPair: return "NotADicksonPair";
	case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
	case ErrorKind::TooLarge: return "TooLarge";
	case ErrorKind::BudgetExceeded: return "BudgetExceeded";
	case ErrorKind::InvalidGroup: return "InvalidGroup";
	case ErrorKind::InvalidInput: return "InvalidInput";
	}
	return "Unknown";
}

class Error : public std::runtime_error
{
public:
	Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), _kind(kind) {}

	ErrorKind kind() const noexcept { return _kind; }

private:
	ErrorKind _kind;
};

} // namespace nearfield
