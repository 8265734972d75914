#pragma once

#include <string>

#include "planch/observable.hpp"

namespace planch {

// Parses the observable mini-language used by the CLI:
//
//   spec   := term ('+' term)*
//   term   := '-'? factor ('*' factor)*
//   factor := number | atom
//   number := integer ('/' integer)?
//   atom   := pstar:m | superp:m | content:p(r1,r2,...) | hpsi:p(r1,r2,...)
//           | fmu:parts | fmujack:parts | h:m | hrho:parts | frak:m
//
// Partitions are comma-separated parts; an empty list denotes the empty
// diagram (e.g. "fmu:" is the constant 1). Number factors scale their term,
// so anything Observable::spec_str produces parses back. Whitespace is
// allowed around '+' and '*'. Throws usage_error naming the offending token.
Observable parse_observable(const std::string& spec);

}  // namespace planch
