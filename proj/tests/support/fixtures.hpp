// SPDX-License-Identifier: Apache-2.0
//
// Shared inline fixtures for the unit tests.

#pragma once

namespace testsupport {

// The stock three-pattern library, identical in content to data/patterns.p.
inline constexpr const char* kStockLibraryText = R"(Seq(f1,f2):
ini= f1 / fin= f2
f1 => <>f2 / ~f1 => ~<>f2
[]~(f1 & f2)

Concur(f1,f2,f3):
ini= f1 / fin= f2 | f3
f1 => <>f2 & <>f3 / ~f1 => ~<>f2 & ~<>f3
[]~(f1 & (f2 | f3))

Branch(f1,f2,f3):
ini= f1 / fin= (f2 & ~f3) | (~f2 & f3)
f1 => (<>f2 & ~<>f3) | (~<>f2 & <>f3)
~f1 => ~<>(f2 | f3)
[]~(f2 & f3) / []~((f1 & f2) | (f1 & f3))
)";

// A compact variant exercising the loader's corner cases: operators written
// without spaces, multiple spaces around a '/' separator, and a Branch whose
// guard references f1 | f2 instead of f2 | f3.  The loader must preserve all
// of it verbatim -- no rewriting, however tempting.
inline constexpr const char* kVariantLibraryText = R"(Seq(f1,f2):
ini= f1 / fin= f2
f1 => <>f2 / ~f1=>~<>f2
[]~(f1 & f2)
Concur(f1,f2,f3):
ini= f1 / fin= f2 | f3
f1 => <>f2 & <>f3  /  ~f1 => ~<>f2 & ~<>f3
[]~(f1 & (f2 | f3))
Branch(f1,f2,f3):
ini= f1 / fin= (f2 & ~f3) | (~f2 & f3)
f1 => (<>f2 & ~<>f3) | (~<>f2 & <>f3)
~f1 => ~<>(f1 | f2)
[]~(f2 & f3) / []~((f1 & f2) | (f1 & f3))
)";

}  // namespace testsupport
