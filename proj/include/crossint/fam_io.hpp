#pragma once

// The `.fam` text format, bit-exact:
//
//   n 4
//   A: 1,2
//   A: -          <- the empty set
//   %%
//   B: 1
//   ell 1
//
// Line 1 is `n <int>`; members follow one per line with 1-based, strictly
// ascending, comma-separated elements. A pair file has an A-block, `%%`, a
// B-block, and an `ell <int>` trailer. LF endings, no trailing whitespace.
// Members must appear in ascending numeric mask order (the canonical
// encoding); the reader rejects anything else, so read∘write is identity.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "crossint/family.hpp"

namespace crossint {

struct FamFormatError : std::runtime_error {
    explicit FamFormatError(const std::string& what) : std::runtime_error(what) {}
};

std::string encode_family(const Family& f);
std::string encode_pair(const CrossPair& p);

Family decode_family(const std::string& text);
CrossPair decode_pair(const std::string& text);

Family read_family_file(const std::string& path);
CrossPair read_pair_file(const std::string& path);
void write_pair_file(const std::string& path, const CrossPair& p);

}  // namespace crossint
