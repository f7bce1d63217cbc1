#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnacodec/property.hpp"

namespace dnacodec {

// strict:  S-kind with the strict machine (all of u, v, x, y may be empty)
// normal:  S-kind with the weak machine (u v x y nonempty)
// weak:    W-kind with the weak machine
enum class DnaVariant { strict, normal, weak };

DnaVariant parse_dna_variant(std::string_view s);
const char* to_string(DnaVariant v);

// Names accepted by dna_property, in a fixed order.
const std::vector<std::string>& dna_property_names();

// Letters of {u, v, x, y} that a named property keeps.
std::string dna_pattern(std::string_view name);

// Property for a subset of {u, v, x, y} given as a string such as "uv".
PropertyDescriptor dna_pattern_property(std::string_view pattern, DnaVariant variant,
                                        const Permutation& theta = Permutation::dna_involution());

// Named property; overhang-free is the union of the 5' and 3' machines.
PropertyDescriptor dna_property(std::string_view name, DnaVariant variant,
                                const Permutation& theta = Permutation::dna_involution());

// Direct edges of the implication hierarchy: (stronger, weaker).
std::vector<std::pair<std::string, std::string>> dna_hierarchy(DnaVariant variant);

// Hamming-distance S-properties: L satisfies H when H(u, theta(v)) >= 2 for
// all u, v in L (words of different length are at distance infinity). With
// min_len_2 every word must also have length at least 2.
PropertyDescriptor hamming_property(bool min_len_2, const Permutation& theta = Permutation::dna_involution());

}  // namespace dnacodec
