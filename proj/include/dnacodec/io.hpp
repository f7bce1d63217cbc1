#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "dnacodec/pcp.hpp"
#include "dnacodec/property.hpp"

namespace dnacodec {

// FAdo text format.
//
//   @Transducer f1 f2 ... * s1 s2 ...     finals, then initial states
//   p a b q                               edge (a, b) from p to q
//   @NFA f1 ... * s1 ...
//   p a q
//
// Labels are symbols, words of symbols, or @epsilon. Lines starting with
// '#' are comments. When the alphabet is not given it is the sorted set of
// symbols that occur. escaped_newlines accepts a literal backslash-n as a
// line break (for text passed on a command line).
Transducer parse_fado_transducer(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt,
                                 bool escaped_newlines = false);
Nfa parse_fado_nfa(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt,
                   bool escaped_newlines = false);

// Deterministic output: edges sorted by source, labels, target.
std::string to_fado(const Transducer& t);
std::string to_fado(const Nfa& a);

std::string read_file(const std::filesystem::path& path);

// A language file is FAdo (@NFA / @DFA) or a list of words, one per line,
// with @epsilon for the empty word.
Nfa parse_language(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);
Nfa load_language(const std::filesystem::path& path, const std::optional<Alphabet>& alphabet = std::nullopt);

// Property descriptor JSON:
//   { "kind": "S"|"W", "class": "unrestricted"|"altering"|"preserving",
//     "alphabet": "ACGT",
//     "theta": "dna-delta" | "identity" | "mirror"
//              | { "alphabet"?, "table": {"A":"T",...} | "images": "TGCA",
//                  "mode": "morphic"|"antimorphic" },
//     "transducer": "<FAdo text>" | "<path>"
//                   | { "trajectory": { "e1", "e2", "strict" } }
//                   | { "dna": { "name" | "pattern", "variant" } }
//                   | { "hamming": { "min_len_2" } } }
// Relative paths resolve against base_dir.
PropertyDescriptor parse_descriptor(std::string_view json_text, const std::filesystem::path& base_dir = ".");
PropertyDescriptor load_descriptor(const std::filesystem::path& path);
std::string descriptor_to_json(const PropertyDescriptor& p);

Permutation parse_theta(std::string_view json_text, const std::optional<Alphabet>& alphabet = std::nullopt);
std::string theta_to_json(const Permutation& theta);

// { "alpha": [...], "beta": [...], "alphabet"?: "01", "theta"?: ... }
PcpInstance parse_pcp(std::string_view json_text);
std::optional<Permutation> parse_pcp_theta(std::string_view json_text);
std::string pcp_to_json(const PcpInstance& p, const std::optional<Permutation>& theta = std::nullopt);

}  // namespace dnacodec
