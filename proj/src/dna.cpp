#include "dnacodec/dna.hpp"

#include <algorithm>

#include "dnacodec/errors.hpp"

namespace dnacodec {

namespace {

struct Named {
  const char* name;
  const char* pattern;  // "+" marks a union of two patterns
};

const Named kNamed[] = {
    {"nonoverlapping", ""},       {"compliant", "uv"},        {"p-compliant", "v"},
    {"s-compliant", "u"},         {"5-overhang-free", "uy"},  {"3-overhang-free", "vx"},
    {"sticky-free", "vy"},        {"overhang-free", "uy+vx"}, {"generic-top", "uvxy"},
};

struct Pattern {
  bool u = false, v = false, x = false, y = false;
};

Pattern parse_pattern(std::string_view s) {
  Pattern p;
  for (char c : s) {
    switch (c) {
      case 'u': p.u = true; break;
      case 'v': p.v = true; break;
      case 'x': p.x = true; break;
      case 'y': p.y = true; break;
      default: throw DomainError(std::string("pattern letters must be among u, v, x, y; got '") + c + "'");
    }
  }
  return p;
}

void loops(Transducer& t, State s, const Alphabet& al, bool consume, bool emit) {
  for (char c : al.symbols()) {
    std::string a(1, c);
    if (consume) t.add_edge(s, a, "", s);
    if (emit) t.add_edge(s, "", a, s);
  }
}

void letters(Transducer& t, State from, State to, const Alphabet& al, bool consume, bool emit) {
  for (char c : al.symbols()) {
    std::string a(1, c);
    if (consume && emit)
      t.add_edge(from, a, a, to);
    else if (consume)
      t.add_edge(from, a, "", to);
    else if (emit)
      t.add_edge(from, "", a, to);
  }
}

// u w v  ->  x w y, with w nonempty.
Transducer strict_machine(const Pattern& p, const Alphabet& al) {
  Transducer t(al);
  t.add_states(3);
  t.set_initial(0);
  t.set_final(2);
  loops(t, 0, al, p.u, false);
  loops(t, 0, al, false, p.x);
  letters(t, 0, 1, al, true, true);
  for (char c : al.symbols()) t.add_edge(1, std::string(1, c), std::string(1, c), 1);
  t.add_edge(1, "", "", 2);
  loops(t, 2, al, p.v, false);
  loops(t, 2, al, false, p.y);
  return t;
}

// Same relation restricted to u v x y nonempty.
Transducer weak_machine(const Pattern& p, const Alphabet& al) {
  Transducer t(al);
  t.add_states(4);
  t.set_initial(0);
  t.set_final(3);
  loops(t, 0, al, p.u, false);
  loops(t, 0, al, false, p.x);
  // Context on the right: w first, then a forced v or y symbol.
  letters(t, 0, 1, al, true, true);
  for (char c : al.symbols()) t.add_edge(1, std::string(1, c), std::string(1, c), 1);
  letters(t, 1, 3, al, p.v, false);
  letters(t, 1, 3, al, false, p.y);
  // Context on the left: a forced u or x symbol, then w.
  letters(t, 0, 2, al, p.u, false);
  letters(t, 0, 2, al, false, p.x);
  for (char c : al.symbols()) t.add_edge(2, std::string(1, c), std::string(1, c), 2);
  letters(t, 2, 3, al, true, true);
  loops(t, 3, al, p.v, false);
  loops(t, 3, al, false, p.y);
  return t;
}

TransducerClass class_of(const Pattern& p, DnaVariant variant) {
  if (variant == DnaVariant::strict) return TransducerClass::unrestricted;
  bool input_side = p.u || p.v, output_side = p.x || p.y;
  if (input_side != output_side) return TransducerClass::theta_input_altering;
  return TransducerClass::unrestricted;
}

}  // namespace

DnaVariant parse_dna_variant(std::string_view s) {
  if (s == "strict") return DnaVariant::strict;
  if (s == "normal") return DnaVariant::normal;
  if (s == "weak") return DnaVariant::weak;
  throw DomainError("unknown variant '" + std::string(s) + "' (expected strict, normal or weak)");
}

const char* to_string(DnaVariant v) {
  switch (v) {
    case DnaVariant::strict: return "strict";
    case DnaVariant::normal: return "normal";
    case DnaVariant::weak: return "weak";
  }
  return "?";
}

const std::vector<std::string>& dna_property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> r;
    for (const auto& n : kNamed) r.emplace_back(n.name);
    return r;
  }();
  return names;
}

std::string dna_pattern(std::string_view name) {
  for (const auto& n : kNamed)
    if (name == n.name) return n.pattern;
  throw DomainError("unknown DNA property '" + std::string(name) + "'");
}

PropertyDescriptor dna_pattern_property(std::string_view pattern, DnaVariant variant, const Permutation& theta) {
  if (!theta.is_antimorphic_involution())
    throw PreconditionError("DNA properties need theta to be an antimorphic involution");
  Pattern p = parse_pattern(pattern);
  bool none = !p.u && !p.v && !p.x && !p.y;
  if (none && variant != DnaVariant::strict)
    throw DomainError("the empty pattern (nonoverlapping) exists only as a strict property");
  const Alphabet& al = theta.alphabet();
  Transducer t = variant == DnaVariant::strict ? strict_machine(p, al) : weak_machine(p, al);
  PropertyKind kind = variant == DnaVariant::weak ? PropertyKind::W : PropertyKind::S;
  std::string label = "pattern {" + std::string(pattern) + "} " + to_string(variant);
  return PropertyDescriptor{std::move(t), theta, kind, class_of(p, variant), std::move(label)};
}

PropertyDescriptor dna_property(std::string_view name, DnaVariant variant, const Permutation& theta) {
  std::string pat = dna_pattern(name);
  PropertyDescriptor d = [&] {
    auto plus = pat.find('+');
    if (plus == std::string::npos) return dna_pattern_property(pat, variant, theta);
    PropertyDescriptor a = dna_pattern_property(pat.substr(0, plus), variant, theta);
    PropertyDescriptor b = dna_pattern_property(pat.substr(plus + 1), variant, theta);
    a.transducer = unite(a.transducer, b.transducer);
    a.asserted_class = TransducerClass::unrestricted;
    return a;
  }();
  d.name = std::string(name) + " (" + to_string(variant) + ")";
  return d;
}

std::vector<std::pair<std::string, std::string>> dna_hierarchy(DnaVariant variant) {
  std::vector<std::pair<std::string, std::string>> e = {
      {"overhang-free", "3-overhang-free"}, {"overhang-free", "5-overhang-free"},
      {"5-overhang-free", "s-compliant"},   {"sticky-free", "s-compliant"},
      {"sticky-free", "p-compliant"},       {"compliant", "p-compliant"},
      {"compliant", "s-compliant"},         {"3-overhang-free", "p-compliant"},
  };
  if (variant == DnaVariant::strict) {
    e.emplace_back("s-compliant", "nonoverlapping");
    e.emplace_back("p-compliant", "nonoverlapping");
  }
  return e;
}

PropertyDescriptor hamming_property(bool min_len_2, const Permutation& theta) {
  const Alphabet& al = theta.alphabet();
  Transducer t(al);
  auto same = [&](State a, State b) {
    for (char c : al.symbols()) t.add_edge(a, std::string(1, c), std::string(1, c), b);
  };
  auto diff = [&](State a, State b) {
    for (char c : al.symbols())
      for (char d : al.symbols())
        if (c != d) t.add_edge(a, std::string(1, c), std::string(1, d), b);
  };
  if (!min_len_2) {
    t.add_states(2);
    t.set_initial(0);
    t.set_final(0);
    t.set_final(1);
    same(0, 0);
    diff(0, 1);
    same(1, 1);
  } else {
    t.add_states(4);
    t.set_initial(0);
    for (State s = 0; s < 4; ++s) t.set_final(s);
    same(0, 1);
    same(0, 2);
    diff(0, 3);
    diff(2, 3);
    same(2, 2);
    same(3, 3);
  }
  return PropertyDescriptor{std::move(t), theta, PropertyKind::S, TransducerClass::unrestricted,
                            min_len_2 ? "H2" : "H"};
}

}  // namespace dnacodec
