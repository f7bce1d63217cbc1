#include <json.hpp>

#include "dnacodec/dna.hpp"
#include "dnacodec/errors.hpp"
#include "dnacodec/io.hpp"

namespace dnacodec {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

std::string get_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw ParseError(std::string("JSON: expected string field \"") + key + "\"");
  return j[key].get<std::string>();
}

Extension parse_mode(const json& j) {
  std::string m = j.value("mode", "antimorphic");
  if (m == "morphic") return Extension::morphic;
  if (m == "antimorphic") return Extension::antimorphic;
  throw ParseError("theta mode must be morphic or antimorphic, got \"" + m + "\"");
}

Permutation theta_from(const json& j, const std::optional<Alphabet>& alphabet) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "dna-delta") {
      if (alphabet && !(*alphabet == Alphabet::dna()))
        throw DomainError("dna-delta is defined over ACGT, not {" + alphabet->symbols() + "}");
      return Permutation::dna_involution();
    }
    if (!alphabet) throw ParseError("theta \"" + s + "\" needs an alphabet");
    if (s == "identity") return Permutation::identity(*alphabet);
    if (s == "mirror") return Permutation::mirror(*alphabet);
    throw ParseError("unknown theta \"" + s + "\"");
  }
  if (!j.is_object()) throw ParseError("theta must be a string or an object");
  Extension ext = parse_mode(j);
  if (j.contains("images")) {
    std::string images = get_string(j, "images");
    Alphabet al = j.contains("alphabet") ? Alphabet(get_string(j, "alphabet"))
                  : alphabet               ? *alphabet
                                           : throw ParseError("theta images need an alphabet");
    return Permutation::from_images(al, images, ext);
  }
  if (!j.contains("table") || !j["table"].is_object()) throw ParseError("theta needs a \"table\" or \"images\" field");
  const json& table = j["table"];
  std::string keys;
  for (auto it = table.begin(); it != table.end(); ++it) {
    if (it.key().size() != 1 || !it.value().is_string() || it.value().get<std::string>().size() != 1)
      throw ParseError("theta table entries map one symbol to one symbol");
    keys += it.key();
  }
  Alphabet al = j.contains("alphabet") ? Alphabet(get_string(j, "alphabet")) : alphabet ? *alphabet : Alphabet(keys);
  std::string images;
  for (char c : al.symbols()) {
    std::string k(1, c);
    if (!table.contains(k)) throw DomainError("theta table has no image for '" + k + "'");
    images += table[k].get<std::string>();
  }
  if (table.size() != al.size()) throw DomainError("theta table has symbols outside the alphabet");
  return Permutation::from_images(al, images, ext);
}

json theta_json(const Permutation& t) {
  if (t == Permutation::dna_involution()) return "dna-delta";
  json table = json::object();
  for (char c : t.alphabet().symbols()) table[std::string(1, c)] = std::string(1, t.map_char(c));
  return json{{"alphabet", t.alphabet().symbols()},
              {"table", table},
              {"mode", t.antimorphic() ? "antimorphic" : "morphic"}};
}

PropertyKind parse_kind(const std::string& s) {
  if (s == "S") return PropertyKind::S;
  if (s == "W") return PropertyKind::W;
  throw ParseError("kind must be S or W, got \"" + s + "\"");
}

TransducerClass parse_class(const std::string& s) {
  if (s == "unrestricted") return TransducerClass::unrestricted;
  if (s == "altering") return TransducerClass::theta_input_altering;
  if (s == "preserving") return TransducerClass::theta_input_preserving;
  throw ParseError("class must be unrestricted, altering or preserving, got \"" + s + "\"");
}

// The alphabet a descriptor is over, when it can be told without the transducer.
std::optional<Alphabet> declared_alphabet(const json& j) {
  if (j.contains("alphabet")) return Alphabet(get_string(j, "alphabet"));
  if (j.contains("theta")) {
    const json& t = j["theta"];
    if (t.is_string() && t.get<std::string>() == "dna-delta") return Alphabet::dna();
    if (t.is_object() && t.contains("alphabet")) return Alphabet(get_string(t, "alphabet"));
    if (t.is_object() && t.contains("table") && t["table"].is_object()) {
      std::string keys;
      for (auto it = t["table"].begin(); it != t["table"].end(); ++it) keys += it.key();
      return Alphabet(keys);
    }
  }
  return std::nullopt;
}

Transducer fado_transducer(const std::string& s, const std::optional<Alphabet>& al,
                           const std::filesystem::path& base_dir) {
  std::string text = s;
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || s[first] != '@') {
    std::filesystem::path p(s);
    if (p.is_relative()) p = base_dir / p;
    text = read_file(p);
  }
  Transducer t = parse_fado_transducer(text, std::nullopt, true);
  if (al) return t.rebased(*al);
  return t;
}

}  // namespace

Permutation parse_theta(std::string_view json_text, const std::optional<Alphabet>& alphabet) {
  return theta_from(parse_json(json_text), alphabet);
}

std::string theta_to_json(const Permutation& theta) { return theta_json(theta).dump(); }

PropertyDescriptor parse_descriptor(std::string_view json_text, const std::filesystem::path& base_dir) {
  json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("descriptor must be a JSON object");
  if (!j.contains("transducer")) throw ParseError("descriptor needs a \"transducer\" field");
  std::optional<Alphabet> al = declared_alphabet(j);
  const json& tj = j["transducer"];

  std::optional<PropertyDescriptor> built;
  if (tj.is_object()) {
    if (tj.contains("trajectory")) {
      const json& tr = tj["trajectory"];
      TrajectoryPair pair{get_string(tr, "e1"), get_string(tr, "e2"), tr.value("strict", true)};
      if (!j.contains("theta")) throw ParseError("trajectory descriptors need a theta");
      built = compile_trajectory_property(pair, theta_from(j["theta"], al));
    } else if (tj.contains("dna")) {
      const json& d = tj["dna"];
      Permutation theta = j.contains("theta") ? theta_from(j["theta"], al ? al : Alphabet::dna())
                                              : Permutation::dna_involution();
      DnaVariant variant = parse_dna_variant(d.value("variant", "strict"));
      if (d.contains("pattern"))
        built = dna_pattern_property(get_string(d, "pattern"), variant, theta);
      else
        built = dna_property(get_string(d, "name"), variant, theta);
    } else if (tj.contains("hamming")) {
      Permutation theta = j.contains("theta") ? theta_from(j["theta"], al ? al : Alphabet::dna())
                                              : Permutation::dna_involution();
      built = hamming_property(tj["hamming"].value("min_len_2", false), theta);
    } else {
      throw ParseError("transducer object must hold \"trajectory\", \"dna\" or \"hamming\"");
    }
  } else if (tj.is_string()) {
    Transducer t = fado_transducer(tj.get<std::string>(), al, base_dir);
    if (!j.contains("theta")) throw ParseError("descriptor needs a \"theta\" field");
    Permutation theta = theta_from(j["theta"], al ? al : t.alphabet());
    if (!(theta.alphabet() == t.alphabet())) t = t.rebased(theta.alphabet());
    built = PropertyDescriptor{std::move(t), theta, PropertyKind::S, TransducerClass::unrestricted, ""};
  } else {
    throw ParseError("\"transducer\" must be a string or an object");
  }

  PropertyDescriptor p = std::move(*built);
  if (j.contains("kind")) p.kind = parse_kind(get_string(j, "kind"));
  if (j.contains("class")) p.asserted_class = parse_class(get_string(j, "class"));
  if (j.contains("name")) p.name = get_string(j, "name");
  return p;
}

PropertyDescriptor load_descriptor(const std::filesystem::path& path) {
  return parse_descriptor(read_file(path), path.has_parent_path() ? path.parent_path() : ".");
}

std::string descriptor_to_json(const PropertyDescriptor& p) {
  json j;
  j["kind"] = to_string(p.kind);
  j["class"] = to_string(p.asserted_class);
  j["alphabet"] = p.alphabet().symbols();
  j["theta"] = theta_json(p.theta);
  j["transducer"] = to_fado(normalize(p.transducer));
  if (!p.name.empty()) j["name"] = p.name;
  return j.dump(2);
}

PcpInstance parse_pcp(std::string_view json_text) {
  json j = parse_json(json_text);
  if (!j.contains("alpha") || !j.contains("beta") || !j["alpha"].is_array() || !j["beta"].is_array())
    throw ParseError("PCP instance needs \"alpha\" and \"beta\" arrays");
  std::vector<Word> a = j["alpha"].get<std::vector<Word>>();
  std::vector<Word> b = j["beta"].get<std::vector<Word>>();
  Alphabet al = [&] {
    if (j.contains("alphabet")) return Alphabet(get_string(j, "alphabet"));
    std::set<char> seen;
    for (const auto& w : a) seen.insert(w.begin(), w.end());
    for (const auto& w : b) seen.insert(w.begin(), w.end());
    if (seen.empty()) throw ParseError("PCP instance: cannot infer an alphabet");
    return Alphabet(std::string(seen.begin(), seen.end()));
  }();
  return PcpInstance(al, std::move(a), std::move(b));
}

std::optional<Permutation> parse_pcp_theta(std::string_view json_text) {
  json j = parse_json(json_text);
  if (!j.contains("theta")) return std::nullopt;
  std::optional<Alphabet> al;
  if (j.contains("alphabet")) al = Alphabet(get_string(j, "alphabet"));
  return theta_from(j["theta"], al);
}

std::string pcp_to_json(const PcpInstance& p, const std::optional<Permutation>& theta) {
  json j;
  j["alphabet"] = p.alphabet.symbols();
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  if (theta) j["theta"] = theta_json(*theta);
  return j.dump(2);
}

}  // namespace dnacodec
