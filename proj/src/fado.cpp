#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "dnacodec/errors.hpp"
#include "dnacodec/io.hpp"

namespace dnacodec {

namespace {

constexpr std::string_view kEps = "@epsilon";

std::string unescape(std::string_view text, bool escaped_newlines) {
  std::string s(text);
  if (!escaped_newlines) return s;
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
      out.push_back('\n');
      ++i;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tok;
  std::string t;
  while (in >> t) tok.push_back(t);
  return tok;
}

struct RawMachine {
  std::string kind;  // "Transducer", "NFA", "DFA"
  std::vector<std::string> finals, initials;
  bool has_star = false;
  std::vector<std::vector<std::string>> edges;
  std::vector<std::size_t> edge_lines;
};

RawMachine read_raw(std::string_view text0, bool escaped_newlines) {
  std::string text = unescape(text0, escaped_newlines);
  std::istringstream in(text);
  std::string line;
  RawMachine m;
  bool header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    for (const auto& t : tok)
      if (t.find('\\') != std::string::npos)
        throw ParseError("FAdo line " + std::to_string(lineno) + ": stray backslash in '" + t +
                         "' (literal \\n is only accepted for command-line text)");
    if (!header) {
      if (tok[0] != "@Transducer" && tok[0] != "@NFA" && tok[0] != "@DFA")
        throw ParseError("FAdo line " + std::to_string(lineno) + ": expected @Transducer, @NFA or @DFA header");
      m.kind = tok[0].substr(1);
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "*") {
          if (m.has_star) throw ParseError("FAdo header: more than one '*'");
          m.has_star = true;
        } else {
          (m.has_star ? m.initials : m.finals).push_back(tok[i]);
        }
      }
      header = true;
      continue;
    }
    if (tok[0][0] == '@') throw ParseError("FAdo line " + std::to_string(lineno) + ": a file holds one machine");
    m.edges.push_back(tok);
    m.edge_lines.push_back(lineno);
  }
  if (!header) throw ParseError("FAdo: missing header");
  if (m.has_star && m.initials.empty()) throw ParseError("FAdo header: no initial state after '*'");
  if (!m.has_star && m.kind != "DFA") throw ParseError("FAdo header: missing '*' before the initial states");
  return m;
}

// State tokens: integers are used as ids; other names are numbered in
// order of first appearance.
class StateTable {
 public:
  explicit StateTable(const RawMachine& m) {
    std::vector<std::string> all = m.finals;
    all.insert(all.end(), m.initials.begin(), m.initials.end());
    for (const auto& e : m.edges) {
      all.push_back(e.front());
      all.push_back(e.back());
    }
    numeric_ = std::all_of(all.begin(), all.end(), [](const std::string& s) {
      return !s.empty() && s.size() < 9 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    });
    for (const auto& s : all) {
      if (numeric_) {
        count_ = std::max<std::size_t>(count_, std::stoul(s) + 1);
      } else if (!names_.count(s)) {
        names_[s] = static_cast<State>(names_.size());
      }
    }
    if (!numeric_) count_ = names_.size();
  }
  std::size_t count() const { return std::max<std::size_t>(count_, 1); }
  State id(const std::string& s) const { return numeric_ ? static_cast<State>(std::stoul(s)) : names_.at(s); }

 private:
  bool numeric_ = true;
  std::size_t count_ = 0;
  std::map<std::string, State> names_;
};

Alphabet infer_alphabet(const RawMachine& m, std::size_t first_label, std::size_t labels) {
  std::set<char> seen;
  for (const auto& e : m.edges)
    for (std::size_t i = first_label; i < first_label + labels && i < e.size(); ++i)
      if (e[i] != kEps)
        for (char c : e[i]) seen.insert(c);
  // A machine without labels gets the empty alphabet.
  if (seen.empty()) return Alphabet();
  return Alphabet(std::string(seen.begin(), seen.end()));
}

std::string label_word(const std::string& tok) { return tok == kEps ? std::string() : tok; }

std::string label_token(std::string_view w) { return w.empty() ? std::string(kEps) : std::string(w); }

std::string state_list(const std::vector<State>& v) {
  std::string s;
  for (State x : v) s += " " + std::to_string(x);
  return s;
}

}  // namespace

Transducer parse_fado_transducer(std::string_view text, const std::optional<Alphabet>& alphabet,
                                 bool escaped_newlines) {
  RawMachine m = read_raw(text, escaped_newlines);
  if (m.kind != "Transducer") throw ParseError("FAdo: expected a @Transducer, got @" + m.kind);
  for (std::size_t i = 0; i < m.edges.size(); ++i)
    if (m.edges[i].size() != 4)
      throw ParseError("FAdo line " + std::to_string(m.edge_lines[i]) + ": transducer edges have 4 fields");
  Alphabet al = alphabet ? *alphabet : infer_alphabet(m, 1, 2);
  StateTable st(m);
  Transducer t(al);
  t.add_states(st.count());
  for (const auto& f : m.finals) t.set_final(st.id(f));
  for (const auto& s : m.initials) t.set_initial(st.id(s));
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const auto& e = m.edges[i];
    try {
      t.add_edge(st.id(e[0]), label_word(e[1]), label_word(e[2]), st.id(e[3]));
    } catch (const DomainError& ex) {
      throw ParseError("FAdo line " + std::to_string(m.edge_lines[i]) + ": " + ex.what());
    }
  }
  return t;
}

Nfa parse_fado_nfa(std::string_view text, const std::optional<Alphabet>& alphabet, bool escaped_newlines) {
  RawMachine m = read_raw(text, escaped_newlines);
  if (m.kind == "Transducer") throw ParseError("FAdo: expected an @NFA or @DFA, got @Transducer");
  for (std::size_t i = 0; i < m.edges.size(); ++i)
    if (m.edges[i].size() != 3)
      throw ParseError("FAdo line " + std::to_string(m.edge_lines[i]) + ": automaton edges have 3 fields");
  Alphabet al = alphabet ? *alphabet : infer_alphabet(m, 1, 1);
  StateTable st(m);
  Nfa a(al);
  a.add_states(st.count());
  for (const auto& f : m.finals) a.set_final(st.id(f));
  if (m.has_star)
    for (const auto& s : m.initials) a.set_initial(st.id(s));
  else
    a.set_initial(0);
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const auto& e = m.edges[i];
    State from = st.id(e[0]), to = st.id(e[2]);
    std::string w = label_word(e[1]);
    try {
      if (w.empty()) {
        a.add_edge(from, kEpsilon, to);
      } else if (w.size() == 1) {
        a.add_edge(from, al.index_of(w[0]), to);
      } else {
        State cur = from;
        for (std::size_t j = 0; j < w.size(); ++j) {
          State nx = j + 1 == w.size() ? to : a.add_state();
          a.add_edge(cur, al.index_of(w[j]), nx);
          cur = nx;
        }
      }
    } catch (const DomainError& ex) {
      throw ParseError("FAdo line " + std::to_string(m.edge_lines[i]) + ": " + ex.what());
    }
  }
  return a;
}

std::string to_fado(const Transducer& t) {
  std::ostringstream out;
  out << "@Transducer" << state_list(t.final_states()) << " *";
  auto init = t.initial_states();
  if (init.empty() && t.num_states() == 0) init.push_back(0);
  if (init.empty()) {
    // No initial state: emit an isolated one so the text stays well formed.
    out << " " << t.num_states() << "\n";
  } else {
    out << state_list(init) << "\n";
  }
  std::vector<std::tuple<State, std::string, std::string, State>> rows;
  for (const auto& e : t.edges()) rows.emplace_back(e.source, label_token(e.input), label_token(e.output), e.target);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (const auto& [s, a, b, q] : rows) out << s << " " << a << " " << b << " " << q << "\n";
  return out.str();
}

std::string to_fado(const Nfa& a) {
  std::ostringstream out;
  out << "@NFA" << state_list(a.final_states()) << " *";
  auto init = a.initial_states();
  if (init.empty())
    out << " " << a.num_states() << "\n";
  else
    out << state_list(init) << "\n";
  std::vector<std::tuple<State, std::string, State>> rows;
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& e : a.edges(s))
      rows.emplace_back(s, e.label == kEpsilon ? std::string(kEps) : std::string(1, a.alphabet().symbol(e.label)),
                        e.target);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (const auto& [s, l, q] : rows) out << s << " " << l << " " << q << "\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Nfa parse_language(std::string_view text, const std::optional<Alphabet>& alphabet) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Word> words;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (first && (tok[0] == "@NFA" || tok[0] == "@DFA")) return parse_fado_nfa(text, alphabet);
    first = false;
    if (tok.size() != 1) throw ParseError("word list: one word per line, got \"" + line + "\"");
    words.push_back(tok[0] == kEps ? Word{} : tok[0]);
  }
  Alphabet al = [&] {
    if (alphabet) return *alphabet;
    std::set<char> seen;
    for (const auto& w : words) seen.insert(w.begin(), w.end());
    if (seen.empty()) return Alphabet();
    return Alphabet(std::string(seen.begin(), seen.end()));
  }();
  for (const auto& w : words)
    if (!al.contains_word(w)) throw ParseError("word list: \"" + w + "\" is not over {" + al.symbols() + "}");
  return Nfa::words(al, words);
}

Nfa load_language(const std::filesystem::path& path, const std::optional<Alphabet>& alphabet) {
  return parse_language(read_file(path), alphabet);
}

}  // namespace dnacodec
