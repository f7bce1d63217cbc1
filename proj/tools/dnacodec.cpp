// dnacodec: decide theta-transducer code properties of regular languages.
//
// Exit codes: 0 yes / satisfied, 1 no / not satisfied, 2 error.

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "dnacodec/dna.hpp"
#include "dnacodec/errors.hpp"
#include "dnacodec/io.hpp"
#include "dnacodec/pcp.hpp"
#include "dnacodec/property.hpp"

namespace fs = std::filesystem;
using namespace dnacodec;
using nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kError = 2;

std::string show(const Word& w) { return w.empty() ? "@epsilon" : w; }

json witness_json(const std::optional<WordPair>& w) {
  if (!w) return nullptr;
  return json{{"u", w->input}, {"v", w->output}};
}

json verdict_json(const Verdict& v) {
  json j{{"satisfied", v.satisfied}, {"witness", witness_json(v.witness)}, {"decider", to_string(v.decider)}};
  j["stats"] = json::object();
  for (const auto& [k, n] : v.stats) j["stats"][k] = n;
  if (v.extension) j["extension"] = *v.extension;
  return j;
}

std::string verdict_text(const Verdict& v, bool maximality) {
  std::ostringstream out;
  if (maximality)
    out << (v.satisfied ? "maximal" : "not maximal");
  else
    out << (v.satisfied ? "satisfied" : "not satisfied");
  out << " [" << to_string(v.decider) << "]";
  if (v.witness) out << " witness u=" << show(v.witness->input) << " v=" << show(v.witness->output);
  if (v.extension) out << " extension " << show(*v.extension);
  return out.str();
}

// A theta given on the command line: inline JSON, a JSON file, or a name.
Permutation theta_arg(const std::string& arg, const std::optional<Alphabet>& al) {
  if (!arg.empty() && arg[0] == '{') return parse_theta(arg, al);
  if (fs::is_regular_file(arg)) return parse_theta(read_file(arg), al);
  return parse_theta(json(arg).dump(), al);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
}

struct CheckOptions {
  std::string property;
  std::string language;
  bool json = false;
  bool serial = false;
  std::size_t state_cap = 0;
};

DeciderOptions decider_options(const CheckOptions& o) {
  DeciderOptions d;
  if (o.state_cap) d.state_cap = o.state_cap;
  d.execution = o.serial ? Execution::serial : Execution::parallel;
  return d;
}

Verdict run_one(const PropertyDescriptor& p, const fs::path& lang, bool maximality, const DeciderOptions& d) {
  Nfa l = load_language(lang, p.alphabet());
  return maximality ? is_maximal(p, l, d) : satisfies(p, l, d);
}

int run_check(const CheckOptions& o, bool maximality) {
  PropertyDescriptor p = load_descriptor(o.property);
  DeciderOptions d = decider_options(o);
  if (!fs::is_directory(o.language)) {
    Verdict v = run_one(p, o.language, maximality, d);
    if (o.json)
      std::cout << verdict_json(v).dump() << "\n";
    else
      std::cout << verdict_text(v, maximality) << "\n";
    return v.satisfied ? kYes : kNo;
  }

  // Batch mode: one check per file, run across threads, reported in name order.
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(o.language))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<std::string> lines(files.size());
  std::vector<int> codes(files.size(), kError);
  // Inner kernels run serially; the files are the parallel unit.
  d.execution = Execution::serial;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(files.size()); ++i) {
    const auto& f = files[static_cast<std::size_t>(i)];
    try {
      Verdict v = run_one(p, f, maximality, d);
      codes[i] = v.satisfied ? kYes : kNo;
      if (o.json) {
        json j = verdict_json(v);
        j["file"] = f.filename().string();
        lines[i] = j.dump();
      } else {
        lines[i] = f.filename().string() + ": " + verdict_text(v, maximality);
      }
    } catch (const std::exception& e) {
      lines[i] = o.json ? json{{"file", f.filename().string()}, {"error", e.what()}}.dump()
                        : f.filename().string() + ": error: " + e.what();
    }
  }
  for (const auto& l : lines) std::cout << l << "\n";
  return *std::max_element(codes.begin(), codes.end());
}

Sequence parse_sequence(const std::string& s) {
  Sequence seq;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789 ") != std::string::npos)
      throw ParseError("bad index sequence \"" + s + "\"");
    seq.push_back(std::stoul(tok));
  }
  return seq;
}

std::string sequence_text(const Sequence& s) {
  std::string r;
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide theta-transducer code properties of regular languages"};
  app.require_subcommand(1);

  CheckOptions sat, max;
  for (auto [name, o, help] : {std::tuple{"satisfies", &sat, "Check that a language satisfies a property"},
                               std::tuple{"maximal", &max, "Check that a language is maximal for a property"}}) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--property", o->property, "Property descriptor (JSON)")->required();
    c->add_option("--language", o->language, "Language file (FAdo NFA or word list) or a directory of them")
        ->required();
    c->add_flag("--json", o->json, "Machine-readable output");
    c->add_flag("--serial", o->serial, "Run search kernels serially");
    c->add_option("--state-cap", o->state_cap, "Subset construction state cap");
  }

  auto* build = app.add_subcommand("build-property", "Write a property descriptor");
  std::string dna_name, pattern, variant = "strict", theta_text, out_path, fado_path, alphabet_text;
  std::vector<std::string> trajectory;
  bool strict = false, hamming = false, min_len_2 = false;
  auto* g_dna = build->add_option("--dna", dna_name, "Named DNA property");
  auto* g_pat = build->add_option("--pattern", pattern, "DNA property pattern over {u,v,x,y}");
  auto* g_traj = build->add_option("--trajectory", trajectory, "Trajectory regexes E1 E2")->expected(2);
  auto* g_ham = build->add_flag("--hamming", hamming, "Hamming distance property");
  g_dna->excludes(g_pat)->excludes(g_traj)->excludes(g_ham);
  g_pat->excludes(g_traj)->excludes(g_ham);
  g_traj->excludes(g_ham);
  build->add_option("--variant", variant, "strict, normal or weak");
  build->add_flag("--strict", strict, "Strict trajectory pair");
  build->add_flag("--min-len-2", min_len_2, "Hamming variant that also rejects words shorter than 2");
  build->add_option("--theta", theta_text, "Theta: name, JSON, or JSON file");
  build->add_option("--alphabet", alphabet_text, "Alphabet for named thetas (default ACGT)");
  build->add_option("-o,--output", out_path, "Descriptor output path");
  build->add_option("--fado", fado_path, "Also write the transducer as a FAdo file");

  auto* pcp = app.add_subcommand("pcp", "PCP and theta-PCP tools");
  pcp->require_subcommand(1);
  std::string instance_path, pcp_theta, seq_text, pcp_out;
  std::size_t bound = 8;
  bool pcp_serial = false;
  auto pcp_common = [&](CLI::App* c) {
    c->add_option("--instance", instance_path, "Instance JSON")->required();
    c->add_option("--theta", pcp_theta, "Theta: name, JSON, or JSON file");
  };
  auto* pcp_reduce = pcp->add_subcommand("reduce", "Reduce a binary PCP instance to theta-PCP");
  pcp_common(pcp_reduce);
  pcp_reduce->add_option("-o,--output", pcp_out, "Output path");
  auto* pcp_solve = pcp->add_subcommand("solve", "Search for a solution up to a length bound");
  pcp_common(pcp_solve);
  pcp_solve->add_option("--bound", bound, "Maximum number of indices");
  pcp_solve->add_flag("--serial", pcp_serial, "Run the theta-PCP search serially");
  auto* pcp_check = pcp->add_subcommand("check", "Check an index sequence");
  pcp_common(pcp_check);
  pcp_check->add_option("--sequence", seq_text, "Comma separated indices")->required();
  auto* pcp_trans = pcp->add_subcommand("transducer", "Build the preserving-reduction transducer");
  pcp_common(pcp_trans);
  pcp_trans->add_option("-o,--output", pcp_out, "FAdo output path");

  auto* tr = app.add_subcommand("transducer", "Transducer tools");
  tr->require_subcommand(1);
  auto* tr_check = tr->add_subcommand("check", "Check a transducer property");
  std::string mode, tr_file, tr_theta;
  std::size_t tr_bound = 6, sample = 0;
  std::uint64_t seed = 1;
  bool fado_text = false, tr_json = false;
  tr_check->add_option("--mode", mode, "altering, preserving, functional, identity or length-preserving")
      ->required()
      ->check(CLI::IsMember({"altering", "preserving", "functional", "identity", "length-preserving"}));
  tr_check->add_option("--bound", tr_bound, "Length bound for altering/preserving");
  tr_check->add_option("--theta", tr_theta, "Theta: name, JSON, or JSON file (default dna-delta)");
  tr_check->add_option("--sample", sample, "Test this many random words instead of all of them");
  tr_check->add_option("--seed", seed, "Seed for --sample");
  tr_check->add_flag("--fado-text", fado_text, "FILE is FAdo text; literal \\n is a line break");
  tr_check->add_flag("--json", tr_json, "Machine-readable output");
  tr_check->add_option("file", tr_file, "FAdo transducer")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (app.got_subcommand("satisfies")) return run_check(sat, false);
    if (app.got_subcommand("maximal")) return run_check(max, true);

    if (build->parsed()) {
      std::optional<Alphabet> al;
      if (!alphabet_text.empty()) al = Alphabet(alphabet_text);
      Permutation theta = theta_text.empty() ? Permutation::dna_involution()
                                             : theta_arg(theta_text, al ? al : Alphabet::dna());
      PropertyDescriptor p = [&] {
        if (!dna_name.empty()) return dna_property(dna_name, parse_dna_variant(variant), theta);
        if (!pattern.empty()) return dna_pattern_property(pattern, parse_dna_variant(variant), theta);
        if (!trajectory.empty())
          return compile_trajectory_property(TrajectoryPair{trajectory[0], trajectory[1], strict}, theta);
        if (hamming) return hamming_property(min_len_2, theta);
        throw ParseError("give one of --dna, --pattern, --trajectory, --hamming");
      }();
      write_out(out_path, descriptor_to_json(p));
      if (!fado_path.empty()) write_out(fado_path, to_fado(normalize(p.transducer)));
      return kYes;
    }

    if (pcp->parsed()) {
      std::string text = read_file(instance_path);
      PcpInstance inst = parse_pcp(text);
      std::optional<Permutation> theta = parse_pcp_theta(text);
      if (!pcp_theta.empty()) theta = theta_arg(pcp_theta, inst.alphabet);

      if (pcp_reduce->parsed()) {
        Permutation t = theta ? *theta : Permutation::mirror(Alphabet("01"));
        ThetaPcpInstance red = reduce_to_theta_pcp(inst, t);
        write_out(pcp_out, pcp_to_json(red.pairs, red.theta));
        return kYes;
      }
      if (pcp_solve->parsed()) {
        std::optional<Sequence> s =
            theta ? solve_bounded(ThetaPcpInstance{inst, *theta}, bound,
                                  pcp_serial ? Execution::serial : Execution::parallel)
                  : solve_bounded(inst, bound);
        if (!s) {
          std::cout << "no solution with at most " << bound << " indices\n";
          return kNo;
        }
        std::cout << sequence_text(*s) << "\n";
        return kYes;
      }
      if (pcp_check->parsed()) {
        Sequence seq = parse_sequence(seq_text);
        SolutionCheck c = theta ? check_solution(ThetaPcpInstance{inst, *theta}, seq) : check_solution(inst, seq);
        std::cout << (c.solved ? "solution" : "not a solution") << "\ntop    " << show(c.top) << "\nbottom "
                  << show(c.bottom) << "\n";
        return c.solved ? kYes : kNo;
      }
      if (pcp_trans->parsed()) {
        Permutation t = theta ? *theta : Permutation::mirror(Alphabet("01"));
        PreservingReduction r = pcp_to_preserving_transducer(inst, t);
        write_out(pcp_out, to_fado(r.transducer));
        return kYes;
      }
    }

    if (tr_check->parsed()) {
      std::string text = fado_text ? tr_file : read_file(tr_file);
      Transducer t = parse_fado_transducer(text, std::nullopt, fado_text);
      auto report = [&](bool ok, const json& witness, const std::string& line) {
        if (tr_json)
          std::cout << json{{"satisfied", ok}, {"witness", witness}, {"decider", mode}}.dump() << "\n";
        else
          std::cout << line << "\n";
        return ok ? kYes : kNo;
      };
      if (mode == "functional") {
        auto w = functionality_counterexample(t);
        if (!w) return report(true, nullptr, "functional");
        return report(false, json{{"input", w->input}, {"output1", w->output1}, {"output2", w->output2}},
                      "not functional: " + show(w->input) + " -> " + show(w->output1) + ", " + show(w->output2));
      }
      if (mode == "identity") {
        auto w = partial_identity_counterexample(t);
        if (!w) return report(true, nullptr, "partial identity");
        return report(false, json{{"input", w->input}, {"output", w->output}},
                      "not a partial identity: " + show(w->input) + " -> " + show(w->output));
      }
      if (mode == "length-preserving") {
        auto w = length_counterexample(t);
        if (!w) return report(true, nullptr, "length preserving");
        return report(false, json{{"input", w->input}, {"output", w->output}},
                      "not length preserving: " + show(w->input) + " -> " + show(w->output));
      }
      Permutation theta = tr_theta.empty() ? Permutation::dna_involution() : theta_arg(tr_theta, t.alphabet());
      if (!(t.alphabet() == theta.alphabet())) t = t.rebased(theta.alphabet());
      ThetaMode m = mode == "altering" ? ThetaMode::altering : ThetaMode::preserving;
      std::optional<Word> bad;
      if (sample == 0) {
        bad = bounded_counterexample(t, theta, m, tr_bound);
      } else {
        PairMatcher match(t);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(tr_bound, 1));
        std::uniform_int_distribution<std::size_t> sym(0, theta.alphabet().size() - 1);
        for (std::size_t i = 0; i < sample && !bad; ++i) {
          Word w(len(rng), ' ');
          for (char& c : w) c = theta.alphabet().symbols()[sym(rng)];
          bool hit = match(w, theta.apply(w));
          if (hit == (m == ThetaMode::altering)) bad = w;
        }
      }
      std::string label = mode == "altering" ? "theta-input-altering" : "theta-input-preserving";
      if (!bad) return report(true, nullptr, label + " up to length " + std::to_string(tr_bound));
      return report(false, json{{"input", *bad}, {"output", theta.apply(*bad)}},
                    "not " + label + ": w=" + show(*bad) + " theta(w)=" + show(theta.apply(*bad)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
