// Command-line front end: parse transducer files and expose each
// pipeline stage as a subcommand. Exit codes: 0 = success / property
// holds, 1 = property is false, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mseq/core.hpp"
#include "mseq/decompose.hpp"
#include "mseq/determinize.hpp"
#include "mseq/format.hpp"
#include "mseq/graph.hpp"
#include "mseq/stream.hpp"
#include "mseq/twinning.hpp"
#include "mseq/weakdet.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

mseq::Transducer load_single(const std::string& path) {
  return mseq::parse(read_file(path));
}

// Multi-document files denote unions.
mseq::Transducer load_union(const std::string& path) {
  auto docs = mseq::parse_multi(read_file(path));
  if (docs.empty()) throw std::runtime_error("no transducer in '" + path + "'");
  if (docs.size() == 1) return docs.front();
  std::string in, out;
  for (const auto& t : docs) {
    in += t.input_alphabet.letters();
    out += t.output_alphabet.letters();
  }
  for (auto& t : docs) {
    t.input_alphabet = mseq::Alphabet(in);
    t.output_alphabet = mseq::Alphabet(out);
  }
  return mseq::union_of(docs);
}

std::string show(const mseq::Word& w) { return w.empty() ? "-" : w; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite transducer toolkit: twinning properties and "
               "multi-sequential decomposition"};
  app.require_subcommand(1);

  std::string file, file_b, word;
  std::size_t bound_states = 100000;
  std::size_t bound_delay = 0;  // 0 = derive from the transducer
  std::size_t max_len = 7;
  std::string fixture_name;
  bool list_fixtures = false, all_fixtures = false;

  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--bound-states", bound_states, "subset-state exploration cap");
    cmd->add_option("--bound-delay", bound_delay,
                    "residual delay cutoff (default: 2*M*|Q|^3)");
  };

  auto* trim_cmd = app.add_subcommand("trim", "remove useless states");
  trim_cmd->add_option("file", file)->required();

  auto* eval_cmd = app.add_subcommand("eval", "print all outputs for a word");
  eval_cmd->add_option("file", file)->required();
  eval_cmd->add_option("word", word, "input word, '-' for the empty word")->required();

  auto* tp_cmd = app.add_subcommand("check-tp", "decide the twinning property");
  tp_cmd->add_option("file", file)->required();

  auto* wtp_cmd = app.add_subcommand("check-wtp", "decide the weak twinning property");
  wtp_cmd->add_option("file", file)->required();

  auto* det_cmd = app.add_subcommand("determinize", "subset construction with delays");
  det_cmd->add_option("file", file)->required();
  add_bounds(det_cmd);

  auto* wdet_cmd = app.add_subcommand("weak-determinize",
                                      "determinisation with rank-reset edges");
  wdet_cmd->add_option("file", file)->required();
  add_bounds(wdet_cmd);

  auto* split_cmd = app.add_subcommand("split", "union over condensation paths");
  split_cmd->add_option("file", file)->required();

  auto* dec_cmd = app.add_subcommand("decompose",
                                     "decompose into sequential transducers");
  dec_cmd->add_option("file", file)->required();
  add_bounds(dec_cmd);

  auto* equiv_cmd = app.add_subcommand("equiv", "bounded equivalence check");
  equiv_cmd->add_option("file_a", file)->required();
  equiv_cmd->add_option("file_b", file_b)->required();
  equiv_cmd->add_option("--max-len", max_len, "maximum input length");

  auto* stream_cmd = app.add_subcommand(
      "stream", "decompose, then stream standard input through the parts");
  stream_cmd->add_option("file", file)->required();
  add_bounds(stream_cmd);

  auto* fix_cmd = app.add_subcommand("fixtures", "built-in example transducers");
  fix_cmd->add_option("name", fixture_name);
  fix_cmd->add_flag("--list", list_fixtures);
  fix_cmd->add_flag("--all", all_fixtures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    mseq::DetBounds det_bounds{bound_states, bound_delay};

    if (trim_cmd->parsed()) {
      std::cout << mseq::serialize(mseq::trim(load_union(file)));
      return 0;
    }
    if (eval_cmd->parsed()) {
      if (word == "-") word.clear();
      for (const auto& out : mseq::evaluate(load_union(file), word)) {
        std::cout << show(out) << "\n";
      }
      return 0;
    }
    if (tp_cmd->parsed()) {
      auto t = mseq::trim(load_union(file));
      auto r = mseq::check_tp(t);
      std::cout << "TP: " << (r.holds ? "yes" : "no") << "\n";
      if (r.witness) std::cout << "witness: " << describe(t, *r.witness) << "\n";
      return r.holds ? 0 : 1;
    }
    if (wtp_cmd->parsed()) {
      auto t = mseq::trim(load_union(file));
      auto r = mseq::check_wtp(t);
      std::cout << "WTP: " << (r.holds ? "yes" : "no") << "\n";
      if (r.witness) std::cout << "witness: " << describe(t, *r.witness) << "\n";
      return r.holds ? 0 : 1;
    }
    if (det_cmd->parsed()) {
      auto r = mseq::determinize(mseq::trim(load_single(file)), det_bounds);
      std::cout << "# exhausted: " << (r.exhausted ? "yes" : "no") << "\n"
                << mseq::serialize(r.machine);
      return 0;
    }
    if (wdet_cmd->parsed()) {
      auto r = mseq::weak_determinize(mseq::trim(load_single(file)), det_bounds);
      std::cout << "# exhausted: " << (r.exhausted ? "yes" : "no") << "\n"
                << mseq::serialize(r.machine);
      return r.exhausted ? 0 : 1;
    }
    if (split_cmd->parsed()) {
      std::cout << mseq::serialize_multi(mseq::split_parts(mseq::trim(load_single(file))));
      return 0;
    }
    if (dec_cmd->parsed()) {
      auto t = load_union(file);
      try {
        auto d = mseq::decompose(t, {det_bounds});
        std::cout << mseq::serialize_multi(d.parts);
        return 0;
      } catch (const mseq::WtpViolationError& e) {
        std::cout << "WTP: no\nwitness: " << describe(mseq::trim(t), e.witness)
                  << "\n";
        return 1;
      }
    }
    if (equiv_cmd->parsed()) {
      auto r = mseq::equiv_bounded(load_union(file), load_union(file_b), max_len);
      std::cout << "equivalent: " << (r.equivalent ? "yes" : "no") << "\n";
      if (r.counterexample) {
        std::cout << "counterexample: " << show(*r.counterexample) << "\n";
      }
      return r.equivalent ? 0 : 1;
    }
    if (stream_cmd->parsed()) {
      auto d = mseq::decompose(load_union(file), {det_bounds});
      std::string input, line;
      while (std::getline(std::cin, line)) input += line;
      if (input == "-") input.clear();
      auto bits = mseq::advisory_bits(d, input);
      mseq::StreamSession session(d, bits);
      for (char c : input) session.push(c);
      auto outputs = session.close();
      std::size_t channel = 0;
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
          std::cout << "out[" << i << "]: " << show(session.channels()[channel++])
                    << "\n";
        }
      }
      (void)outputs;
      return 0;
    }
    if (fix_cmd->parsed()) {
      const auto& all = mseq::fixtures();
      if (list_fixtures) {
        for (const auto& [name, t] : all) std::cout << name << "\n";
        return 0;
      }
      if (all_fixtures) {
        std::vector<mseq::Transducer> ts;
        for (const auto& [name, t] : all) ts.push_back(t);
        std::cout << mseq::serialize_multi(ts);
        return 0;
      }
      if (fixture_name.empty()) {
        std::cerr << "fixtures: expected --list, --all, or a name\n";
        return 2;
      }
      auto it = all.find(fixture_name);
      if (it == all.end()) {
        std::cerr << "unknown fixture '" << fixture_name << "'\n";
        return 2;
      }
      std::cout << mseq::serialize(it->second);
      return 0;
    }
  } catch (const mseq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
