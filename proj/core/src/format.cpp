#include "mseq/format.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mseq/core.hpp"

namespace mseq {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

Word word_of(const std::string& tok) { return tok == "-" ? Word{} : Word(tok); }

Transducer parse_lines(const std::vector<std::pair<std::size_t, std::string>>& lines) {
  Transducer t;
  t.name = "fst";
  std::map<std::string, State> by_id;
  bool saw_in = false, saw_out = false;

  for (const auto& [lineno, line] : lines) {
    auto tokens = tokens_of(line);
    const std::string& head = tokens.front();
    if (head == "fst") {
      if (tokens.size() != 2) throw ParseError(lineno, "expected: fst <name>");
      t.name = tokens[1];
    } else if (head == "in" || head == "out") {
      if (tokens.size() != 2) throw ParseError(lineno, "expected: " + head + " <letters>");
      if (tokens[1].find('-') != std::string::npos) {
        throw ParseError(lineno, "'-' is reserved for the empty word");
      }
      std::set<char> seen(tokens[1].begin(), tokens[1].end());
      if (seen.size() != tokens[1].size()) {
        throw ParseError(lineno, "duplicate alphabet letter");
      }
      (head == "in" ? t.input_alphabet : t.output_alphabet) = Alphabet(tokens[1]);
      (head == "in" ? saw_in : saw_out) = true;
    } else if (head == "state") {
      if (tokens.size() < 2) throw ParseError(lineno, "expected: state <id> ...");
      if (by_id.contains(tokens[1])) {
        throw ParseError(lineno, "duplicate state id '" + tokens[1] + "'");
      }
      State q = t.add_state(tokens[1]);
      by_id[tokens[1]] = q;
      std::size_t i = 2;
      if (i < tokens.size() && tokens[i] == "init") {
        t.initials.push_back(q);
        ++i;
      }
      if (i < tokens.size()) {
        if (tokens[i] != "final") {
          throw ParseError(lineno, "unexpected token '" + tokens[i] + "'");
        }
        std::vector<Word> outputs;
        for (++i; i < tokens.size(); ++i) outputs.push_back(word_of(tokens[i]));
        if (outputs.empty()) outputs.push_back(Word{});
        std::sort(outputs.begin(), outputs.end());
        outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
        t.finals[q] = std::move(outputs);
      }
    } else if (head == "edge") {
      if (tokens.size() != 5) {
        throw ParseError(lineno, "expected: edge <src> <letter> <word|-> <dst>");
      }
      auto src = by_id.find(tokens[1]);
      auto dst = by_id.find(tokens[4]);
      if (src == by_id.end()) {
        throw ParseError(lineno, "unknown state id '" + tokens[1] + "'");
      }
      if (dst == by_id.end()) {
        throw ParseError(lineno, "unknown state id '" + tokens[4] + "'");
      }
      if (tokens[2] == "-") {
        throw ParseError(lineno,
                         "empty input is not allowed: transducers are real-time, "
                         "every edge consumes one input letter");
      }
      if (tokens[2].size() != 1) {
        throw ParseError(lineno, "edge input must be a single letter");
      }
      if (saw_in && !t.input_alphabet.contains(tokens[2][0])) {
        throw ParseError(lineno, "input letter '" + tokens[2] + "' is not in the alphabet");
      }
      Word output = word_of(tokens[3]);
      if (saw_out && !t.output_alphabet.contains_word(output)) {
        throw ParseError(lineno, "output word '" + tokens[3] + "' is not over the alphabet");
      }
      t.edges.push_back({src->second, tokens[2][0], std::move(output), dst->second});
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }

  if (!saw_in || !saw_out) {
    std::size_t lineno = lines.empty() ? 1 : lines.front().first;
    throw ParseError(lineno, "missing 'in' or 'out' alphabet line");
  }
  std::sort(t.initials.begin(), t.initials.end());
  t.initials.erase(std::unique(t.initials.begin(), t.initials.end()), t.initials.end());
  try {
    validate(t);
  } catch (const ValidationError& e) {
    std::size_t lineno = lines.empty() ? 1 : lines.front().first;
    throw ParseError(lineno, e.what());
  }
  return t;
}

}  // namespace

std::vector<Transducer> parse_multi(const std::string& text) {
  std::vector<std::vector<std::pair<std::size_t, std::string>>> docs(1);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    if (line.substr(first) == "---") {
      docs.emplace_back();
      continue;
    }
    docs.back().push_back({lineno, line});
  }
  std::vector<Transducer> out;
  for (const auto& doc : docs) {
    if (doc.empty()) continue;
    out.push_back(parse_lines(doc));
  }
  return out;
}

Transducer parse(const std::string& text) {
  auto docs = parse_multi(text);
  if (docs.empty()) throw ParseError(1, "no transducer in input");
  if (docs.size() > 1) throw ParseError(1, "expected a single document");
  return docs.front();
}

std::string serialize(const Transducer& t) {
  // Use display labels as state ids when unique, fresh ids otherwise.
  std::vector<std::string> ids(t.num_states());
  {
    std::set<std::string> seen(t.labels.begin(), t.labels.end());
    bool unique = seen.size() == t.num_states() &&
                  std::none_of(t.labels.begin(), t.labels.end(),
                               [](const std::string& l) {
                                 return l.empty() ||
                                        l.find_first_of(" \t#") != std::string::npos;
                               });
    for (State q = 0; q < t.num_states(); ++q) {
      ids[q] = unique ? t.labels[q] : "s" + std::to_string(q);
    }
  }

  std::ostringstream out;
  out << "fst " << (t.name.empty() ? "fst" : t.name) << "\n";
  out << "in " << t.input_alphabet.letters() << "\n";
  out << "out " << t.output_alphabet.letters() << "\n";
  for (State q = 0; q < t.num_states(); ++q) {
    out << "state " << ids[q];
    if (t.is_initial(q)) out << " init";
    if (auto it = t.finals.find(q); it != t.finals.end()) {
      out << " final";
      for (const Word& w : it->second) out << " " << (w.empty() ? "-" : w);
    }
    out << "\n";
  }
  std::vector<Edge> edges = t.edges;
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    out << "edge " << ids[e.src] << " " << e.input << " "
        << (e.output.empty() ? "-" : e.output) << " " << ids[e.dst] << "\n";
  }
  return out.str();
}

std::string serialize_multi(const std::vector<Transducer>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) out += "---\n";
    out += serialize(ts[i]);
  }
  return out;
}

}  // namespace mseq
