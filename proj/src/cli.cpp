#include "fquandle/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fquandle/basis.hpp"
#include "fquandle/conj_quandle.hpp"
#include "fquandle/independence.hpp"
#include "fquandle/subquandle.hpp"
#include "fquandle/text.hpp"

namespace fquandle::cli {

std::string quote_value(std::string const& value) {
  bool const plain =
      !value.empty() &&
      std::none_of(value.begin(), value.end(), [](char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '"' || c == '=' ||
               c == '\\';
      });
  if (plain) {
    return value;
  }
  std::string q = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') {
      q += '\\';
      q += c;
    } else if (c == '\n') {
      q += "\\n";
    } else {
      q += c;
    }
  }
  q += '"';
  return q;
}

std::string Record::str() const {
  std::string line = "kind=" + quote_value(kind_);
  for (auto const& [key, value] : fields_) {
    line += ' ' + key + '=' + quote_value(value);
  }
  return line;
}

namespace {

// Failures that mean "computed, but not found or not certified".
bool is_verification_kind(ErrorKind kind) {
  return kind == ErrorKind::NotInClosure || kind == ErrorKind::WitnessNotFound;
}

struct Options {
  std::string format = "text";
  std::string file;
  std::string alphabet;
  std::size_t max_tail_len = kDefaultBound;
  std::string basis_method = "paper";
  std::string independence_method = "both";
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t sample_tail_len = 4;
  std::string op = "right";
  std::string element;
  bool words = false;
  bool check_stability = false;
  std::vector<std::string> items;

  bool machine() const { return format == "machine"; }
};

std::string sign_text(Sign s) { return s == Sign::Plus ? "+1" : "-1"; }

std::string op_text(OpKind op) { return op == kRight ? "right" : "left"; }

ProblemText load_problem(std::string const& path) {
  if (path == "-") {
    return read_problem(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::MalformedInput, "cannot open '" + path + "'");
  }
  return read_problem(in);
}

std::vector<Element> parse_items(ProblemText const& problem) {
  std::vector<Element> out;
  for (auto const& item : problem.items) {
    try {
      out.push_back(parse_element(problem.alphabet, item.text));
    } catch (Error const& e) {
      throw Error(e.kind(), "line " + std::to_string(item.line_number) + ": " +
                                e.detail());
    }
  }
  return out;
}

AlphabetPtr alphabet_option(Options const& opt) {
  if (opt.alphabet.empty()) {
    throw Error(ErrorKind::InvalidAlphabet, "--alphabet is required");
  }
  return parse_alphabet(opt.alphabet);
}

int cmd_reduce(Options const& opt, std::ostream& out) {
  auto const alphabet = alphabet_option(opt);
  for (auto const& item : opt.items) {
    Word const w = parse_word(alphabet, item);
    if (opt.machine()) {
      out << Record("word")
                 .set("input", item)
                 .set("length", std::to_string(w.size()))
                 .set("word", format_word(w))
                 .str()
          << '\n';
    } else {
      out << format_word(w) << '\n';
    }
  }
  return kOk;
}

int cmd_qop(Options const& opt, std::ostream& out) {
  auto const alphabet = alphabet_option(opt);
  if (opt.items.size() != 2) {
    throw Error(ErrorKind::MalformedInput,
                "qop takes exactly two elements: <acted> <actor>");
  }
  OpKind const op = opt.op == "right" ? kRight : kLeft;
  Element const a = parse_element(alphabet, opt.items[0]);
  Element const q = parse_element(alphabet, opt.items[1]);
  Element const r = act(a, q, op);
  if (opt.machine()) {
    out << Record("qop")
               .set("acted", format_element(a))
               .set("actor", format_element(q))
               .set("group_word", format_word(to_group_word(r)))
               .set("op", op_text(op))
               .set("result", format_element(r))
               .str()
        << '\n';
  } else {
    out << format_element(a) << (op == kRight ? " |> " : " <| ")
        << format_element(q) << " = " << format_element(r) << "   ["
        << format_word(to_group_word(r)) << "]\n";
  }
  return kOk;
}

void print_generators(Options const& opt, std::vector<Element> const& gens,
                      std::string const& kind, std::string const& prefix,
                      std::ostream& out) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (opt.machine()) {
      out << Record(kind)
                 .set("element", format_element(gens[i]))
                 .set("index", std::to_string(i))
                 .str()
          << '\n';
    } else {
      out << "  " << prefix << i << " = " << format_element(gens[i]) << '\n';
    }
  }
}

int cmd_closure(Options const& opt, std::ostream& out) {
  auto const problem = load_problem(opt.file);
  ClosureSet const c = closure(parse_items(problem), opt.max_tail_len);
  if (opt.machine()) {
    out << Record("closure")
               .set("bound", std::to_string(c.bound()))
               .set("generators", std::to_string(c.generators().size()))
               .set("size", std::to_string(c.size()))
               .str()
        << '\n';
  } else {
    out << "closure bound=" << c.bound() << " size=" << c.size() << '\n';
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    Element const& e = c.elements()[i];
    auto const& d = c.derivation(i);
    if (opt.machine()) {
      Record r("element");
      r.set("index", std::to_string(i))
          .set("element", format_element(e))
          .set("group_length", std::to_string(e.group_length()));
      if (d) {
        r.set("acted", std::to_string(d->acted))
            .set("actor", std::to_string(d->actor))
            .set("op", op_text(d->eps));
      } else {
        r.set("generator", std::to_string(i));
      }
      out << r.str() << '\n';
    } else {
      out << "  [" << i << "] " << format_element(e);
      if (d) {
        out << "  = [" << d->acted << "]" << (d->eps == kRight ? " |> " : " <| ")
            << "[" << d->actor << "]";
      } else {
        out << "  generator g" << i;
      }
      out << '\n';
    }
  }
  return kOk;
}

int cmd_express(Options const& opt, std::ostream& out) {
  auto const problem = load_problem(opt.file);
  ClosureSet const c = closure(parse_items(problem), opt.max_tail_len);
  Element const target = parse_element(problem.alphabet, opt.element);
  QuandleTerm const term = express(c, target);
  if (opt.machine()) {
    print_generators(opt, c.generators(), "generator", "g", out);
    out << Record("witness")
               .set("bound", std::to_string(c.bound()))
               .set("element", format_element(target))
               .set("term", format_term(term))
               .str()
        << '\n';
  } else {
    out << "generators:\n";
    print_generators(opt, c.generators(), "generator", "g", out);
    out << format_element(target) << " = " << format_term(term) << '\n';
  }
  return kOk;
}

void print_verdict(Options const& opt, IndependenceReport const& r,
                   std::vector<Element> const* members, std::ostream& out) {
  std::string const checker =
      r.method == IndependenceMethod::Hall ? "hall" : "nielsen";
  if (opt.machine()) {
    Record rec("verdict");
    rec.set("checker", checker)
        .set("passed", r.passed ? "true" : "false")
        .set("detail", r.verdict);
    if (r.method == IndependenceMethod::Hall) {
      rec.set("pairs_checked", std::to_string(r.pairs_checked))
          .set("failing_pairs", std::to_string(r.failing_pairs));
      if (r.first_failure && members != nullptr) {
        auto const& f = *r.first_failure;
        rec.set("left", format_element((*members)[f.left.member]))
            .set("left_sign", sign_text(f.left.sign))
            .set("right", format_element((*members)[f.right.member]))
            .set("right_sign", sign_text(f.right.sign))
            .set("depth", std::to_string(f.depth));
      }
    } else {
      rec.set("moves", std::to_string(r.moves));
      std::string reduced;
      for (auto const& w : r.reduced) {
        reduced += (reduced.empty() ? "" : ", ") + format_word(w);
      }
      rec.set("reduced", reduced);
    }
    out << rec.str() << '\n';
  } else {
    out << checker << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.verdict
        << ")\n";
  }
}

int cmd_basis(Options const& opt, std::ostream& out) {
  auto const problem = load_problem(opt.file);
  std::vector<Element> const gens = parse_items(problem);
  ClosureSet const c = closure(gens, opt.max_tail_len);
  BasisReport const report =
      opt.basis_method == "greedy" ? greedy_shrink(gens, c) : compute_S(c);
  std::optional<StabilityReport> stability;
  if (opt.check_stability) {
    stability = check_stability(gens, opt.max_tail_len);
  }

  std::string const method = opt.basis_method == "greedy" ? "greedy" : "paper";
  if (opt.machine()) {
    out << Record("basis")
               .set("bound", std::to_string(report.bound))
               .set("certified", report.certified() ? "true" : "false")
               .set("closure_size", std::to_string(c.size()))
               .set("method", method)
               .str()
        << '\n';
    print_generators(opt, report.input, "input", "g", out);
    print_generators(opt, report.candidate, "candidate", "b", out);
    for (std::size_t i = 0; i < report.moves.size(); ++i) {
      auto const& m = report.moves[i];
      out << Record("move")
                 .set("by", format_element(m.by))
                 .set("eps", sign_text(m.eps))
                 .set("result", format_element(m.result))
                 .set("step", std::to_string(i))
                 .set("target", format_element(m.target))
                 .str()
          << '\n';
    }
    for (auto const& w : report.witnesses) {
      out << Record("witness")
                 .set("generator", format_element(w.generator))
                 .set("term", w.term ? format_term(*w.term, "b") : "missing")
                 .str()
          << '\n';
    }
  } else {
    out << "basis method=" << method << " bound=" << report.bound
        << " closure_size=" << c.size() << '\n';
    out << "input:\n";
    print_generators(opt, report.input, "input", "g", out);
    out << "moves:";
    if (report.moves.empty()) {
      out << " none";
    }
    out << '\n';
    for (std::size_t i = 0; i < report.moves.size(); ++i) {
      auto const& m = report.moves[i];
      out << "  " << i + 1 << ". " << format_element(m.target)
          << (m.eps == kRight ? " |> " : " <| ") << format_element(m.by)
          << " = " << format_element(m.result) << '\n';
    }
    out << "candidate:\n";
    print_generators(opt, report.candidate, "candidate", "b", out);
    out << "witnesses:\n";
    for (auto const& w : report.witnesses) {
      out << "  " << format_element(w.generator) << " = "
          << (w.term ? format_term(*w.term, "b")
                     : std::string("not reached within bound"))
          << '\n';
    }
  }
  print_verdict(opt, report.hall, &report.candidate, out);
  print_verdict(opt, report.nielsen, nullptr, out);

  auto format_set = [](std::vector<Element> const& v) {
    std::string s;
    for (auto const& e : v) {
      s += (s.empty() ? "" : ", ") + format_element(e);
    }
    return s;
  };
  if (stability) {
    if (opt.machine()) {
      out << Record("stability")
                 .set("bound", std::to_string(stability->bound))
                 .set("next_bound", std::to_string(stability->bound + 2))
                 .set("next_candidate", format_set(stability->candidate_at_next))
                 .set("stable", stability->stable ? "true" : "false")
                 .str()
          << '\n';
    } else {
      out << "stability: candidate at bound " << stability->bound + 2 << " is "
          << (stability->stable ? "unchanged" : "different: {" +
                                                    format_set(stability->candidate_at_next) +
                                                    "}")
          << '\n';
    }
  }
  if (!opt.machine()) {
    out << "certified: " << (report.certified() ? "yes" : "no") << '\n';
  }
  return report.certified() ? kOk : kVerificationFailed;
}

int cmd_check_independence(Options const& opt, std::ostream& out) {
  auto const problem = load_problem(opt.file);
  bool const want_hall = opt.independence_method != "nielsen";
  bool const want_nielsen = opt.independence_method != "hall";

  std::vector<Word> words;
  std::vector<Element> elements;
  if (opt.words) {
    for (auto const& item : problem.items) {
      try {
        words.push_back(parse_word(problem.alphabet, item.text));
      } catch (Error const& e) {
        throw Error(e.kind(), "line " + std::to_string(item.line_number) +
                                  ": " + e.detail());
      }
    }
    if (want_hall) {
      for (auto const& w : words) {
        elements.push_back(from_group_word(w));
      }
    }
  } else {
    elements = parse_items(problem);
    words = group_words(elements);
  }

  bool passed = true;
  if (want_hall) {
    auto const members = dedupe(elements);
    IndependenceReport const r = check_significant_factors(members);
    print_verdict(opt, r, &members, out);
    passed = passed && r.passed;
  }
  if (want_nielsen) {
    IndependenceReport const r = nielsen_independent(words);
    print_verdict(opt, r, nullptr, out);
    passed = passed && r.passed;
  }
  return passed ? kOk : kVerificationFailed;
}

int cmd_verify_axioms(Options const& opt, std::ostream& out) {
  auto const alphabet = alphabet_option(opt);
  AxiomReport const report =
      verify_axioms(alphabet, opt.samples, opt.sample_tail_len, opt.seed);
  std::string names;
  for (auto const& n : alphabet->names()) {
    names += (names.empty() ? "" : " ") + n;
  }
  if (opt.machine()) {
    out << Record("axioms")
               .set("alphabet", names)
               .set("max_tail_len", std::to_string(report.max_tail_len))
               .set("passed", report.passed() ? "true" : "false")
               .set("samples", std::to_string(report.samples))
               .set("seed", std::to_string(report.seed))
               .str()
        << '\n';
    for (auto const& law : report.laws) {
      Record r("law");
      r.set("name", law.name)
          .set("checked", std::to_string(law.checked))
          .set("failed", std::to_string(law.failed));
      if (!law.counterexamples.empty()) {
        r.set("counterexample", law.counterexamples.front());
      }
      out << r.str() << '\n';
    }
  } else {
    out << "axioms over {" << names << "} samples=" << report.samples
        << " seed=" << report.seed << " max_tail_len=" << report.max_tail_len
        << '\n';
    for (auto const& law : report.laws) {
      out << "  " << law.name << ": " << (law.failed == 0 ? "PASS" : "FAIL")
          << " (" << law.checked - law.failed << "/" << law.checked << ")\n";
      for (auto const& ce : law.counterexamples) {
        out << "    counterexample " << ce << '\n';
      }
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Free quandles, their subquandles, and free bases", "fquandle"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));

  auto* reduce_cmd = app.add_subcommand("reduce", "Freely reduce words");
  reduce_cmd->add_option("--alphabet", opt.alphabet, "Generator names")
      ->required();
  reduce_cmd->add_option("words", opt.items, "Words to reduce")->required();

  auto* qop_cmd =
      app.add_subcommand("qop", "Apply a quandle operation: acted |> actor");
  qop_cmd->add_option("--alphabet", opt.alphabet, "Generator names")
      ->required();
  qop_cmd->add_option("--op", opt.op, "right (|>) or left (<|)")
      ->check(CLI::IsMember({"right", "left"}));
  qop_cmd->add_option("elements", opt.items, "<acted> <actor>")->required();

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "Problem file ('-' for stdin)")
        ->required();
  };
  auto add_bound = [&](CLI::App* cmd) {
    cmd->add_option("--max-tail-len", opt.max_tail_len,
                    "Tail-length bound for closures")
        ->capture_default_str();
  };

  auto* closure_cmd =
      app.add_subcommand("closure", "Enumerate the subquandle up to a bound");
  add_file(closure_cmd);
  add_bound(closure_cmd);

  auto* basis_cmd = app.add_subcommand("basis", "Compute a free basis");
  add_file(basis_cmd);
  add_bound(basis_cmd);
  basis_cmd->add_option("--method", opt.basis_method, "paper or greedy")
      ->check(CLI::IsMember({"paper", "greedy"}));
  basis_cmd->add_flag("--check-stability", opt.check_stability,
                      "Recompute the paper basis at bound + 2");

  auto* indep_cmd = app.add_subcommand(
      "check-independence", "Check independence in the free group");
  add_file(indep_cmd);
  indep_cmd->add_option("--method", opt.independence_method, "hall, nielsen or both")
      ->check(CLI::IsMember({"hall", "nielsen", "both"}));
  indep_cmd->add_flag("--words", opt.words,
                      "Read items as raw group words (word grammar)");

  auto* axioms_cmd = app.add_subcommand(
      "verify-axioms", "Check the quandle laws on random elements");
  axioms_cmd->add_option("--alphabet", opt.alphabet, "Generator names")
      ->required();
  axioms_cmd->add_option("--samples", opt.samples, "Number of random triples")
      ->capture_default_str();
  axioms_cmd->add_option("--seed", opt.seed, "Random seed")
      ->capture_default_str();
  axioms_cmd
      ->add_option("--max-tail-len", opt.sample_tail_len,
                   "Longest sampled tail")
      ->capture_default_str();

  auto* express_cmd = app.add_subcommand(
      "express", "Write an element as a term over the generators");
  add_file(express_cmd);
  add_bound(express_cmd);
  express_cmd->add_option("--element", opt.element, "Element to express")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (reduce_cmd->parsed()) {
      return cmd_reduce(opt, out);
    }
    if (qop_cmd->parsed()) {
      return cmd_qop(opt, out);
    }
    if (closure_cmd->parsed()) {
      return cmd_closure(opt, out);
    }
    if (basis_cmd->parsed()) {
      return cmd_basis(opt, out);
    }
    if (indep_cmd->parsed()) {
      return cmd_check_independence(opt, out);
    }
    if (axioms_cmd->parsed()) {
      return cmd_verify_axioms(opt, out);
    }
    if (express_cmd->parsed()) {
      return cmd_express(opt, out);
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return is_verification_kind(e.kind()) ? kVerificationFailed : kInputError;
  }
  return kInputError;
}

}  // namespace fquandle::cli
