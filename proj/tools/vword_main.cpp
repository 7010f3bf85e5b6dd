// Command-line front end: decide words, inspect the table oracle, export
// recognizers, run the check suites and the scaling benchmark.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vword/vword.hpp"

namespace {

constexpr int kExitInWp = 0;
constexpr int kExitError = 1;
constexpr int kExitNotInWp = 2;

struct WordSource {
  std::string inline_word;
  std::string word_file;
  bool has_random = false;
  std::size_t random_length = 0;
  std::uint64_t seed = 1;
  bool compact = false;
};

vword::GeneratingSet resolve_generators(const std::string& gens) {
  if (gens == "higman") {
    return vword::GeneratingSet::higman();
  }
  return vword::load_generating_set(std::filesystem::path(gens));
}

vword::Word resolve_word(const WordSource& src, const vword::GeneratingSet& gs) {
  if (src.has_random) {
    std::mt19937_64 rng(src.seed);
    return vword::random_word(gs, src.random_length, rng);
  }
  std::string text = src.inline_word;
  if (!src.word_file.empty()) {
    std::ifstream in(src.word_file);
    if (!in) {
      throw std::runtime_error("cannot open word file " + src.word_file);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return src.compact ? vword::parse_word_compact(text)
                     : vword::parse_word(text);
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_decide(const std::string& gens, const WordSource& src,
               const std::string& format, unsigned threads) {
  auto gs = resolve_generators(gens);
  vword::Word word = resolve_word(src, gs);
  auto witness = vword::cowp_decide(gs, word, vword::DecideOptions{threads});
  bool in_wp = !witness.has_value();

  if (format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "decide";
    j["word"] = word;
    j["in_wp"] = in_wp;
    if (witness) {
      nlohmann::ordered_json wj;
      wj["rotation"] = witness->rotation_index;
      wj["z"] = witness->z.str();
      j["witness"] = std::move(wj);
    } else {
      j["witness"] = nullptr;
    }
    emit(j);
  } else {
    std::cout << "in_wp: " << (in_wp ? "true" : "false") << "\n";
    if (witness) {
      std::cout << "witness: rotation=" << witness->rotation_index
                << " z=" << witness->z.str() << "\n";
    }
  }
  return in_wp ? kExitInWp : kExitNotInWp;
}

int run_oracle(const std::string& gens, const WordSource& src,
               const std::string& format) {
  auto gs = resolve_generators(gens);
  vword::Word word = resolve_word(src, gs);
  vword::TableElement table = vword::word_to_element(gs, word);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "oracle";
    j["word"] = word;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : table.entries()) {
      entries.push_back({e.dom.str(), e.im.str()});
    }
    j["table"] = std::move(entries);
    j["identity"] = table.is_identity();
    j["maxlen"] = table.maxlen();
    emit(j);
  } else {
    std::cout << "word: " << vword::format_word(word) << "\n" << "table:\n";
    for (const auto& e : table.entries()) {
      std::cout << "  \"" << e.dom.str() << "\" -> \"" << e.im.str() << "\"\n";
    }
    std::cout << "identity: " << (table.is_identity() ? "true" : "false")
              << "\n"
              << "maxlen: " << table.maxlen() << "\n";
  }
  return table.is_identity() ? kExitInWp : kExitNotInWp;
}

int run_bench(const std::string& gens, const std::vector<std::size_t>& lengths,
              int trials, std::uint64_t seed, const std::string& words,
              const std::string& format) {
  auto gs = resolve_generators(gens);
  auto mode = words == "random" ? vword::BenchWords::kRandom
                                : vword::BenchWords::kIdentity;
  auto result = vword::bench_wp_decide(gs, lengths, trials, seed, mode);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "bench";
    j["words"] = words;
    j["trials"] = trials;
    j["seed"] = seed;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : result.rows) {
      nlohmann::ordered_json rj;
      rj["length"] = row.length;
      rj["mean_s"] = row.mean_seconds;
      rj["median_s"] = row.median_seconds;
      rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    if (result.rows.size() >= 2) {
      j["slope"] = result.slope;
    } else {
      j["slope"] = nullptr;
    }
    emit(j);
  } else {
    std::cout << "length  mean_s      median_s\n";
    for (const auto& row : result.rows) {
      std::printf("%-7zu %-11.6f %-11.6f\n", row.length, row.mean_seconds,
                  row.median_seconds);
    }
    if (result.rows.size() >= 2) {
      std::printf("log-log slope: %.3f\n", result.slope);
    }
  }
  return kExitInWp;
}

int run_export_lz(const std::string& gens, const std::string& z_bits,
                  const std::string& format, const std::string& out_path) {
  auto gs = resolve_generators(gens);
  vword::Bitstring z(z_bits);
  vword::LzMachine machine(z, gs);

  std::string payload = format == "dot" ? machine.dpda().to_dot()
                                        : machine.dpda().to_json().dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw std::runtime_error("cannot write " + out_path);
    }
    out << payload;
  }
  return kExitInWp;
}

int run_check(const std::string& gens, const std::string& suite,
              const std::string& format) {
  auto gs = resolve_generators(gens);
  vword::Report report;
  if (suite == "lemmas" || suite == "all") {
    auto part = vword::lemma_suite(gs);
    for (const auto& c : part.checks()) {
      report.add(c.name, c.passed, c.details);
    }
  }
  if (suite == "oracle-agreement" || suite == "all") {
    auto part = vword::oracle_agreement_suite(gs);
    for (const auto& c : part.checks()) {
      report.add(c.name, c.passed, c.details);
    }
  }
  if (report.checks().empty()) {
    throw std::runtime_error("unknown suite \"" + suite +
                             "\" (expected lemmas, oracle-agreement or all)");
  }
  if (format == "json") {
    emit(report.to_json());
  } else {
    std::cout << report.to_text();
  }
  return report.all_passed() ? kExitInWp : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word problem of Thompson's group V in quadratic time"};
  app.require_subcommand(1);

  std::string gens = "higman";
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--gens", gens, "generating-set JSON file, or \"higman\"")
        ->capture_default_str();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  WordSource src;
  unsigned threads = 1;
  auto add_word_options = [&](CLI::App* cmd) {
    cmd->add_option("WORD", src.inline_word,
                    "whitespace-separated generator names");
    cmd->add_option("--word", src.inline_word, "word as an inline string");
    cmd->add_option("--word-file", src.word_file, "read the word from a file");
    auto* rnd = cmd->add_option("--random", src.random_length,
                                "use a random word of this length");
    cmd->add_option("--seed", src.seed, "seed for --random")
        ->capture_default_str();
    cmd->add_flag("--compact", src.compact,
                  "treat every character as a generator name");
    cmd->callback([&src, rnd] { src.has_random = rnd->count() > 0; });
  };

  auto* decide = app.add_subcommand("decide", "decide whether a word is the identity");
  add_common(decide);
  add_word_options(decide);
  decide->add_option("--parallel", threads,
                     "worker threads for the rotation sweep (0 = all cores)");

  auto* oracle = app.add_subcommand("oracle", "compose the word into a table");
  add_common(oracle);
  add_word_options(oracle);

  auto* bench = app.add_subcommand("bench", "time wp_decide and fit the scaling exponent");
  add_common(bench);
  std::vector<std::size_t> lengths = {128, 256, 512, 1024, 2048, 4096};
  int trials = 5;
  std::uint64_t bench_seed = 1;
  std::string bench_words = "identity";
  bench->add_option("--lengths", lengths, "ascending word lengths")
      ->delimiter(',');
  bench->add_option("--trials", trials, "timed runs per length")
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "word generator seed")
      ->capture_default_str();
  bench->add_option("--words", bench_words,
                    "identity (worst case, full sweep) or random")
      ->check(CLI::IsMember({"identity", "random"}))
      ->capture_default_str();

  auto* export_lz = app.add_subcommand("export-lz", "export a recognizer as JSON or DOT");
  std::string z_bits;
  std::string out_path;
  std::string export_format = "json";
  export_lz->add_option("--gens", gens, "generating-set JSON file, or \"higman\"")
      ->capture_default_str();
  export_lz->add_option("--z", z_bits, "bitstring z of the recognizer")
      ->required();
  export_lz->add_option("--out", out_path, "output file (default stdout)");
  export_lz->add_option("--format", export_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "run a verification suite");
  add_common(check);
  std::string suite;
  check->add_option("suite", suite, "lemmas, oracle-agreement or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (decide->parsed()) {
      return run_decide(gens, src, format, threads);
    }
    if (oracle->parsed()) {
      return run_oracle(gens, src, format);
    }
    if (bench->parsed()) {
      return run_bench(gens, lengths, trials, bench_seed, bench_words, format);
    }
    if (export_lz->parsed()) {
      return run_export_lz(gens, z_bits, export_format, out_path);
    }
    if (check->parsed()) {
      return run_check(gens, suite, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
