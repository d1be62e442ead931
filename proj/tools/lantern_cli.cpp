// lantern: reduce, classify and test monodromy words on the four-holed sphere.

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lantern/arc_engine.hpp"
#include "lantern/classifier.hpp"
#include "lantern/rewrite.hpp"
#include "lantern/serialize.hpp"

using namespace lantern;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  int bound = 12;
  bool ot1_broad = false;
  std::string range;
  std::vector<std::string> words;
};

bool text(const Options& o) { return o.format == "text"; }

std::vector<std::string> inputs(const Options& o) {
  if (!o.words.empty()) return o.words;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::string show(const ReducedForm& rf) {
  std::ostringstream os;
  os << "r=(" << rf.r[0] << "," << rf.r[1] << "," << rf.r[2] << "," << rf.r[3] << ") blocks=[";
  for (std::size_t i = 0; i < rf.blocks.size(); ++i) {
    os << (i ? "," : "") << "(" << rf.blocks[i].m << "," << rf.blocks[i].n << ")";
  }
  os << "]";
  return os.str();
}

std::string show(const Classification& c) {
  std::string out = to_string(c.verdict) + " [";
  for (std::size_t i = 0; i < c.rules.size(); ++i) out += (i ? "," : "") + to_string(c.rules[i]);
  out += "] rotation=" + std::to_string(c.rotation) + " mirror=" + (c.mirror ? "true" : "false");
  return out;
}

std::string show(const Arc& arc) {
  std::string out = to_string(arc.start.boundary) + ":" + std::to_string(arc.start.position) + " -> " +
                    to_string(arc.end.boundary) + ":" + std::to_string(arc.end.position) + " [";
  for (std::size_t i = 0; i < arc.crossings.size(); ++i) {
    out += (i ? " " : "") + std::string("d") + std::to_string(arc.crossings[i].cut) +
           (arc.crossings[i].sign > 0 ? "+" : "-");
  }
  return out + "]";
}

// OT1 only reached through --ot1-broad is flagged in the output.
bool broad_only(const Classification& with, const ReducedForm& rf) {
  auto has_ot1 = [](const Classification& c) {
    return std::find(c.rules.begin(), c.rules.end(), RuleTag::OT1) != c.rules.end();
  };
  return has_ot1(with) && !has_ot1(classify(rf));
}

void run_reduce(const Options& o) {
  for (const std::string& w : inputs(o)) {
    const ReducedForm rf = reduce(parse(w));
    if (text(o)) {
      std::cout << show(rf) << " s=" << rf.s() << " (not certified minimal)\n";
    } else {
      std::cout << to_json(rf).dump() << "\n";
    }
  }
}

void run_classify(const Options& o) {
  for (const std::string& w : inputs(o)) {
    const ReducedForm rf = reduce(parse(w));
    const Classification c = classify(rf, {o.ot1_broad});
    const bool beyond = o.ot1_broad && broad_only(c, rf);
    if (text(o)) {
      std::cout << show(c) << (beyond ? " (OT1 beyond proved scope)" : "") << "\n";
    } else {
      Json j = to_json(c);
      if (beyond) j["note"] = "OT1 beyond proved scope";
      std::cout << j.dump() << "\n";
    }
  }
}

void run_check_rv(const Options& o) {
  if (o.bound < 1) throw UsageError("--bound must be at least 1");
  for (const std::string& w : inputs(o)) {
    const Word word = parse(w);
    const RVReport report = is_right_veering_upto(word, o.bound);
    if (!text(o)) {
      std::cout << to_json(report, word).dump() << "\n";
    } else if (report.witness_found) {
      std::cout << "NotRightVeering at " << to_string(report.boundary) << ": " << show(*report.witness)
                << " maps to " << show(*report.image) << "\n";
    } else {
      std::cout << "NoWitnessUpToBound " << report.bound << "\n";
    }
  }
}

void run_equal(const Options& o) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!o.words.empty()) {
    if (o.words.size() != 2) throw UsageError("equal takes exactly two words");
    pairs.emplace_back(o.words[0], o.words[1]);
  } else {
    for (const std::string& line : inputs(o)) {
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw UsageError("stdin lines for equal must read 'w1, w2'");
      pairs.emplace_back(line.substr(0, comma), line.substr(comma + 1));
    }
  }
  for (const auto& [a, b] : pairs) {
    const bool same = equal_in_mcg(parse(a), parse(b));
    std::cout << (same ? "true" : "false") << "\n";
  }
}

void run_factorize(const Options& o) {
  for (const std::string& w : inputs(o)) {
    const auto f = positive_factorization(reduce(parse(w)));
    if (!text(o)) {
      std::cout << (f ? to_json(*f) : Json(nullptr)).dump() << "\n";
    } else if (f) {
      std::cout << format(f->word) << "  (" << to_string(f->rule) << ", rotation " << f->rotation
                << ", conjugator \"" << format(f->conjugator) << "\")\n";
    } else {
      std::cout << "not applicable (no H-rule)\n";
    }
  }
}

// "r1=-2..2,m1=-3..3" -> ordered key list r1..r4, m1, n1, m2, n2, ...
struct Range {
  std::string key;
  long lo = 0;
  long hi = 0;
};

std::vector<Range> parse_ranges(const std::string& spec) {
  std::map<std::string, std::pair<long, long>> given;
  std::stringstream ss(spec);
  std::string item;
  std::size_t blocks = 0;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    const auto dots = item.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
      throw UsageError("range '" + item + "' must look like key=lo..hi");
    }
    const std::string key = item.substr(0, eq);
    long lo = 0;
    long hi = 0;
    try {
      std::size_t used = 0;
      const std::string a = item.substr(eq + 1, dots - eq - 1);
      const std::string b = item.substr(dots + 2);
      lo = std::stol(a, &used);
      if (used != a.size()) throw UsageError("");
      hi = std::stol(b, &used);
      if (used != b.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("range '" + item + "' has a malformed bound");
    }
    if (lo > hi) throw UsageError("range '" + item + "' is empty");
    bool valid = false;
    if (key.size() == 2 && key[0] == 'r' && key[1] >= '1' && key[1] <= '4') valid = true;
    if (key.size() >= 2 && (key[0] == 'm' || key[0] == 'n') &&
        key.find_first_not_of("0123456789", 1) == std::string::npos && key[1] != '0') {
      valid = true;
      blocks = std::max<std::size_t>(blocks, std::stoul(key.substr(1)));
    }
    if (!valid) throw UsageError("unknown range key '" + key + "'");
    if (!given.emplace(key, std::make_pair(lo, hi)).second) throw UsageError("duplicate key '" + key + "'");
  }
  std::vector<std::string> keys = {"r1", "r2", "r3", "r4"};
  for (std::size_t i = 1; i <= blocks; ++i) {
    keys.push_back("m" + std::to_string(i));
    keys.push_back("n" + std::to_string(i));
  }
  std::vector<Range> out;
  for (const std::string& k : keys) {
    auto it = given.find(k);
    out.push_back(it == given.end() ? Range{k, 0, 0} : Range{k, it->second.first, it->second.second});
  }
  return out;
}

void run_census(const Options& o) {
  const std::vector<Range> ranges = parse_ranges(o.range);
  double count = 1;
  for (const Range& r : ranges) count *= static_cast<double>(r.hi - r.lo + 1);
  if (count > 1e7) throw UsageError("census would emit more than 10^7 rows");
  std::vector<long> value;
  for (const Range& r : ranges) value.push_back(r.lo);
  while (true) {
    ReducedForm raw;
    for (std::size_t k = 0; k < 4; ++k) raw.r[k] = value[k];
    for (std::size_t i = 4; i + 1 < value.size(); i += 2) raw.blocks.push_back({value[i], value[i + 1]});
    const ReducedForm rf = reduce(expand(raw));
    const Classification c = classify(rf, {o.ot1_broad});
    if (text(o)) {
      std::cout << show(raw) << " -> " << show(rf) << " : " << show(c) << "\n";
    } else {
      Json j{{"input", to_json(raw)}, {"reduced", to_json(rf)}};
      j["verdict"] = to_string(c.verdict);
      j["rules"] = to_json(c)["rules"];
      std::cout << j.dump() << "\n";
    }
    // Odometer, last key fastest.
    std::size_t k = value.size();
    while (k > 0) {
      --k;
      if (value[k] < ranges[k].hi) {
        ++value[k];
        break;
      }
      value[k] = ranges[k].lo;
      if (k == 0) return;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy words on the four-holed sphere"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduced form");
  auto* classify_cmd = app.add_subcommand("classify", "Classify the contact structure");
  auto* rv_cmd = app.add_subcommand("check-rv", "Search for an arc sent to its left");
  auto* equal_cmd = app.add_subcommand("equal", "Compare two words in the mapping class group");
  auto* factor_cmd = app.add_subcommand("factorize", "Positive factorization when an H rule holds");
  auto* census_cmd = app.add_subcommand("census", "Classify every exponent tuple in a range");

  for (auto* cmd : {reduce_cmd, classify_cmd, rv_cmd, equal_cmd, factor_cmd}) {
    cmd->add_option("words", o.words, "Words (read from stdin, one per line, when absent)");
  }
  rv_cmd->add_option("--bound", o.bound, "Maximum crossings of searched arcs")->capture_default_str();
  classify_cmd->add_flag("--ot1-broad", o.ot1_broad, "Apply OT1 to every shape (beyond proved scope)");
  census_cmd->add_flag("--ot1-broad", o.ot1_broad, "Apply OT1 to every shape (beyond proved scope)");
  census_cmd->add_option("--range", o.range, "e.g. r1=-2..2,m1=-3..3,n1=0..2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*reduce_cmd) run_reduce(o);
    if (*classify_cmd) run_classify(o);
    if (*rv_cmd) run_check_rv(o);
    if (*equal_cmd) run_equal(o);
    if (*factor_cmd) run_factorize(o);
    if (*census_cmd) run_census(o);
  } catch (const InvariantViolation& e) {
    std::cout.flush();
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    std::cerr << "arguments:";
    for (int i = 1; i < argc; ++i) std::cerr << " '" << argv[i] << "'";
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
