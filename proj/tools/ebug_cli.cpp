// Copyright 2026 The ebug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ebug: generate, combine, verify, decode and search eBug colourings.
//
// Exit codes: 0 success, 1 malformed input, 2 negative verification or
// decoding result, 3 construction precondition unmet, 4 budget exceeded.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ebug/counting.hpp"
#include "ebug/decoder.hpp"
#include "ebug/error.hpp"
#include "ebug/io.hpp"
#include "ebug/lfsr.hpp"
#include "ebug/necklace.hpp"
#include "ebug/oracle.hpp"
#include "json.hpp"

namespace {

using ebug::Colouring;
using ebug::Errc;
using ebug::Error;

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kNegative = 2;
constexpr int kPrecondition = 3;
constexpr int kBudget = 4;

int exit_code(Errc code) {
  switch (code) {
    case Errc::kMalformed:
      return kMalformed;
    case Errc::kNotFound:
      return kNegative;
    case Errc::kBudgetExceeded:
      return kBudget;
    default:
      return kPrecondition;
  }
}

ebug::Coeffs parse_coeffs(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<ebug::Symbol> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v > 255) throw std::invalid_argument(item);
      out.push_back(static_cast<ebug::Symbol>(v));
    } catch (const std::logic_error&) {
      throw Error(Errc::kMalformed, "bad coefficient list '" + text + "'");
    }
  }
  return out;
}

struct Output {
  std::string path;
  bool fixture = false;

  void text(const std::string& s) const {
    if (path.empty() || path == "-") {
      std::cout << s;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::kInvalidInput, "cannot write " + path);
    out << s;
  }

  // Self-check, then write. Words are canonical unless fixture mode keeps
  // generation-order rotations.
  int colouring(const Colouring& c, bool walks = false) const {
    auto file = ebug::io::make_file(fixture ? c : c.canonicalized(), walks);
    const auto report = ebug::io::check(file);
    if (!report.valid) {
      std::cerr << "error: generated colouring failed self-check\n";
      return kNegative;
    }
    text(ebug::io::format(file));
    return kOk;
  }
};

nlohmann::json search_json(const ebug::SearchResult& r, std::uint64_t upper) {
  std::vector<std::string> words;
  for (const auto& w : r.witness.words()) words.push_back(w.to_string());
  return {{"best_count", r.best_count},
          {"upper", upper},
          {"exhausted", r.exhausted},
          {"nodes_expanded", r.nodes_expanded},
          {"elapsed_s", r.elapsed.count()},
          {"witness", words}};
}

void print_search(const ebug::SearchResult& r, std::uint64_t upper, bool json) {
  if (json) {
    std::cout << search_json(r, upper).dump() << "\n";
    return;
  }
  std::cout << "best=" << r.best_count << " upper=" << upper
            << " exhausted=" << (r.exhausted ? "true" : "false") << " nodes=" << r.nodes_expanded
            << " elapsed=" << r.elapsed.count() << "s\n";
  for (const auto& w : r.witness.words()) std::cout << w.to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eBug colouring toolkit"};
  app.require_subcommand(1);
  // Lets --fixture appear after the subcommand name too.
  app.fallthrough();
  Output out;
  app.add_flag("--fixture", out.fixture, "Keep generation-order rotations instead of canonical ones");

  std::function<int()> action;
  std::uint32_t q = 0;
  unsigned l = 0;
  std::uint64_t k = 0;
  std::uint64_t t = 0;
  std::string coeffs;
  std::string file_a;
  std::string file_b;
  std::string window;
  bool json = false;
  double budget = 60.0;
  unsigned threads = 1;
  std::uint64_t max_size = 32;
  bool aperiodic = false;

  auto add_q = [&](CLI::App* c) { c->add_option("--q", q, "Alphabet size")->required(); };
  auto add_l = [&](CLI::App* c) { c->add_option("--l", l, "Window length")->required(); };
  auto add_k = [&](CLI::App* c) { c->add_option("--k", k, "Cycle length")->required(); };
  auto add_out = [&](CLI::App* c) { c->add_option("-o,--output", out.path, "Output file (default stdout)"); };
  auto add_coeffs = [&](CLI::App* c) {
    c->add_option("--coeffs", coeffs, "Feedback coefficients p_0,...,p_{l-1}");
  };

  auto* gen = app.add_subcommand("gen", "Generate a colouring");
  gen->require_subcommand(1);
  {
    auto* c = gen->add_subcommand("lfsr-db", "LFSR de Bruijn cycle");
    add_q(c), add_l(c), add_coeffs(c), add_out(c);
    c->callback([&] {
      action = [&] {
        const auto w = ebug::lfsr_debruijn(q, l, parse_coeffs(coeffs));
        return out.colouring(Colouring(q, w.size(), l, {w}));
      };
    });
  }
  {
    auto* c = gen->add_subcommand("lfsr-translate", "q translated LFSR cycles partitioning dB(q,l)");
    add_q(c), add_l(c), add_coeffs(c), add_out(c);
    c->callback([&] {
      action = [&] { return out.colouring(ebug::lfsr_translate(q, l, parse_coeffs(coeffs))); };
    });
  }
  {
    auto* c = gen->add_subcommand("lfsr-split", "q-1 disjoint k-cycles from one LFSR run");
    add_q(c), add_l(c), add_k(c), add_coeffs(c), add_out(c);
    c->callback([&] {
      action = [&] { return out.colouring(ebug::lfsr_split(q, l, k, parse_coeffs(coeffs))); };
    });
  }
  {
    auto* c = gen->add_subcommand("nonprimitive", "(q^l-1)/k cycles from an element of order k");
    add_q(c), add_l(c), add_k(c), add_coeffs(c), add_out(c);
    c->callback([&] {
      action = [&] {
        return out.colouring(ebug::nonprimitive_cycles(q, l, k, parse_coeffs(coeffs)));
      };
    });
  }
  {
    auto* c = gen->add_subcommand("fkm", "Lexicographically least de Bruijn cycle");
    add_q(c), add_l(c), add_out(c);
    c->callback([&] {
      action = [&] {
        const auto w = ebug::fkm_debruijn(q, l);
        return out.colouring(Colouring(q, w.size(), l, {w}));
      };
    });
  }
  {
    auto* c = gen->add_subcommand("concat", "Join aperiodic necklaces t at a time");
    add_q(c), add_l(c), add_out(c);
    c->add_option("--t", t, "Necklaces per cycle")->required();
    c->callback([&] { action = [&] { return out.colouring(ebug::concat_partition(q, l, t)); }; });
  }
  {
    auto* c = gen->add_subcommand("walks", "One closed k-walk per necklace");
    add_q(c), add_k(c), add_l(c), add_out(c);
    c->callback([&] {
      action = [&] {
        return out.colouring(Colouring(q, k, l, ebug::closed_walks(q, k, l)), true);
      };
    });
  }

  {
    auto* c = app.add_subcommand("list-k", "Cycle lengths accepted by gen nonprimitive");
    add_q(c), add_l(c);
    c->callback([&] {
      action = [&] {
        const auto ks = ebug::zsigmondy_ks(q, l);
        for (std::size_t i = 0; i < ks.size(); ++i) std::cout << (i ? " " : "") << ks[i];
        std::cout << "\n";
        return kOk;
      };
    });
  }

  auto* combine = app.add_subcommand("combine", "Build a colouring from existing ones");
  combine->require_subcommand(1);
  {
    auto* c = combine->add_subcommand("product", "Pair symbols of two colourings");
    c->add_option("--a", file_a, "First colouring file")->required();
    c->add_option("--b", file_b, "Second colouring file")->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        const auto a = ebug::io::read_file(file_a);
        const auto b = ebug::io::read_file(file_b);
        return out.colouring(ebug::product(a.colouring, b.colouring));
      };
    });
  }
  {
    auto* c = combine->add_subcommand("interleave", "Interleave t words, t dividing k");
    c->add_option("--in", file_a, "Input colouring file")->required();
    c->add_option("--t", t, "Number of words interleaved")->required();
    add_out(c);
    c->callback([&] {
      action = [&] { return out.colouring(ebug::interleave(ebug::io::read_file(file_a).colouring, t)); };
    });
  }
  {
    auto* c = combine->add_subcommand("interleave2", "Interleave pairs, any k");
    c->add_option("--in", file_a, "Input colouring file")->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        return out.colouring(ebug::interleave_pair_odd(ebug::io::read_file(file_a).colouring));
      };
    });
  }

  {
    auto* c = app.add_subcommand("verify", "Check a colouring file");
    c->add_option("--file", file_a, "Colouring file")->required();
    c->add_flag("--json", json, "Print a JSON report");
    c->callback([&] {
      action = [&] {
        const auto f = ebug::io::read_file(file_a);
        const auto report = ebug::io::check(f);
        if (json) {
          std::cout << ebug::io::report_json(f.colouring, report).dump() << "\n";
        } else if (report.valid) {
          std::cout << "valid n=" << f.colouring.size() << " windows=" << report.window_count << "\n";
        } else {
          const auto& x = *report.conflict;
          std::string w;
          for (auto s : x.window) w.push_back(ebug::symbol_char(s));
          std::cout << "invalid window=" << w << " a=" << x.first.word << ":" << x.first.rotation
                    << " b=" << x.second.word << ":" << x.second.rotation << "\n";
        }
        return report.valid ? kOk : kNegative;
      };
    });
  }

  {
    auto* c = app.add_subcommand("bound", "Upper and local-lemma lower bounds");
    add_q(c), add_k(c), add_l(c);
    c->callback([&] {
      action = [&] {
        std::cout << "upper=" << ebug::upper_bound(q, k, l)
                  << " lll_lower=" << ebug::lll_lower_bound(q, k, l) << "\n";
        return kOk;
      };
    });
  }

  {
    auto* count = app.add_subcommand("count", "Necklace and de Bruijn counts");
    count->require_subcommand(1);
    auto* n = count->add_subcommand("necklaces", "Necklaces of length l");
    auto* m = count->add_subcommand("moreau", "Aperiodic necklaces of length l (or t)");
    auto* d = count->add_subcommand("debruijn", "De Bruijn cycles");
    for (auto* c : {n, m, d}) add_q(c), add_l(c);
    m->add_option("--t", t, "Length, overriding --l");
    n->callback([&] { action = [&] { std::cout << ebug::necklace_count(q, l) << "\n"; return kOk; }; });
    m->callback([&] {
      action = [&] { std::cout << ebug::moreau(q, t ? t : l) << "\n"; return kOk; };
    });
    d->callback([&] { action = [&] { std::cout << ebug::debruijn_count(q, l) << "\n"; return kOk; }; });
  }

  {
    auto* c = app.add_subcommand("decode", "Identify the robot and rotation showing a window");
    c->add_option("--file", file_a, "Colouring file")->required();
    c->add_option("--window", window, "Observed window")->required();
    c->callback([&] {
      action = [&] {
        const auto table = ebug::DecoderTable::build(ebug::io::read_file(file_a).colouring);
        const auto s = table.decode(window);
        std::cout << "ebug=" << s.ebug << " rotation=" << s.rotation << "\n";
        return kOk;
      };
    });
  }

  {
    auto* c = app.add_subcommand("search", "Exhaustive maximum k-cycle packing");
    add_q(c), add_k(c), add_l(c);
    c->add_option("--budget", budget, "Wall-clock seconds (0 = unlimited)");
    c->add_option("--threads", threads, "Worker threads");
    c->add_flag("--json", json, "Print a JSON summary");
    c->callback([&] {
      action = [&] {
        const auto upper = ebug::upper_bound(q, k, l);
        try {
          print_search(ebug::max_k_cycles(q, k, l, {ebug::Seconds(budget), threads}), upper, json);
          return kOk;
        } catch (const ebug::BudgetExceeded& e) {
          print_search(e.result(), upper, json);
          return kBudget;
        }
      };
    });
  }

  {
    auto* c = app.add_subcommand("conjecture", "Search every k | q^l with l < k < q^l (long run)");
    c->add_option("--max-size", max_size, "Largest q^l (default 32)");
    c->add_option("--budget", budget, "Seconds per case");
    c->add_option("--threads", threads, "Worker threads");
    c->callback([&] {
      action = [&] {
        const auto report = ebug::verify_conjecture(max_size, {ebug::Seconds(budget), threads});
        for (const auto& x : report.cases) {
          std::cout << "q=" << x.q << " k=" << x.k << " l=" << x.l << " best=" << x.best
                    << " upper=" << x.upper << (x.optimal() ? " optimal" : " NOT-OPTIMAL")
                    << (x.budget_exceeded ? " budget-exceeded" : "") << " " << x.elapsed.count()
                    << "s\n";
        }
        return report.all_optimal() ? kOk : kNegative;
      };
    });
  }

  auto* exp = app.add_subcommand("export", "Graph export");
  exp->require_subcommand(1);
  {
    auto* c = exp->add_subcommand("dot", "De Bruijn digraph in DOT");
    add_q(c), add_l(c), add_out(c);
    c->callback([&] { action = [&] { out.text(ebug::io::debruijn_dot(q, l)); return kOk; }; });
  }
  {
    auto* c = exp->add_subcommand("dot-necklace", "Necklace adjacency graph in DOT");
    add_q(c), add_l(c), add_out(c);
    c->add_flag("--aperiodic", aperiodic, "Only necklaces of full size");
    c->callback([&] {
      action = [&] {
        out.text(ebug::io::necklace_dot(ebug::necklace_graph(q, l, aperiodic)));
        return kOk;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }
  if (!action) return kMalformed;
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
}
