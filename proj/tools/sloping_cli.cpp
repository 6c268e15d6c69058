// Copyright 2026 The sloping authors
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

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sloping/analysis.hpp"
#include "sloping/bfile.hpp"
#include "sloping/closed_forms.hpp"
#include "sloping/numeric.hpp"
#include "sloping/sequences.hpp"
#include "sloping/verify.hpp"

namespace {

using sloping::BudgetError;
using sloping::Int;
using sloping::Nat;

constexpr std::uint64_t kGenCountBudget = std::uint64_t{1} << 26;

Nat parse_nat(const std::string& text, const char* what) {
  Int value;
  try {
    value = Int(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(what) +
                                ": not a decimal integer: \"" + text + "\"");
  }
  if (sgn(value) < 0)
    throw std::invalid_argument(std::string(what) + ": must be nonnegative");
  return Nat(value);
}

// Output values wider than --limit-bits abort with a budget error rather
// than flooding the terminal.
void check_width(const Int& value, unsigned long limit_bits,
                 long long index) {
  Nat magnitude = abs(value);
  if (sloping::bitlen(magnitude) > limit_bits) {
    throw BudgetError("term at index " + std::to_string(index) + " needs " +
                      std::to_string(sloping::bitlen(magnitude)) +
                      " bits; raise --limit-bits to print it");
  }
}

struct GenArgs {
  std::string id;
  std::optional<long long> start;
  std::uint64_t count = 10;
  int base = 10;
  std::string format = "plain";
  unsigned long limit_bits = 4096;
};

int run_gen(const GenArgs& args) {
  const sloping::oeis::SequenceInfo* seq =
      sloping::oeis::find_sequence(args.id);
  if (!seq)
    throw std::invalid_argument("unknown sequence id \"" + args.id + "\"");
  if (args.base == 2 && args.format == "bfile")
    throw std::invalid_argument(
        "b-files are decimal; --base 2 cannot be combined with "
        "--format bfile");
  long long start = args.start.value_or(seq->offset);
  if (start < seq->offset)
    throw std::invalid_argument(
        "--start " + std::to_string(start) + " is below the offset " +
        std::to_string(seq->offset) + " of " + seq->key);
  if (args.count > kGenCountBudget)
    throw BudgetError("gen: --count exceeds the term budget");
  if (start > std::numeric_limits<long long>::max() -
                  static_cast<long long>(args.count))
    throw std::invalid_argument("gen: --start too large");

  bool first = true;
  seq->emit(start, args.count, [&](long long index, const Int& value) {
    check_width(value, args.limit_bits, index);
    if (args.format == "plain") {
      if (!first) std::cout << ' ';
      std::cout << value.get_str(args.base);
      first = false;
    } else if (args.format == "bfile") {
      std::cout << index << ' ' << value.get_str(10) << '\n';
    } else {  // csv
      std::cout << index << ',' << value.get_str(args.base) << '\n';
    }
  });
  if (args.format == "plain" && args.count > 0) std::cout << '\n';
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t limit) {
  sloping::verify::Report report = sloping::verify::run_suite(suite, limit);
  std::cout << "suite " << report.suite << " (limit " << report.limit
            << ")\n";
  std::size_t passed = 0;
  for (const sloping::verify::CheckResult& check : report.checks) {
    if (check.passed) {
      ++passed;
      std::cout << "  ok    " << check.name << " (" << check.checked
                << " cases)\n";
    } else {
      std::cout << "  FAIL  " << check.name << " (" << check.checked
                << " cases): " << check.detail << "\n";
    }
  }
  std::cout << passed << " passed, " << (report.checks.size() - passed)
            << " failed\n";
  return report.all_passed() ? 0 : 1;
}

struct TrajArgs {
  std::string start;
  std::uint64_t count = 20;
  std::string compare = "none";
  unsigned long limit_bits = 4096;
};

void print_model_table(const Nat& start, std::uint64_t count,
                       const sloping::analysis::IndexedSequence& model,
                       unsigned long limit_bits) {
  sloping::analysis::DivergenceReport fd = sloping::analysis::first_divergence(
      sloping::analysis::trajectory_fn(start), model, count);

  std::vector<std::uint64_t> rows;
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(count, 8); ++i)
    rows.push_back(i);
  if (fd.first_divergence_index) {
    std::uint64_t div = *fd.first_divergence_index;
    if (div > 0) rows.push_back(div - 1);
    rows.push_back(div);
    if (div + 1 < count) rows.push_back(div + 1);
  } else if (count > 0) {
    if (count >= 2) rows.push_back(count - 2);
    rows.push_back(count - 1);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  sloping::analysis::IndexedSequence traj =
      sloping::analysis::trajectory_fn(start);
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"n", "T(n)", "model", "difference"});
  for (std::uint64_t i : rows) {
    Nat a = traj(i);
    Nat b = model(i);
    check_width(Int(a), limit_bits, static_cast<long long>(i));
    Int diff = Int(a) - Int(b);
    cells.push_back({std::to_string(i), a.get_str(10), b.get_str(10),
                     diff.get_str(10)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells)
    for (int c = 0; c < 4; ++c)
      width[c] = std::max(width[c], row[c].size());

  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (r >= 2 && rows[r - 1] != rows[r - 2] + 1) {
      for (int c = 0; c < 4; ++c)
        std::cout << "  " << std::string(width[c] > 3 ? width[c] - 3 : 0, ' ')
                  << "...";
      std::cout << '\n';
    }
    for (int c = 0; c < 4; ++c)
      std::cout << "  " << std::string(width[c] - cells[r][c].size(), ' ')
                << cells[r][c];
    std::cout << '\n';
  }

  if (fd.first_divergence_index) {
    std::cout << "first divergence at index " << *fd.first_divergence_index
              << ": trajectory " << fd.value_a.get_str(10) << ", model "
              << fd.value_b.get_str(10) << '\n';
  } else {
    std::cout << "no divergence in the first " << count << " terms\n";
  }
}

int run_traj(const TrajArgs& args) {
  Nat start = parse_nat(args.start, "traj: m");
  if (args.compare == "none") {
    sloping::analysis::Trajectory t =
        sloping::analysis::trajectory(start, args.count, args.limit_bits);
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << t.terms[i].get_str(10);
    }
    if (!t.terms.empty()) std::cout << '\n';
    return 0;
  }
  const sloping::analysis::IndexedSequence model =
      args.compare == "t1hat"
          ? sloping::analysis::IndexedSequence(sloping::analysis::model_t1)
          : sloping::analysis::IndexedSequence(sloping::analysis::model_t2);
  print_model_table(start, args.count, model, args.limit_bits);
  return 0;
}

int run_inverse(const std::string& m_text, unsigned long limit_bits) {
  Nat m = parse_nat(m_text, "inverse: m");
  Int n = sloping::forms::s_inverse(m);
  check_width(n, limit_bits, 0);
  std::cout << n.get_str(10) << '\n';
  return 0;
}

int run_fixed(const std::string& limit_text) {
  Nat limit = parse_nat(limit_text, "fixed: --limit");
  std::vector<Nat> points = sloping::analysis::fixed_points(limit);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << points[i].get_str(10);
  }
  if (!points.empty()) std::cout << '\n';
  return 0;
}

struct WitnessArgs {
  std::string a;
  std::string b;
  unsigned long m = 0;
  unsigned long limit_bits = 4096;
};

int run_witness(const WitnessArgs& args) {
  Nat a = parse_nat(args.a, "witness: --a");
  Int b;
  try {
    b = Int(args.b, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("witness: --b: not a decimal integer: \"" +
                                args.b + "\"");
  }
  sloping::analysis::WitnessResult w =
      sloping::analysis::unbounded_witness(a, b, args.m);
  check_width(Int(w.n), args.limit_bits, 0);
  std::cout << "n = " << w.n.get_str(10) << '\n';
  std::cout << "j = " << w.j.get_str(10) << '\n';
  std::cout << "k = " << w.k << '\n';
  std::cout << "guarantee: s(n) >= n + 2^" << w.k << '\n';
  return 0;
}

int run_bfile_diff(const std::string& id, const std::string& path) {
  const sloping::oeis::SequenceInfo* seq = sloping::oeis::find_sequence(id);
  if (!seq) throw std::invalid_argument("unknown sequence id \"" + id + "\"");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  std::vector<sloping::oeis::BFileEntry> entries =
      sloping::oeis::parse_bfile(in);
  sloping::oeis::BFileDiff diff = sloping::oeis::diff_bfile(*seq, entries);
  if (diff.match) {
    std::cout << "ok: " << entries.size() << " terms match (indices "
              << entries.front().index << ".." << entries.back().index
              << ")\n";
    return 0;
  }
  std::cout << "mismatch: " << diff.note;
  if (diff.mismatch_index && diff.note.rfind("values differ", 0) == 0) {
    std::cout << " (expected " << diff.expected.get_str(10) << ", found "
              << diff.found.get_str(10) << ")";
  }
  std::cout << '\n';
  return 1;
}

std::string sequence_footer() {
  std::string footer = "sequences (id, cross-reference, offset):\n";
  for (const sloping::oeis::SequenceInfo& seq :
       sloping::oeis::all_sequences()) {
    footer += "  " + seq.key;
    footer.append(seq.key.size() < 9 ? 9 - seq.key.size() : 1, ' ');
    footer += seq.a_number + "  offset " + std::to_string(seq.offset) +
              "  " + seq.summary + "\n";
  }
  return footer;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sloping binary numbers: closed forms, cross-checks, and "
               "OEIS exports"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "gen", "print terms of a registered sequence");
  gen->add_option("id", gen_args.id, "sequence key or A-number")->required();
  gen->add_option("--start", gen_args.start,
                  "first index (default: the sequence offset)");
  gen->add_option("--count", gen_args.count, "number of terms to print");
  gen->add_option("--base", gen_args.base, "output base for plain/csv")
      ->check(CLI::IsMember({2, 10}));
  gen->add_option("--format", gen_args.format, "plain, bfile, or csv")
      ->check(CLI::IsMember({"plain", "bfile", "csv"}));
  gen->add_option("--limit-bits", gen_args.limit_bits,
                  "refuse to print terms wider than this");
  gen->footer(sequence_footer());

  std::string verify_suite;
  std::uint64_t verify_limit = 16384;
  CLI::App* ver = app.add_subcommand(
      "verify", "cross-validate the implementations against each other");
  ver->add_option("suite", verify_suite,
                  "one of: " + [] {
                    std::string names;
                    for (const std::string& n :
                         sloping::verify::suite_names()) {
                      if (!names.empty()) names += ", ";
                      names += n;
                    }
                    return names;
                  }())
      ->required();
  ver->add_option("--limit", verify_limit, "sweep window size");

  TrajArgs traj_args;
  CLI::App* traj = app.add_subcommand(
      "traj", "iterate the sloping map and compare against models");
  traj->add_option("m", traj_args.start, "starting value")->required();
  traj->add_option("--count", traj_args.count, "number of terms");
  traj->add_option("--compare", traj_args.compare,
                   "none, t1hat, or t2hat")
      ->check(CLI::IsMember({"none", "t1hat", "t2hat"}));
  traj->add_option("--limit-bits", traj_args.limit_bits,
                   "term width budget");

  std::string inverse_m;
  unsigned long inverse_limit_bits = 4096;
  CLI::App* inv = app.add_subcommand(
      "inverse", "find the unique n with extended s(n) = m");
  inv->add_option("m", inverse_m, "target value")->required();
  inv->add_option("--limit-bits", inverse_limit_bits, "term width budget");

  std::string fixed_limit;
  CLI::App* fix = app.add_subcommand(
      "fixed", "list the fixed points of the sloping map");
  fix->add_option("--limit", fixed_limit, "inclusive upper bound")
      ->required();

  WitnessArgs witness_args;
  CLI::App* wit = app.add_subcommand(
      "witness", "construct n in the progression a j + b with "
                 "s(n) >= n + 2^(2^m - b)");
  wit->add_option("--a", witness_args.a, "progression stride")->required();
  wit->add_option("--b", witness_args.b, "progression offset")->required();
  wit->add_option("--m", witness_args.m, "guarantee parameter")->required();
  wit->add_option("--limit-bits", witness_args.limit_bits,
                  "term width budget");

  std::string diff_id;
  std::string diff_path;
  CLI::App* bdiff = app.add_subcommand(
      "bfile-diff", "compare a b-file against the regenerated sequence");
  bdiff->add_option("id", diff_id, "sequence key or A-number")->required();
  bdiff->add_option("path", diff_path, "b-file to check")->required();

  int rc = 0;
  gen->callback([&] { rc = run_gen(gen_args); });
  ver->callback([&] { rc = run_verify(verify_suite, verify_limit); });
  traj->callback([&] { rc = run_traj(traj_args); });
  inv->callback([&] { rc = run_inverse(inverse_m, inverse_limit_bits); });
  fix->callback([&] { rc = run_fixed(fixed_limit); });
  wit->callback([&] { rc = run_witness(witness_args); });
  bdiff->callback([&] { rc = run_bfile_diff(diff_id, diff_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const sloping::oeis::BFileParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
