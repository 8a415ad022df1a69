#include <CLI11.hpp>

#include <chrono>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "syncword/core.hpp"
#include "syncword/generators.hpp"
#include "syncword/geometry.hpp"
#include "syncword/io.hpp"
#include "syncword/monoid.hpp"
#include "syncword/oracle.hpp"
#include "syncword/positivity.hpp"
#include "syncword/strategies.hpp"

using namespace syncword;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

int exit_code(const SyncOutcome& o) { return succeeded(o) ? kExitOk : kExitCounterexample; }

State resolve_state(const Automaton& a, const std::string& text) {
  if (auto q = a.state_by_label(text)) return *q;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v >= a.size()) {
    throw Error(ErrorCode::invalid_argument, "unknown state '" + text + "'");
  }
  return static_cast<State>(v);
}

const DifferenceAutomaton* as_difference(const io::AnyAutomaton& a) { return std::get_if<DifferenceAutomaton>(&a); }

SignFunction load_sign(const std::string& path, const io::AnyAutomaton& a) {
  const auto doc = io::parse_document(io::read_text(path));
  if (doc.kind != io::DocumentKind::sign_function) {
    throw Error(ErrorCode::invalid_argument, path + ": expected a sign_function document");
  }
  return io::sign_from_json(doc.payload, io::base_of(a).alphabet(), as_difference(a));
}

StateOrder load_order(const std::string& path, std::size_t n) {
  const auto doc = io::parse_document(io::read_text(path));
  if (doc.kind != io::DocumentKind::state_order) {
    throw Error(ErrorCode::invalid_argument, path + ": expected a state_order document");
  }
  return io::order_from_json(doc.payload, n);
}

// Sign function and corner for the cornering strategies: an explicit sign
// file wins, otherwise difference automata get their geometric corner and
// plain automata the all-positive function.
std::pair<SignFunction, State> corner_setup(const io::AnyAutomaton& any, const std::string& sign_path,
                                            const std::string& target) {
  const Automaton& a = io::base_of(any);
  std::optional<State> z;
  if (!target.empty()) z = resolve_state(a, target);
  if (!sign_path.empty()) {
    auto f = load_sign(sign_path, any);
    if (!z) {
      if (const auto* g = f.as_geometric()) z = g->certificate.corner;
    }
    if (!z) throw Error(ErrorCode::invalid_argument, "--target is required with this sign function");
    return {std::move(f), *z};
  }
  if (const auto* d = as_difference(any)) {
    const auto cert = choose_corner(*d);
    if (z && *z != cert.corner) {
      throw Error(ErrorCode::invalid_argument, "--target differs from the geometric corner; pass --sign");
    }
    return {SignFunction::geometric(*d, cert), cert.corner};
  }
  if (!z) throw Error(ErrorCode::invalid_argument, "--target is required for a plain automaton without --sign");
  return {SignFunction::all_positive(), *z};
}

SyncOutcome oracle_outcome(const Automaton& a, std::optional<State> z) {
  const auto r = z ? shortest_sync_to(a, *z) : shortest_sync(a);
  if (!r.synchronizable) {
    Counterexample c;
    c.kind = CounterexampleKind::not_synchronizable;
    c.message = z ? "no word maps every state to " + std::to_string(*z) : "the subset search reaches no singleton";
    return c;
  }
  SyncResult s;
  s.strategy = "oracle";
  s.word = *r.word;
  s.target = {*r.target};
  s.n_used = a.size();
  return s;
}

// ---- gen ----

struct GenOptions {
  std::string family;
  std::vector<std::string> params;
  std::string out = "-";
  std::string order_out;
  std::uint64_t seed = 0;
  std::string fraction = "1/4";
  bool directed = false;
  std::size_t symbols = 3;
};

std::size_t param(const GenOptions& g, std::size_t i, const char* what) {
  if (i >= g.params.size()) throw Error(ErrorCode::invalid_argument, g.family + " needs parameter " + what);
  return std::stoul(g.params[i]);
}

int run_gen(const GenOptions& g) {
  std::string text;
  const std::string& fam = g.family;
  if (fam.rfind("fixture:", 0) == 0) {
    text = fixture_text(fam.substr(8));
  } else if (fam == "cerny") {
    text = io::write_dfa(cerny(param(g, 0, "n")));
  } else if (fam == "grid") {
    text = io::write_difference(grid(param(g, 0, "width"), param(g, 1, "height")));
  } else if (fam == "maze") {
    MazeSpec spec;
    spec.width = param(g, 0, "width");
    spec.height = param(g, 1, "height");
    spec.seed = g.seed;
    spec.block_fraction = Rational::parse(g.fraction);
    spec.bidirectional = !g.directed;
    text = io::write_difference(maze(spec));
  } else if (fam == "zn_z2") {
    const auto z = zn_z2_counterexample(param(g, 0, "n"));
    text = io::write_dfa(z.automaton);
    if (!g.order_out.empty()) io::write_text_atomic(g.order_out, io::write_order(z.order));
  } else if (fam == "unitary") {
    text = io::write_dfa(random_unitary(param(g, 0, "n"), g.symbols, g.seed));
  } else if (fam == "commutative") {
    std::vector<std::uint32_t> caps;
    for (std::size_t i = 0; i < g.params.size(); ++i) caps.push_back(static_cast<std::uint32_t>(param(g, i, "cap")));
    text = io::write_dfa(random_commutative_aperiodic(caps, g.seed));
  } else if (fam == "monotone") {
    text = io::write_dfa(random_monotone(param(g, 0, "n"), g.symbols, g.seed));
  } else if (fam == "random") {
    text = io::write_dfa(random_automaton(param(g, 0, "n"), g.symbols, g.seed));
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown family '" + fam + "'");
  }
  io::write_text_atomic(g.out, text);
  return kExitOk;
}

// ---- info ----

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int run_info(const std::string& path) {
  const auto any = io::read_automaton(io::read_text(path));
  const Automaton& a = io::base_of(any);
  std::ostringstream os;
  os << "states: " << a.size() << "\n";
  os << "symbols: " << a.alphabet_size() << "\n";
  os << "strongly_connected: " << yes_no(is_strongly_connected(a)) << "\n";
  os << "bidirectional: " << yes_no(is_bidirectional(a)) << "\n";
  os << "universally_reachable: " << universally_reachable_states(a).size() << "\n";
  const auto ap = is_aperiodic(a);
  os << "aperiodic: " << to_string(ap.verdict);
  if (ap.verdict == Verdict::yes) os << " (index " << aperiodicity_index(a) << ")";
  os << "\n";
  os << "commutative: " << yes_no(is_commutative(a)) << "\n";
  os << "unitary: " << yes_no(is_unitary(a)) << "\n";
  os << "geodesically_aperiodic: " << to_string(is_geodesically_aperiodic(a).verdict) << "\n";
  if (const auto* d = as_difference(any)) {
    const auto cert = choose_corner(*d);
    os << "corner: " << a.state_name(cert.corner) << " direction (";
    for (std::size_t i = 0; i < cert.direction.size(); ++i) os << (i ? ", " : "") << cert.direction[i];
    os << ")\n";
  }
  std::cout << os.str();
  return kExitOk;
}

// ---- sync ----

struct SyncOptions {
  std::string input = "-";
  std::string strategy;
  std::string sign;
  std::string order;
  std::string target;
  std::size_t rank = 1;
  std::string out = "-";
};

int run_sync(const SyncOptions& o) {
  const auto any = io::read_automaton(io::read_text(o.input));
  const Automaton& a = io::base_of(any);
  SyncOutcome result;
  if (o.strategy == "corner") {
    auto [f, z] = corner_setup(any, o.sign, o.target);
    result = cornering_sync(a, f, z, o.rank);
  } else if (o.strategy == "f-ordered") {
    if (o.order.empty()) throw Error(ErrorCode::invalid_argument, "--order is required for f-ordered");
    const auto f = o.sign.empty() ? SignFunction::all_positive() : load_sign(o.sign, any);
    result = f_ordered_sync(a, f, load_order(o.order, a.size()));
  } else if (o.strategy == "aperiodic") {
    result = aperiodic_sync(a);
  } else if (o.strategy == "geodesic") {
    State z = 0;
    if (!o.target.empty()) {
      z = resolve_state(a, o.target);
    } else if (const auto* d = as_difference(any)) {
      z = choose_corner(*d).corner;
    } else if (const auto u = universally_reachable_states(a); !u.empty()) {
      z = u.front();
    }
    result = geodesic_sync(a, z);
  } else if (o.strategy == "greedy") {
    result = greedy_pairs_sync(a);
  } else if (o.strategy == "oracle") {
    std::optional<State> z;
    if (!o.target.empty()) z = resolve_state(a, o.target);
    result = oracle_outcome(a, z);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown strategy '" + o.strategy + "'");
  }
  io::write_text_atomic(o.out, io::write_outcome(result, a.alphabet()));
  if (const auto* c = std::get_if<Counterexample>(&result)) {
    std::cerr << "counterexample (" << to_string(c->kind) << "): " << c->message << "\n";
  }
  return exit_code(result);
}

// ---- verify ----

// A pair is unsynchronizable iff no diagonal state is reachable from it in
// the square of the automaton.
bool pair_mergeable(const Automaton& a, State p, State q) {
  const auto sq = product(a, a);
  const std::size_t n = a.size();
  for (State s : reachable_from(sq, static_cast<State>(p * n + q))) {
    if (s / n == s % n) return true;
  }
  return false;
}

int run_verify(const std::string& path, const std::string& result_path) {
  const auto any = io::read_automaton(io::read_text(path));
  const Automaton& a = io::base_of(any);
  const auto doc = io::parse_document(io::read_text(result_path));
  if (doc.kind != io::DocumentKind::sync_result) {
    throw Error(ErrorCode::invalid_argument, result_path + ": expected a sync_result document");
  }
  const auto outcome = io::outcome_from_json(doc.payload, a.alphabet());
  if (const auto* r = std::get_if<SyncResult>(&outcome)) {
    const auto image = image_set(a, all_states(a), r->word);
    if (image != r->target) {
      std::cout << "mismatch: word maps the states onto " << image.size() << " state(s), not the recorded target\n";
      return kExitError;
    }
    if (image.size() == 1) {
      std::cout << "ok: synchronizes to " << a.state_name(image.front()) << " with length " << r->word.size() << "\n";
    } else {
      std::cout << "ok: rank " << image.size() << " with length " << r->word.size() << "\n";
    }
    return kExitOk;
  }
  const auto& c = std::get<Counterexample>(outcome);
  for (State q : c.states) check_state(a, q);
  check_word(a, c.word);
  if (c.kind == CounterexampleKind::not_synchronizable && c.states.size() == 2 &&
      pair_mergeable(a, c.states[0], c.states[1])) {
    std::cout << "mismatch: the witness pair can be merged\n";
    return kExitError;
  }
  std::cout << "ok: counterexample (" << to_string(c.kind) << ") is consistent\n";
  return kExitOk;
}

// ---- product ----

struct ProductOptions {
  std::string first;
  std::string second;
  std::string z1;
  std::string z2;
  std::string sign1;
  std::string sign2;
  std::string out = "-";
  std::string product_out;
};

int run_product(const ProductOptions& o) {
  const auto a1 = io::read_automaton(io::read_text(o.first));
  const auto a2 = io::read_automaton(io::read_text(o.second));
  auto [f1, z1] = corner_setup(a1, o.sign1, o.z1);
  auto [f2, z2] = corner_setup(a2, o.sign2, o.z2);
  const Automaton& b1 = io::base_of(a1);
  const Automaton& b2 = io::base_of(a2);
  const auto prod = product(b1, b2);
  const auto result = product_corner_sync(b1, f1, z1, b2, f2, z2);
  if (!o.product_out.empty()) io::write_text_atomic(o.product_out, io::write_dfa(prod));
  io::write_text_atomic(o.out, io::write_outcome(result, prod.alphabet()));
  return exit_code(result);
}

// ---- bench ----

struct BenchRow {
  std::string instance;
  std::size_t n = 0;
  std::uint64_t d = 0;
  std::string strategy;
  std::string word_length = "fail";
  std::string bound = "none";
  std::string oracle = "unknown";
  double runtime_ms = 0;
  bool violation = false;
};

using Runner = std::function<SyncOutcome()>;

struct BenchInstance {
  std::string name;
  Automaton automaton;
  std::vector<std::pair<std::string, Runner>> strategies;
};

std::vector<BenchRow> run_instance(const BenchInstance& inst) {
  std::string oracle = "unknown";
  try {
    const auto r = shortest_sync(inst.automaton, std::size_t{1} << 20);
    oracle = r.synchronizable ? std::to_string(*r.shortest_length) : "none";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
  }
  std::vector<BenchRow> rows;
  for (const auto& [name, run] : inst.strategies) {
    BenchRow row;
    row.instance = inst.name;
    row.n = inst.automaton.size();
    row.strategy = name;
    row.oracle = oracle;
    const auto t0 = std::chrono::steady_clock::now();
    const auto outcome = run();
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (const auto* r = std::get_if<SyncResult>(&outcome)) {
      row.d = r->d_used;
      row.word_length = std::to_string(r->word.size());
      if (r->bound) {
        row.bound = std::to_string(*r->bound);
        if (!r->bound_is_soft && r->word.size() > *r->bound) row.violation = true;
      }
      if (oracle != "unknown" && oracle != "none" && std::stoull(oracle) > r->word.size()) row.violation = true;
    } else {
      row.word_length = std::string("counterexample:") + to_string(std::get<Counterexample>(outcome).kind);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void add_corner(BenchInstance& inst, const DifferenceAutomaton& d) {
  const auto cert = choose_corner(d);
  const auto f = SignFunction::geometric(d, cert);
  inst.strategies.emplace_back("corner", [a = d.base(), f, z = cert.corner] { return cornering_sync(a, f, z); });
  inst.strategies.emplace_back("geodesic", [a = d.base(), z = cert.corner] { return geodesic_sync(a, z); });
}

void add_common(BenchInstance& inst) {
  inst.strategies.emplace_back("greedy", [a = inst.automaton] { return greedy_pairs_sync(a); });
  inst.strategies.emplace_back("oracle", [a = inst.automaton] { return oracle_outcome(a, std::nullopt); });
}

std::vector<BenchInstance> suite(const std::string& name) {
  std::vector<BenchInstance> out;
  const bool all = name == "all";
  if (all || name == "cerny") {
    for (std::size_t n = 2; n <= 8; ++n) {
      BenchInstance inst{"cerny-" + std::to_string(n), cerny(n), {}};
      const auto f = SignFunction::regular(cerny_block_monitor(n));
      const auto order = StateOrder::total(n).with_designated(static_cast<State>(n - 1), static_cast<State>(n - 1));
      inst.strategies.emplace_back("f-ordered", [a = inst.automaton, f, order] { return f_ordered_sync(a, f, order); });
      add_common(inst);
      out.push_back(std::move(inst));
    }
  }
  if (all || name == "mazes") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto d = maze({5, 5, seed, Rational(1, 4), true});
      BenchInstance inst{"maze-5x5-s" + std::to_string(seed), d.base(), {}};
      add_corner(inst, d);
      add_common(inst);
      out.push_back(std::move(inst));
    }
  }
  if (all || name == "aperiodic") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto a = random_monotone(8, 2, seed);
      BenchInstance inst{"monotone-8-s" + std::to_string(seed), a, {}};
      inst.strategies.emplace_back("aperiodic", [a] { return aperiodic_sync(a); });
      add_common(inst);
      out.push_back(std::move(inst));
    }
  }
  if (all || name == "product") {
    const auto g = grid(3, 3);
    const auto cert = choose_corner(g);
    const auto f = SignFunction::geometric(g, cert);
    BenchInstance inst{"grid3x3-squared", product(g.base(), g.base()), {}};
    inst.strategies.emplace_back("product", [b = g.base(), f, z = cert.corner] {
      return product_corner_sync(b, f, z, b, f, z);
    });
    add_common(inst);
    out.push_back(std::move(inst));
  }
  if (out.empty()) throw Error(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
  return out;
}

int run_bench(const std::string& name, const std::string& out) {
  const auto instances = suite(name);
  std::vector<std::future<std::vector<BenchRow>>> jobs;
  for (const auto& inst : instances) jobs.push_back(std::async(std::launch::async, run_instance, std::cref(inst)));
  std::ostringstream csv;
  csv << "instance,n,d,strategy,word_length,theorem_bound,oracle_length_or_unknown,runtime_ms\n";
  bool violation = false;
  for (auto& job : jobs) {
    for (const auto& r : job.get()) {
      csv << r.instance << ',' << r.n << ',' << r.d << ',' << r.strategy << ',' << r.word_length << ',' << r.bound << ','
          << r.oracle << ',' << r.runtime_ms << '\n';
      if (r.violation) {
        violation = true;
        std::cerr << "bound violated: " << r.instance << " " << r.strategy << "\n";
      }
    }
  }
  io::write_text_atomic(out, csv.str());
  return violation ? kExitError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronizing words for finite automata"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an automaton");
  gen_cmd->add_option("family", gen.family,
                      "cerny|grid|maze|zn_z2|unitary|commutative|monotone|random|fixture:<name>")
      ->required();
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("-o,--out", gen.out, "Output file, - for standard output");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("--fraction", gen.fraction, "Maze blocking fraction p/q");
  gen_cmd->add_flag("--directed", gen.directed, "Maze blocks single moves");
  gen_cmd->add_option("--symbols", gen.symbols, "Alphabet size for random families");
  gen_cmd->add_option("--order-out", gen.order_out, "zn_z2: also write the state order");

  std::string info_file = "-";
  auto* info_cmd = app.add_subcommand("info", "Structural properties of an automaton");
  info_cmd->add_option("file", info_file, "Automaton file");

  SyncOptions sync;
  auto* sync_cmd = app.add_subcommand("sync", "Compute a synchronizing word");
  sync_cmd->add_option("file", sync.input, "Automaton file");
  sync_cmd->add_option("--strategy", sync.strategy, "corner|f-ordered|aperiodic|geodesic|greedy|oracle")->required();
  sync_cmd->add_option("--sign", sync.sign, "Sign function file");
  sync_cmd->add_option("--order", sync.order, "State order file");
  sync_cmd->add_option("--target", sync.target, "Target state index or label");
  sync_cmd->add_option("--rank", sync.rank, "Target rank for corner");
  sync_cmd->add_option("-o,--out", sync.out, "Result file");

  std::string verify_file;
  std::string verify_word;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a sync result");
  verify_cmd->add_option("file", verify_file, "Automaton file")->required();
  verify_cmd->add_option("--word", verify_word, "Result file")->required();

  ProductOptions prod;
  auto* product_cmd = app.add_subcommand("product", "Synchronize a product at a corner pair");
  product_cmd->add_option("a", prod.first, "First automaton")->required();
  product_cmd->add_option("b", prod.second, "Second automaton")->required();
  product_cmd->add_option("--z1", prod.z1, "Corner of the first automaton");
  product_cmd->add_option("--z2", prod.z2, "Corner of the second automaton");
  product_cmd->add_option("--sign1", prod.sign1, "Sign function of the first automaton");
  product_cmd->add_option("--sign2", prod.sign2, "Sign function of the second automaton");
  product_cmd->add_option("-o,--out", prod.out, "Result file");
  product_cmd->add_option("--product-out", prod.product_out, "Also write the product automaton");

  std::string bench_suite;
  std::string bench_out = "-";
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", bench_suite, "cerny|mazes|aperiodic|product|all")->required();
  bench_cmd->add_option("--out", bench_out, "CSV file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*info_cmd) return run_info(info_file);
    if (*sync_cmd) return run_sync(sync);
    if (*verify_cmd) return run_verify(verify_file, verify_word);
    if (*product_cmd) return run_product(prod);
    if (*bench_cmd) return run_bench(bench_suite, bench_out);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
