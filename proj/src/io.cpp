#include "syncword/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unistd.h>

namespace syncword::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::parse, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::uint64_t as_uint(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(where, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

State as_state(const Json& j, std::size_t n, const std::string& where) {
  const auto v = as_uint(j, where);
  if (v >= n) fail(where, "state " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
  return static_cast<State>(v);
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string dot_path(const std::string& where, const char* key) { return where + "." + key; }

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(x.to_string());
  return out;
}

Point point_from_json(const Json& j, std::size_t dim, const std::string& where) {
  as_array(j, where);
  if (j.size() != dim) fail(where, "expected " + std::to_string(dim) + " coordinates");
  Point p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(as_rational(j[i], at(where, i)));
  return p;
}

Json distance_to_json(std::uint32_t d) { return d == kInfinity ? Json("inf") : Json(d); }

std::uint32_t distance_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  const auto v = as_uint(j, where);
  if (v >= kInfinity) fail(where, "distance too large");
  return static_cast<std::uint32_t>(v);
}

Json word_to_json(const Word& w, const std::vector<std::string>& alphabet) {
  Json out = Json::array();
  for (Symbol c : w) {
    if (c >= alphabet.size()) throw Error(ErrorCode::invalid_word, "symbol index out of range");
    out.push_back(alphabet[c]);
  }
  return out;
}

Word word_from_json(const Json& j, const std::vector<std::string>& alphabet, const std::string& where) {
  as_array(j, where);
  Word w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto name = as_string(j[i], at(where, i));
    auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end()) fail(at(where, i), "unknown symbol '" + name + "'");
    w.push_back(static_cast<Symbol>(it - alphabet.begin()));
  }
  return w;
}

template <class T, class F>
Json list(const std::vector<T>& v, F&& f) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(f(x));
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

const char* to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::dfa: return "dfa";
    case DocumentKind::difference_dfa: return "difference_dfa";
    case DocumentKind::sign_function: return "sign_function";
    case DocumentKind::state_order: return "state_order";
    case DocumentKind::sync_result: return "sync_result";
  }
  return "dfa";
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte ? e.byte - 1 : 0);
    throw Error(ErrorCode::parse, "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  const std::string root = "document";
  if (as_string(field(j, "format_version", root), "format_version") != kFormatVersion) {
    fail("format_version", "unsupported version");
  }
  const auto kind = as_string(field(j, "kind", root), "kind");
  Document doc;
  bool known = false;
  for (auto k : {DocumentKind::dfa, DocumentKind::difference_dfa, DocumentKind::sign_function, DocumentKind::state_order,
                 DocumentKind::sync_result}) {
    if (kind == to_string(k)) {
      doc.kind = k;
      known = true;
    }
  }
  if (!known) fail("kind", "unknown document kind '" + kind + "'");
  doc.payload = field(j, "payload", root);
  if (const auto* c = optional_field(j, "comment")) doc.comment = as_string(*c, "comment");
  return doc;
}

std::string serialize_document(const Document& doc) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = to_string(doc.kind);
  if (doc.comment) j["comment"] = *doc.comment;
  j["payload"] = doc.payload;
  return j.dump(2) + "\n";
}

Json dfa_to_json(const Automaton& a) {
  Json j;
  j["n"] = a.size();
  j["alphabet"] = a.alphabet();
  Json delta = Json::array();
  for (State q = 0; q < a.size(); ++q) {
    const auto row = a.row(q);
    delta.push_back(std::vector<State>(row.begin(), row.end()));
  }
  j["delta"] = std::move(delta);
  if (a.start()) j["start"] = *a.start();
  if (a.accepting()) j["accepting"] = *a.accepting();
  if (!a.labels().empty()) j["labels"] = a.labels();
  return j;
}

Automaton dfa_from_json(const Json& j, const std::string& where) {
  const std::size_t n = as_uint(field(j, "n", where), dot_path(where, "n"));
  if (n == 0) fail(dot_path(where, "n"), "state count must be positive");
  const auto apath = dot_path(where, "alphabet");
  const Json& alpha = as_array(field(j, "alphabet", where), apath);
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < alpha.size(); ++i) alphabet.push_back(as_string(alpha[i], at(apath, i)));
  const auto dpath = dot_path(where, "delta");
  const Json& rows = as_array(field(j, "delta", where), dpath);
  if (rows.size() != n) fail(dpath, "expected " + std::to_string(n) + " rows");
  std::vector<State> delta;
  for (std::size_t q = 0; q < n; ++q) {
    const auto rpath = at(dpath, q);
    as_array(rows[q], rpath);
    if (rows[q].size() != alphabet.size()) fail(rpath, "expected " + std::to_string(alphabet.size()) + " entries");
    for (std::size_t c = 0; c < alphabet.size(); ++c) delta.push_back(as_state(rows[q][c], n, at(rpath, c)));
  }
  std::optional<State> start;
  if (const auto* s = optional_field(j, "start")) start = as_state(*s, n, dot_path(where, "start"));
  std::optional<std::vector<State>> accepting;
  if (const auto* acc = optional_field(j, "accepting")) {
    const auto path = dot_path(where, "accepting");
    as_array(*acc, path);
    accepting.emplace();
    for (std::size_t i = 0; i < acc->size(); ++i) accepting->push_back(as_state((*acc)[i], n, at(path, i)));
  }
  std::vector<std::string> labels;
  if (const auto* l = optional_field(j, "labels")) {
    const auto path = dot_path(where, "labels");
    as_array(*l, path);
    for (std::size_t i = 0; i < l->size(); ++i) labels.push_back(as_string((*l)[i], at(path, i)));
  }
  try {
    return Automaton(n, std::move(alphabet), std::move(delta), start, std::move(accepting), std::move(labels));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json difference_to_json(const DifferenceAutomaton& d) {
  Json j = dfa_to_json(d.base());
  j["dim"] = d.dim();
  j["points"] = list(d.points(), point_to_json);
  j["vectors"] = list(d.vectors(), point_to_json);
  return j;
}

DifferenceAutomaton difference_from_json(const Json& j, const std::string& where) {
  Automaton base = dfa_from_json(j, where);
  const std::size_t dim = as_uint(field(j, "dim", where), dot_path(where, "dim"));
  if (dim == 0) fail(dot_path(where, "dim"), "dimension must be positive");
  auto read_points = [&](const char* key, std::size_t count) {
    const auto path = dot_path(where, key);
    const Json& arr = as_array(field(j, key, where), path);
    if (arr.size() != count) fail(path, "expected " + std::to_string(count) + " entries");
    std::vector<Point> out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(point_from_json(arr[i], dim, at(path, i)));
    return out;
  };
  auto points = read_points("points", base.size());
  auto vectors = read_points("vectors", base.alphabet_size());
  DifferenceAutomaton d(std::move(base), dim, std::move(points), std::move(vectors));
  if (auto v = validate(d)) {
    std::string loc = where;
    if (v->state && v->symbol) {
      loc = at(at(dot_path(where, "delta"), *v->state), *v->symbol);
    } else if (v->state) {
      loc = at(dot_path(where, "points"), *v->state);
    } else if (v->symbol) {
      loc = at(dot_path(where, "vectors"), *v->symbol);
    }
    fail(loc, v->message);
  }
  return d;
}

Json sign_to_json(const SignFunction& f) {
  Json j;
  j["variant"] = to_string(f.kind());
  if (const auto* r = f.as_regular()) j["monitor"] = dfa_to_json(r->monitor);
  if (const auto* g = f.as_geometric()) {
    j["corner"] = g->certificate.corner;
    j["direction"] = g->certificate.direction;
  }
  return j;
}

SignFunction sign_from_json(const Json& j, const std::vector<std::string>& alphabet, const DifferenceAutomaton* host,
                            const std::string& where) {
  const auto variant = as_string(field(j, "variant", where), dot_path(where, "variant"));
  if (variant == "all_positive") return SignFunction::all_positive();
  if (variant == "regular") {
    Automaton monitor = dfa_from_json(field(j, "monitor", where), dot_path(where, "monitor"));
    if (monitor.alphabet() != alphabet) fail(dot_path(where, "monitor.alphabet"), "differs from the automaton's alphabet");
    if (!monitor.start() || !monitor.has_accepting()) fail(dot_path(where, "monitor"), "needs start and accepting");
    return SignFunction::regular(std::move(monitor));
  }
  if (variant == "geometric") {
    if (!host) fail(where, "geometric sign function needs a difference automaton");
    CornerCertificate cert;
    cert.corner = as_state(field(j, "corner", where), host->size(), dot_path(where, "corner"));
    const auto path = dot_path(where, "direction");
    const Json& dir = as_array(field(j, "direction", where), path);
    if (dir.size() != host->dim()) fail(path, "expected " + std::to_string(host->dim()) + " entries");
    for (std::size_t i = 0; i < dir.size(); ++i) cert.direction.push_back(as_int(dir[i], at(path, i)));
    if (!verify_corner_certificate(*host, cert)) fail(where, "corner certificate does not verify");
    return SignFunction::geometric(*host, std::move(cert));
  }
  fail(dot_path(where, "variant"), "unknown variant '" + variant + "'");
}

Json order_to_json(const StateOrder& o) {
  Json j;
  j["n"] = o.size();
  Json pairs = Json::array();
  for (auto [p, q] : o.strict_pairs()) pairs.push_back({p, q});
  j["pairs"] = std::move(pairs);
  if (o.universal()) j["universal"] = *o.universal();
  if (o.maximal()) j["maximal"] = *o.maximal();
  return j;
}

StateOrder order_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (const auto* size = optional_field(j, "n")) {
    if (as_uint(*size, dot_path(where, "n")) != n) fail(dot_path(where, "n"), "differs from the automaton's state count");
  }
  const auto path = dot_path(where, "pairs");
  const Json& arr = as_array(field(j, "pairs", where), path);
  std::vector<std::pair<State, State>> pairs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto ppath = at(path, i);
    as_array(arr[i], ppath);
    if (arr[i].size() != 2) fail(ppath, "expected a pair");
    pairs.emplace_back(as_state(arr[i][0], n, at(ppath, 0)), as_state(arr[i][1], n, at(ppath, 1)));
  }
  std::optional<State> universal;
  std::optional<State> maximal;
  if (const auto* u = optional_field(j, "universal")) universal = as_state(*u, n, dot_path(where, "universal"));
  if (const auto* m = optional_field(j, "maximal")) maximal = as_state(*m, n, dot_path(where, "maximal"));
  try {
    return StateOrder::from_pairs(n, pairs, universal, maximal);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json outcome_to_json(const SyncOutcome& o, const std::vector<std::string>& alphabet) {
  Json j;
  if (const auto* r = std::get_if<SyncResult>(&o)) {
    j["status"] = "ok";
    j["strategy"] = r->strategy;
    j["word"] = word_to_json(r->word, alphabet);
    j["word_length"] = r->word.size();
    j["target"] = r->target;
    j["bound"] = r->bound ? Json(*r->bound) : Json(nullptr);
    j["bound_is_soft"] = r->bound_is_soft;
    j["within_bound"] = r->within_bound;
    j["d"] = r->d_used;
    j["n"] = r->n_used;
    j["k"] = r->k_used;
    Json trace = Json::array();
    for (const auto& t : r->trace) {
      trace.push_back({{"loop", t.loop}, {"iteration", t.iteration}, {"chunk_length", t.chunk_length}, {"potential", t.potential}});
    }
    j["trace"] = std::move(trace);
  } else {
    const auto& c = std::get<Counterexample>(o);
    j["status"] = "counterexample";
    j["kind"] = to_string(c.kind);
    j["message"] = c.message;
    j["states"] = c.states;
    j["word"] = word_to_json(c.word, alphabet);
    j["distances"] = list(c.distances, distance_to_json);
  }
  return j;
}

SyncOutcome outcome_from_json(const Json& j, const std::vector<std::string>& alphabet, const std::string& where) {
  const auto status = as_string(field(j, "status", where), dot_path(where, "status"));
  auto uints = [&](const char* key) {
    const auto path = dot_path(where, key);
    const Json& arr = as_array(field(j, key, where), path);
    std::vector<State> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto v = as_uint(arr[i], at(path, i));
      if (v >= kInfinity) fail(at(path, i), "state index too large");
      out.push_back(static_cast<State>(v));
    }
    return out;
  };
  if (status == "ok") {
    SyncResult r;
    r.strategy = as_string(field(j, "strategy", where), dot_path(where, "strategy"));
    r.word = word_from_json(field(j, "word", where), alphabet, dot_path(where, "word"));
    r.target = uints("target");
    if (const auto* b = optional_field(j, "bound")) r.bound = as_uint(*b, dot_path(where, "bound"));
    if (const auto* s = optional_field(j, "bound_is_soft")) r.bound_is_soft = s->is_boolean() && s->get<bool>();
    if (const auto* w = optional_field(j, "within_bound")) r.within_bound = !w->is_boolean() || w->get<bool>();
    r.d_used = as_uint(field(j, "d", where), dot_path(where, "d"));
    r.n_used = as_uint(field(j, "n", where), dot_path(where, "n"));
    r.k_used = as_uint(field(j, "k", where), dot_path(where, "k"));
    const auto tpath = dot_path(where, "trace");
    const Json& trace = as_array(field(j, "trace", where), tpath);
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const auto p = at(tpath, i);
      TraceRecord t;
      t.loop = static_cast<std::uint32_t>(as_uint(field(trace[i], "loop", p), dot_path(p, "loop")));
      t.iteration = static_cast<std::uint32_t>(as_uint(field(trace[i], "iteration", p), dot_path(p, "iteration")));
      t.chunk_length = as_uint(field(trace[i], "chunk_length", p), dot_path(p, "chunk_length"));
      t.potential = as_uint(field(trace[i], "potential", p), dot_path(p, "potential"));
      r.trace.push_back(t);
    }
    return r;
  }
  if (status == "counterexample") {
    Counterexample c;
    const auto kind = as_string(field(j, "kind", where), dot_path(where, "kind"));
    bool known = false;
    for (auto k : {CounterexampleKind::not_a_corner, CounterexampleKind::unreachable, CounterexampleKind::not_synchronizable,
                   CounterexampleKind::geodesic_violation, CounterexampleKind::not_f_ordered}) {
      if (kind == to_string(k)) {
        c.kind = k;
        known = true;
      }
    }
    if (!known) fail(dot_path(where, "kind"), "unknown counterexample kind '" + kind + "'");
    c.message = as_string(field(j, "message", where), dot_path(where, "message"));
    c.states = uints("states");
    c.word = word_from_json(field(j, "word", where), alphabet, dot_path(where, "word"));
    const auto dpath = dot_path(where, "distances");
    const Json& dist = as_array(field(j, "distances", where), dpath);
    for (std::size_t i = 0; i < dist.size(); ++i) c.distances.push_back(distance_from_json(dist[i], at(dpath, i)));
    return c;
  }
  fail(dot_path(where, "status"), "expected \"ok\" or \"counterexample\"");
}

const Automaton& base_of(const AnyAutomaton& a) {
  if (const auto* d = std::get_if<DifferenceAutomaton>(&a)) return d->base();
  return std::get<Automaton>(a);
}

std::string write_dfa(const Automaton& a, std::optional<std::string> comment) {
  return serialize_document({DocumentKind::dfa, dfa_to_json(a), std::move(comment)});
}

std::string write_difference(const DifferenceAutomaton& d, std::optional<std::string> comment) {
  return serialize_document({DocumentKind::difference_dfa, difference_to_json(d), std::move(comment)});
}

std::string write_any(const AnyAutomaton& a, std::optional<std::string> comment) {
  if (const auto* d = std::get_if<DifferenceAutomaton>(&a)) return write_difference(*d, std::move(comment));
  return write_dfa(std::get<Automaton>(a), std::move(comment));
}

AnyAutomaton read_automaton(std::string_view text) {
  const Document doc = parse_document(text);
  if (doc.kind == DocumentKind::dfa) return dfa_from_json(doc.payload);
  if (doc.kind == DocumentKind::difference_dfa) return difference_from_json(doc.payload);
  fail("kind", std::string("expected dfa or difference_dfa, got ") + to_string(doc.kind));
}

std::string write_sign(const SignFunction& f) {
  return serialize_document({DocumentKind::sign_function, sign_to_json(f), std::nullopt});
}

std::string write_order(const StateOrder& o) {
  return serialize_document({DocumentKind::state_order, order_to_json(o), std::nullopt});
}

std::string write_outcome(const SyncOutcome& o, const std::vector<std::string>& alphabet) {
  return serialize_document({DocumentKind::sync_result, outcome_to_json(o, alphabet), std::nullopt});
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_atomic(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCode::invalid_argument, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::invalid_argument, "cannot replace '" + path + "'");
  }
}

}  // namespace syncword::io
