#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "syncword/generators.hpp"
#include "syncword/io.hpp"
#include "syncword/strategies.hpp"

using namespace syncword;

namespace {

std::string error_of(const std::string& text) {
  try {
    io::read_automaton(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    return e.what();
  }
  FAIL("document was accepted");
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

const char* kSmall = R"({
  "format_version": "1",
  "kind": "dfa",
  "payload": {"n": 2, "alphabet": ["a"], "delta": [[1], [0]]}
})";

}  // namespace

TEST_CASE("automata round trip") {
  for (const auto& name : fixture_names()) {
    const auto doc = io::parse_document(fixture_text(name));
    REQUIRE(io::parse_document(io::serialize_document(doc)).payload == doc.payload);
    if (doc.kind == io::DocumentKind::dfa || doc.kind == io::DocumentKind::difference_dfa) {
      const auto a = fixture(name);
      const auto again = io::read_automaton(io::write_any(a));
      REQUIRE(again.index() == a.index());
      REQUIRE(io::base_of(again) == io::base_of(a));
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto a = random_automaton(1 + seed % 9, 1 + seed % 4, seed);
    if (seed % 2) a = a.with_start(State{0}).with_accepting(std::vector<State>{static_cast<State>(seed % a.size())});
    REQUIRE(std::get<Automaton>(io::read_automaton(io::write_dfa(a))) == a);

    const auto d = maze({1 + seed % 5, 1 + seed % 4, seed, Rational(1, 4), seed % 3 != 0});
    const auto back = std::get<DifferenceAutomaton>(io::read_automaton(io::write_difference(d)));
    REQUIRE(back.base() == d.base());
    REQUIRE(back.points() == d.points());
    REQUIRE(back.vectors() == d.vectors());
  }
}

TEST_CASE("rational coordinates are written as p/q") {
  const auto e = embed_unitary(random_unitary(4, 3, 2)).automaton;
  const auto text = io::write_difference(e);
  const auto back = std::get<DifferenceAutomaton>(io::read_automaton(text));
  CHECK(back.vectors() == e.vectors());
  const auto segment =
      DifferenceAutomaton::from_geometry({{Rational(0)}, {Rational(1)}}, {{Rational(1)}, {Rational(-1)}}, {"r", "l"});
  const auto m = minimize_difference(
      segment.with_base(segment.base().with_start(State{0}).with_accepting(std::vector<State>{0, 1})));
  REQUIRE(m.size() == 1);
  const auto doc = io::parse_document(io::write_difference(m));
  CHECK(doc.payload["points"][0][0] == "1/2");
}

TEST_CASE("sign functions and orders round trip") {
  const auto g = grid(4, 3);
  const auto geometric = SignFunction::geometric(g, choose_corner(g));
  for (const auto& f : {SignFunction::all_positive(), SignFunction::regular(cerny_block_monitor(4).with_labels({})),
                        geometric}) {
    const auto alphabet = f.kind() == SignKind::regular ? cerny(4).alphabet() : g.base().alphabet();
    const auto doc = io::parse_document(io::write_sign(f));
    REQUIRE(doc.kind == io::DocumentKind::sign_function);
    const auto back = io::sign_from_json(doc.payload, alphabet, &g);
    REQUIRE(back.kind() == f.kind());
    REQUIRE(io::sign_to_json(back) == io::sign_to_json(f));
  }
  const auto z = zn_z2_counterexample(4);
  for (const auto& o : {z.order, StateOrder::star(6, 2), StateOrder::total(5).with_designated(0, 4),
                        fixture_order("fig6_order", 13)}) {
    const auto doc = io::parse_document(io::write_order(o));
    REQUIRE(io::order_from_json(doc.payload, o.size()) == o);
  }
}

TEST_CASE("outcomes round trip with infinite distances") {
  const auto c = cerny(5);
  const auto r = greedy_pairs_sync(c);
  const auto doc = io::parse_document(io::write_outcome(r, c.alphabet()));
  CHECK(doc.kind == io::DocumentKind::sync_result);
  CHECK(io::outcome_from_json(doc.payload, c.alphabet()) == r);

  Counterexample x{CounterexampleKind::unreachable, "no walk", {1, 2}, {0, 1}, {kInfinity, 3}};
  const auto text = io::write_outcome(x, c.alphabet());
  CHECK(contains(text, "\"inf\""));
  CHECK(io::outcome_from_json(io::parse_document(text).payload, c.alphabet()) == SyncOutcome{x});

  const auto g = grid(3, 3);
  const auto p = product_corner_sync(g.base(), SignFunction::all_positive(), 8, g.base(), SignFunction::all_positive(), 8);
  CHECK(io::outcome_from_json(io::parse_document(io::write_outcome(p, g.base().alphabet())).payload, g.base().alphabet()) == p);
}

TEST_CASE("errors name the offending cell") {
  std::string bad = kSmall;
  bad.replace(bad.find("[[1], [0]]"), 10, "[[1], [2]]");
  const auto msg = error_of(bad);
  CHECK(contains(msg, "payload.delta[1][0]"));
  CHECK(contains(msg, "out of range"));

  CHECK(contains(error_of(R"({"format_version": "1", "kind": "dfa", "payload": {"n": 2, "alphabet": ["a"]}})"), "delta"));
  CHECK(contains(error_of(R"({"format_version": "2", "kind": "dfa", "payload": {}})"), "format_version"));
  CHECK(contains(error_of(R"({"format_version": "1", "kind": "graph", "payload": {}})"), "kind"));
}

TEST_CASE("malformed JSON reports line and column") {
  const auto msg = error_of("{\n  \"format_version\": \"1\",\n  \"kind\": dfa\n}");
  CHECK(contains(msg, "line 3"));
  CHECK(contains(msg, "column"));
}

TEST_CASE("difference documents are validated") {
  auto doc = io::parse_document(io::write_difference(grid(2, 2)));
  doc.payload["delta"][0][0] = 3;
  const auto msg = error_of(io::serialize_document(doc));
  CHECK(contains(msg, "payload.delta[0][0]"));
}

TEST_CASE("comments pass through") {
  const auto text = io::write_dfa(cerny(3), "three states");
  const auto doc = io::parse_document(text);
  CHECK(doc.comment == std::optional<std::string>("three states"));
  CHECK(io::serialize_document(doc) == text);
  CHECK_FALSE(io::parse_document(kSmall).comment.has_value());
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / "syncword_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.json").string();
  io::write_text_atomic(path, "first\n");
  io::write_text_atomic(path, "second\n");
  CHECK(io::read_text(path) == "second\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(io::read_text((dir / "missing.json").string()), Error);
}
