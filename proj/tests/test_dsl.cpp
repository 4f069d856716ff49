#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "chiralkit/dsl.hpp"

using namespace chiralkit;

TEST_CASE("token spans cover exactly the non-whitespace, non-comment bytes") {
  const std::string text = "GF*(Nbar g[mu] g5 N)*(ebar g[mu] e) # trailing note\n + K2*a";
  const auto tokens = tokenize(text);
  std::set<std::size_t> covered;
  for (const auto& t : tokens) {
    CHECK(t.span.begin < t.span.end);
    CHECK(t.span.end <= text.size());
    for (std::size_t k = t.span.begin; k < t.span.end; ++k) {
      CHECK(!covered.count(k));  // non-overlapping
      covered.insert(k);
    }
  }
  bool in_comment = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    const bool whitespace = c == ' ' || c == '\t' || c == '\n' || c == '\r';
    CHECK(covered.count(k) == (!in_comment && !whitespace ? 1u : 0u));
  }
}

TEST_CASE("parsing the axial-vector interaction yields the expected structure") {
  const HamiltonianIR ir = parse_hamiltonian("GF*(Nbar g[mu] g5 N)*(ebar g[mu] e)");
  REQUIRE(ir.terms.size() == 1);
  const auto& term = ir.terms[0].term;
  CHECK(ir.terms[0].sign == +1);
  CHECK(term.coupling.name == "GF");
  CHECK(!term.coupling.imaginary_unit);
  REQUIRE(term.bilinears.size() == 2);
  CHECK(term.bilinears[0].species == Species::Nucleon);
  CHECK(term.bilinears[0].structure.kind == GammaKind::AxialVector);
  CHECK(term.bilinears[0].structure.index == "mu");
  CHECK(term.bilinears[1].species == Species::Electron);
  CHECK(term.bilinears[1].structure.kind == GammaKind::Vector);
  REQUIRE(term.contractions.size() == 1);
  CHECK(term.contractions[0] == Contraction{"mu", 0, 1});
  CHECK(term.scalar_fields.empty());
}

TEST_CASE("imaginary coupling marker and scalar-field factors") {
  const HamiltonianIR ir = parse_hamiltonian("i*Ka*(Nbar 1 N)*a*(ebar g5 e)");
  REQUIRE(ir.terms.size() == 1);
  const auto& term = ir.terms[0].term;
  CHECK(term.coupling.name == "Ka");
  CHECK(term.coupling.imaginary_unit);
  CHECK(term.scalar_fields == std::vector<std::string>{"a"});
  CHECK(term.scalars_absorbed);  // static mediator limit is the default
  CHECK(term.bilinears[0].structure.kind == GammaKind::Scalar);
  CHECK(term.bilinears[1].structure.kind == GammaKind::Pseudoscalar);

  const HamiltonianIR kept =
      parse_hamiltonian("i*Ka*(Nbar 1 N)*a*(ebar g5 e)", ParseOptions{.static_propagator = false});
  CHECK(!kept.terms[0].term.scalars_absorbed);

  // 'i' with no second identifier is a plain coupling named i.
  const HamiltonianIR plain = parse_hamiltonian("i*(Nbar 1 N)*(ebar 1 e)");
  CHECK(plain.terms[0].term.coupling.name == "i");
  CHECK(!plain.terms[0].term.coupling.imaginary_unit);
}

TEST_CASE("the four-term combination keeps its signs in order") {
  const HamiltonianIR* nc = find_builtin("H_NC");
  REQUIRE(nc != nullptr);
  REQUIRE(nc->terms.size() == 4);
  CHECK(nc->terms[0].sign == +1);
  CHECK(nc->terms[1].sign == -1);
  CHECK(nc->terms[2].sign == -1);
  CHECK(nc->terms[3].sign == +1);
}

TEST_CASE("builtin library round-trips through render and parse") {
  for (const auto& entry : builtin_library()) {
    CHECK(render(entry.ir) == entry.text);
    CHECK(parse_hamiltonian(render(entry.ir)) == entry.ir);
  }
  CHECK(find_builtin("H_missing") == nullptr);
}

TEST_CASE("comments and whitespace do not change the parse") {
  const std::string commented =
      "# weak neutral current, axial-vector piece\n"
      "GF*(Nbar g[mu] g5 N)\n"
      "  *(ebar g[mu] e)  # vector electron current\n";
  CHECK(parse_hamiltonian(commented) == *find_builtin("H_AV"));
}

namespace {

struct ExpectedError {
  const char* text;
  DslErrorCode code;
  const char* span_text;  // expected text under the span, nullptr to skip
};

}  // namespace

TEST_CASE("every rejection names a code and a span inside the input") {
  const ExpectedError cases[] = {
      {"", DslErrorCode::EmptyInput, nullptr},
      {"# nothing but a comment\n", DslErrorCode::EmptyInput, nullptr},
      {"G*(Nbar g[mu] N)", DslErrorCode::UnboundIndex, "[mu]"},
      {"G*(Nbar g[mu] N)*(ebar g[mu] e)*(Nbar g[mu] N)", DslErrorCode::RepeatedIndex, "[mu]"},
      {"G*(Nbar 1 e)", DslErrorCode::SpeciesMismatch, "e"},
      {"G*(ebar g5 N)", DslErrorCode::SpeciesMismatch, "N"},
      {"G*(xbar 1 x)", DslErrorCode::UnknownBilinear, "xbar"},
      {"G*(Nbar g5 N", DslErrorCode::UnexpectedEnd, nullptr},
      {"G*(Nbar \xE2\x8A\x97 N)", DslErrorCode::LexicalError, nullptr},
      {"G*(Nbar g N)", DslErrorCode::UnexpectedToken, nullptr},
      {"G*(Nbar 2 N)", DslErrorCode::UnexpectedToken, nullptr},
      {"G+", DslErrorCode::UnexpectedToken, nullptr},
      {"G*(Nbar g[mu N)", DslErrorCode::LexicalError, nullptr},
  };
  for (const auto& c : cases) {
    const std::string_view text = c.text;
    try {
      parse_hamiltonian(text);
      FAIL_CHECK("expected rejection of: " << c.text);
    } catch (const DslError& e) {
      CHECK(e.code() == c.code);
      CHECK(e.span().begin <= e.span().end);
      CHECK(e.span().end <= text.size());
      if (c.span_text != nullptr)
        CHECK(text.substr(e.span().begin, e.span().end - e.span().begin) == c.span_text);
    }
  }
}

namespace {

std::string random_input(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> strategy(0, 2);
  std::uniform_int_distribution<int> len(0, 60);
  std::string out;
  switch (strategy(rng)) {
    case 0: {  // raw bytes
      std::uniform_int_distribution<int> byte(1, 255);
      const int n = len(rng);
      for (int k = 0; k < n; ++k) out.push_back(static_cast<char>(byte(rng)));
      return out;
    }
    case 1: {  // token soup
      const char* vocab[] = {"GF", "i", "Nbar", "ebar", "N", "e", "g", "g5", "g[mu]", "g[nu]",
                             "1",  "(", ")",    "*",    "+", "-", "{", "}",  "#x\n",  " "};
      std::uniform_int_distribution<int> pick(0, 19);
      const int n = len(rng) / 3;
      for (int k = 0; k < n; ++k) out += vocab[pick(rng)];
      return out;
    }
    default: {  // mutated well-formed text
      out = "GF*(Nbar g[mu] g5 N)*(ebar g[mu] e) + i*Ka*(Nbar 1 N)*(ebar g5 e)";
      std::uniform_int_distribution<std::size_t> pos(0, out.size() - 1);
      std::uniform_int_distribution<int> byte(32, 126);
      for (int k = 0; k < 4; ++k) out[pos(rng)] = static_cast<char>(byte(rng));
      return out;
    }
  }
}

}  // namespace

TEST_CASE("fuzzing: parse never crashes, errors stay spanned, successes round-trip") {
  std::mt19937_64 rng(20260817);
  int parsed = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string input = random_input(rng);
    try {
      const HamiltonianIR ir = parse_hamiltonian(input);
      ++parsed;
      CHECK(parse_hamiltonian(render(ir)) == ir);
    } catch (const DslError& e) {
      CHECK(e.span().begin <= e.span().end);
      CHECK(e.span().end <= input.size());
    }
  }
  CHECK(parsed > 0);  // the mutation strategy leaves some inputs valid
}
