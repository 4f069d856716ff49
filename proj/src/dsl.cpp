#include "chiralkit/dsl.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace chiralkit {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < n && is_ident_char(text[j])) ++j;
      tokens.push_back({TokenKind::Identifier, std::string(text.substr(i, j - i)), {i, j}, '\0'});
      i = j;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i + 1;
      while (j < n && is_digit(text[j])) ++j;
      if (j < n && text[j] == '.' && j + 1 < n && is_digit(text[j + 1])) {
        ++j;
        while (j < n && is_digit(text[j])) ++j;
      }
      tokens.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), {i, j}, '\0'});
      i = j;
      continue;
    }
    if (c == '[') {
      std::size_t j = i + 1;
      if (j >= n || !is_ident_start(text[j]))
        throw DslError(DslErrorCode::LexicalError, {i, j}, "expected index name after '['");
      std::size_t k = j + 1;
      while (k < n && is_ident_char(text[k])) ++k;
      if (k >= n || text[k] != ']')
        throw DslError(DslErrorCode::LexicalError, {i, k}, "unterminated index bracket");
      tokens.push_back({TokenKind::BracketIndex, std::string(text.substr(j, k - j)), {i, k + 1}, '\0'});
      i = k + 1;
      continue;
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '(':
      case ')':
      case '{':
      case '}':
      case ',':
      case '.':
        tokens.push_back({TokenKind::Symbol, std::string(1, c), {i, i + 1}, c});
        ++i;
        continue;
      default:
        throw DslError(DslErrorCode::LexicalError, {i, i + 1},
                       "unrecognized byte in input (only ASCII operators, identifiers, digits, "
                       "and '#' comments are accepted)");
    }
  }
  return tokens;
}

namespace {

class HamParser {
 public:
  HamParser(std::string_view text, ParseOptions options)
      : text_(text), options_(options), tokens_(tokenize(text)) {}

  HamiltonianIR parse() {
    if (tokens_.empty())
      throw DslError(DslErrorCode::EmptyInput, {0, text_.size()}, "input contains no terms");
    HamiltonianIR ir;
    ir.terms.push_back({+1, parse_term()});
    while (!at_end()) {
      const Token& t = peek();
      int sign = 0;
      if (t.kind == TokenKind::Symbol && t.symbol == '+') sign = +1;
      if (t.kind == TokenKind::Symbol && t.symbol == '-') sign = -1;
      if (sign == 0)
        throw DslError(DslErrorCode::UnexpectedToken, t.span, "expected '+' or '-' between terms");
      ++pos_;
      ir.terms.push_back({sign, parse_term()});
    }
    return ir;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  SourceSpan end_span() const { return {text_.size(), text_.size()}; }

  const Token& expect_kind(TokenKind kind, const char* what) {
    if (at_end()) throw DslError(DslErrorCode::UnexpectedEnd, end_span(), std::string("expected ") + what);
    const Token& t = tokens_[pos_];
    if (t.kind != kind)
      throw DslError(DslErrorCode::UnexpectedToken, t.span,
                     std::string("expected ") + what + ", got '" + t.text + "'");
    ++pos_;
    return t;
  }

  void expect_symbol(char sym, const char* what) {
    if (at_end()) throw DslError(DslErrorCode::UnexpectedEnd, end_span(), std::string("expected ") + what);
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::Symbol || t.symbol != sym)
      throw DslError(DslErrorCode::UnexpectedToken, t.span,
                     std::string("expected ") + what + ", got '" + t.text + "'");
    ++pos_;
  }

  bool peek_symbol(char sym) const {
    return !at_end() && peek().kind == TokenKind::Symbol && peek().symbol == sym;
  }

  InteractionTerm parse_term() {
    InteractionTerm term;
    // coeff := ['i' '*'] IDENT
    const Token& first = expect_kind(TokenKind::Identifier, "coupling identifier");
    if (first.text == "i" && peek_symbol('*') && pos_ + 1 < tokens_.size() &&
        tokens_[pos_ + 1].kind == TokenKind::Identifier) {
      term.coupling.imaginary_unit = true;
      ++pos_;  // '*'
      term.coupling.name = expect_kind(TokenKind::Identifier, "coupling identifier").text;
    } else {
      term.coupling.name = first.text;
    }

    struct IndexUse {
      int bilinear;
      SourceSpan span;
    };
    std::map<std::string, std::vector<IndexUse>> index_uses;

    expect_symbol('*', "'*' before first factor");
    for (;;) {
      parse_factor(term, index_uses);
      if (!peek_symbol('*')) break;
      ++pos_;
    }

    for (const auto& [name, uses] : index_uses) {
      if (uses.size() == 1)
        throw DslError(DslErrorCode::UnboundIndex, uses[0].span,
                       "index '" + name + "' occurs once; contraction needs a partner");
      if (uses.size() > 2)
        throw DslError(DslErrorCode::RepeatedIndex, uses[2].span,
                       "index '" + name + "' occurs more than twice in one term");
      term.contractions.push_back({name, uses[0].bilinear, uses[1].bilinear});
    }
    term.scalars_absorbed = options_.static_propagator && !term.scalar_fields.empty();
    return term;
  }

  void parse_factor(InteractionTerm& term, auto& index_uses) {
    if (at_end()) throw DslError(DslErrorCode::UnexpectedEnd, end_span(), "expected factor");
    if (peek_symbol('(')) {
      ++pos_;
      parse_bilinear(term, index_uses);
      expect_symbol(')', "')' closing bilinear");
      return;
    }
    const Token& t = expect_kind(TokenKind::Identifier, "bilinear or scalar-field factor");
    term.scalar_fields.push_back(t.text);
  }

  void parse_bilinear(InteractionTerm& term, auto& index_uses) {
    const Token& bar = expect_kind(TokenKind::Identifier, "barred field ('Nbar' or 'ebar')");
    Species species;
    const char* closing;
    if (bar.text == "Nbar") {
      species = Species::Nucleon;
      closing = "N";
    } else if (bar.text == "ebar") {
      species = Species::Electron;
      closing = "e";
    } else {
      throw DslError(DslErrorCode::UnknownBilinear, bar.span,
                     "unknown barred field '" + bar.text + "' (expected 'Nbar' or 'ebar')");
    }

    GammaStructure structure;
    if (at_end())
      throw DslError(DslErrorCode::UnexpectedEnd, end_span(), "expected gamma structure");
    const Token& g = peek();
    if (g.kind == TokenKind::Number && g.text == "1") {
      structure.kind = GammaKind::Scalar;
      ++pos_;
    } else if (g.kind == TokenKind::Identifier && g.text == "g5") {
      structure.kind = GammaKind::Pseudoscalar;
      ++pos_;
    } else if (g.kind == TokenKind::Identifier && g.text == "g") {
      ++pos_;
      const Token& idx = expect_kind(TokenKind::BracketIndex, "'[index]' after 'g'");
      structure.kind = GammaKind::Vector;
      structure.index = idx.text;
      index_uses[idx.text].push_back(
          {static_cast<int>(term.bilinears.size()), idx.span});
      if (!at_end() && peek().kind == TokenKind::Identifier && peek().text == "g5") {
        structure.kind = GammaKind::AxialVector;
        ++pos_;
      }
    } else {
      throw DslError(DslErrorCode::UnexpectedToken, g.span,
                     "expected gamma structure '1', 'g5', or 'g[index]', got '" + g.text + "'");
    }

    const Token& field = expect_kind(TokenKind::Identifier, "field name closing the bilinear");
    if (field.text != closing)
      throw DslError(DslErrorCode::SpeciesMismatch, field.span,
                     "bilinear opened with '" + bar.text + "' must close with '" + closing +
                         "', got '" + field.text + "'");
    term.bilinears.push_back({species, structure});
  }

  std::string_view text_;
  ParseOptions options_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string render_structure(const GammaStructure& s) {
  switch (s.kind) {
    case GammaKind::Scalar: return "1";
    case GammaKind::Pseudoscalar: return "g5";
    case GammaKind::Vector: return "g[" + s.index + "]";
    case GammaKind::AxialVector: return "g[" + s.index + "] g5";
  }
  return "1";
}

std::string render_term(const InteractionTerm& term) {
  std::string out;
  if (term.coupling.imaginary_unit) out += "i*";
  out += term.coupling.name;
  for (const auto& b : term.bilinears) {
    out += "*(";
    out += (b.species == Species::Nucleon) ? "Nbar " : "ebar ";
    out += render_structure(b.structure);
    out += (b.species == Species::Nucleon) ? " N" : " e";
    out += ")";
  }
  for (const auto& s : term.scalar_fields) {
    out += "*";
    out += s;
  }
  return out;
}

}  // namespace

HamiltonianIR parse_hamiltonian(std::string_view text, ParseOptions options) {
  return HamParser(text, options).parse();
}

std::string render(const HamiltonianIR& ir) {
  if (ir.terms.empty()) throw std::logic_error("render: empty Hamiltonian");
  if (ir.terms.front().sign != +1)
    throw std::logic_error("render: leading term must carry sign +1");
  std::string out = render_term(ir.terms.front().term);
  for (std::size_t k = 1; k < ir.terms.size(); ++k) {
    out += (ir.terms[k].sign >= 0) ? " + " : " - ";
    out += render_term(ir.terms[k].term);
  }
  return out;
}

const std::vector<BuiltinHamiltonian>& builtin_library() {
  static const std::vector<BuiltinHamiltonian> lib = [] {
    const std::pair<const char*, const char*> entries[] = {
        {"H_VV", "GF*(Nbar g[mu] N)*(ebar g[mu] e)"},
        {"H_AV", "GF*(Nbar g[mu] g5 N)*(ebar g[mu] e)"},
        {"H_VA", "GF*(Nbar g[mu] N)*(ebar g[mu] g5 e)"},
        {"H_AA", "GF*(Nbar g[mu] g5 N)*(ebar g[mu] g5 e)"},
        {"H_NC",
         "GF*(Nbar g[mu] N)*(ebar g[mu] e) - GF*(Nbar g[mu] g5 N)*(ebar g[mu] e) - "
         "GF*(Nbar g[mu] N)*(ebar g[mu] g5 e) + GF*(Nbar g[mu] g5 N)*(ebar g[mu] g5 e)"},
        {"H_ax", "i*Ka*(Nbar 1 N)*(ebar g5 e)"},
    };
    std::vector<BuiltinHamiltonian> lib;
    for (const auto& [name, text] : entries)
      lib.push_back({name, text, parse_hamiltonian(text)});
    return lib;
  }();
  return lib;
}

const HamiltonianIR* find_builtin(std::string_view name) {
  for (const auto& entry : builtin_library())
    if (entry.name == name) return &entry.ir;
  return nullptr;
}

}  // namespace chiralkit
