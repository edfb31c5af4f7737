#include "opensets/setexpr.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "opensets/enumeration.hpp"
#include "opensets/errors.hpp"

namespace opensets {

namespace {

using Kind = SetExpr::Kind;

const std::map<std::string, Kind, std::less<>>& keywords() {
  static const std::map<std::string, Kind, std::less<>> table{
      {"interval", Kind::Interval},
      {"cinterval", Kind::CInterval},
      {"union", Kind::Union},
      {"punctured", Kind::Punctured},
      {"full", Kind::Full},
      {"empty", Kind::Empty},
      {"complement-closed", Kind::ComplementClosed},
      {"tail-cover", Kind::TailCover},
      {"rational-complements", Kind::RationalComplements},
  };
  return table;
}

bool nullary(Kind kind) {
  return kind == Kind::Full || kind == Kind::Empty || kind == Kind::TailCover || kind == Kind::RationalComplements;
}

std::string_view keyword_of(Kind kind) {
  for (const auto& [name, k] : keywords()) {
    if (k == kind) return name;
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SetExpr parse_all() {
    SetExpr e = parse_expr();
    skip_space();
    if (pos_ < text_.size()) fail("trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string atom() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail("expected an atom");
    return out;
  }

  bool at_close() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_] == ')';
  }

  Rational number() {
    skip_space();
    const std::size_t line = line_, column = column_;
    const std::string token = atom();
    try {
      return Rational::parse(token);
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + token + "'", line, column);
    }
  }

  SetExpr parse_expr() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')') {
      // Forms without arguments may be written bare: full, tail-cover, ...
      const std::size_t line = line_, column = column_;
      const std::string word = atom();
      const auto it = keywords().find(word);
      if (it == keywords().end() || !nullary(it->second)) throw ParseError("expected '('", line, column);
      return SetExpr{it->second, {}, {}};
    }
    expect('(');
    skip_space();
    const std::size_t line = line_, column = column_;
    const std::string head = atom();
    const auto it = keywords().find(head);
    if (it == keywords().end()) throw ParseError("unknown form '" + head + "'", line, column);
    SetExpr e;
    e.kind = it->second;
    switch (e.kind) {
      case Kind::Interval:
      case Kind::CInterval:
        e.numbers.push_back(number());
        e.numbers.push_back(number());
        break;
      case Kind::Punctured:
        while (!at_close()) e.numbers.push_back(number());
        break;
      case Kind::Union:
        while (!at_close()) e.children.push_back(parse_expr());
        break;
      case Kind::ComplementClosed:
        e.children.push_back(parse_expr());
        break;
      default:
        break;
    }
    expect(')');
    return e;
  }
};

[[noreturn]] void wrong_kind(const SetExpr& e, const char* wanted) {
  throw std::invalid_argument("(" + std::string(keyword_of(e.kind)) + " ...) is not " + wanted);
}

OpenR4 tail_stream() {
  return OpenR4{[](std::size_t n) { return RatInterval::open(Rational(1, static_cast<long>(n) + 2), Rational(1)); }};
}

}  // namespace

SetExpr parse_set(std::string_view text) { return Parser(text).parse_all(); }

std::string print_set(const SetExpr& e) {
  std::ostringstream out;
  out << '(' << keyword_of(e.kind);
  for (const auto& q : e.numbers) out << ' ' << q.str();
  for (const auto& c : e.children) out << ' ' << print_set(c);
  out << ')';
  return out.str();
}

FinOpen to_open(const SetExpr& e) {
  switch (e.kind) {
    case Kind::Interval:
      if (!(e.numbers[0] < e.numbers[1])) return FinOpen();
      return FinOpen({RatInterval::open(e.numbers[0], e.numbers[1])});
    case Kind::Union: {
      FinOpen all;
      for (const auto& c : e.children) all = all.unite(to_open(c));
      return all;
    }
    case Kind::Punctured:
      return FinOpen::punctured(e.numbers);
    case Kind::Full:
      return FinOpen::full();
    case Kind::Empty:
      return FinOpen();
    default:
      wrong_kind(e, "a finite open set");
  }
}

FinClosed to_closed(const SetExpr& e) {
  switch (e.kind) {
    case Kind::CInterval:
      if (e.numbers[0] > e.numbers[1]) return FinClosed();
      return FinClosed({RatInterval::closed(e.numbers[0], e.numbers[1])});
    case Kind::Union: {
      FinClosed all;
      for (const auto& c : e.children) all = all.unite(to_closed(c));
      return all;
    }
    case Kind::Full:
      return FinClosed::unit();
    case Kind::Empty:
      return FinClosed();
    case Kind::ComplementClosed:
      return to_open(e.children[0]).complement();
    default:
      wrong_kind(e, "a finite closed set");
  }
}

OpenR4 to_stream(const SetExpr& e) {
  if (e.kind == Kind::TailCover) return tail_stream();
  return OpenR4::from_finopen(to_open(e));
}

ClosedRM to_closed_rm(const SetExpr& e) {
  if (e.kind == Kind::ComplementClosed) return ClosedRM{to_stream(e.children[0])};
  return ClosedRM::from_finclosed(to_closed(e));
}

R2Sequence rational_complements() {
  return [](std::size_t n) { return OpenR2::from_finopen(FinOpen::punctured(std::vector<Rational>{enumerate_rational(n)})); };
}

R2Sequence to_r2_sequence(const SetExpr& e) {
  switch (e.kind) {
    case Kind::RationalComplements:
      return rational_complements();
    case Kind::TailCover:
      return [](std::size_t n) {
        return OpenR2::from_finopen(FinOpen({RatInterval::open(Rational(1, static_cast<long>(n) + 2), Rational(1))}));
      };
    case Kind::Union: {
      std::vector<OpenR2> sets;
      for (const auto& c : e.children) sets.push_back(OpenR2::from_finopen(to_open(c)));
      return [sets](std::size_t n) { return n < sets.size() ? sets[n] : OpenR2::from_finopen(FinOpen()); };
    }
    default: {
      const OpenR2 only = OpenR2::from_finopen(to_open(e));
      return [only](std::size_t) { return only; };
    }
  }
}

R4Sequence to_r4_sequence(const SetExpr& e) {
  switch (e.kind) {
    case Kind::RationalComplements:
      return [](std::size_t n) { return OpenR4::from_finopen(FinOpen::punctured(std::vector<Rational>{enumerate_rational(n)})); };
    case Kind::TailCover:
      return [](std::size_t n) {
        return OpenR4::constant(RatInterval::open(Rational(1, static_cast<long>(n) + 2), Rational(1)));
      };
    case Kind::Union: {
      std::vector<OpenR4> sets;
      for (const auto& c : e.children) sets.push_back(to_stream(c));
      return [sets](std::size_t n) { return n < sets.size() ? sets[n] : OpenR4::from_finopen(FinOpen()); };
    }
    default: {
      const OpenR4 only = to_stream(e);
      return [only](std::size_t) { return only; };
    }
  }
}

}  // namespace opensets
