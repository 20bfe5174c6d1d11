#include "stomap/expression.hpp"

#include <cctype>
#include <limits>

#include "stomap/constructions.hpp"
#include "stomap/error.hpp"

namespace stomap {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Diagram parse() {
    Diagram d = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError("parse error at position " + std::to_string(at) + ": " + msg, at);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "'"
                               : "expected '" + std::string(1, c) + "' before end of input");
    }
  }

  std::string_view digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  std::size_t nat() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    for (char c : digits()) {
      const std::size_t digit = static_cast<std::size_t>(c - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
        fail("number too large", start);
      }
      value = value * 10 + digit;
    }
    return value;
  }

  Scalar fraction() {
    skip_space();
    const std::size_t start = pos_;
    std::string text(digits());
    if (accept('/')) text += "/" + std::string(digits());
    try {
      Scalar value = Scalar::parse(text);
      if (!value.is_probability()) fail("probability " + text + " exceeds 1", start);
      return value;
    } catch (const DomainError& e) {
      fail(e.what(), start);
    }
  }

  Diagram expr() {
    Diagram acc = term();
    while (accept(';')) {
      const std::size_t at = pos_;
      Diagram next = term();
      if (acc.cod() != next.dom()) {
        throw ArityError("arity mismatch at position " + std::to_string(at) + ": left side has " +
                         std::to_string(acc.cod()) + " outputs, right side has " +
                         std::to_string(next.dom()) + " inputs");
      }
      acc = Diagram::compose(std::move(next), std::move(acc));
    }
    return acc;
  }

  Diagram term() {
    Diagram acc = factor();
    while (accept('*')) acc = Diagram::tensor(std::move(acc), factor());
    return acc;
  }

  Diagram factor() {
    skip_space();
    const std::size_t start = pos_;
    if (accept('(')) {
      Diagram inner = expr();
      expect(')');
      return inner;
    }
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) {
      fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                               : "unexpected end of input");
    }
    if (word == "del") return Diagram::del();
    if (word == "e") return Diagram::merge();
    if (word == "s") return Diagram::swap();
    try {
      if (word == "c") {
        expect('(');
        Scalar lambda = fraction();
        expect(')');
        return Diagram::branch(std::move(lambda));
      }
      if (word == "id" || word == "z" || word == "zinv") {
        expect('(');
        const std::size_t n = nat();
        expect(')');
        if (word == "id") return Diagram::id(n);
        return word == "z" ? z(n) : z_inv(n);
      }
      if (word == "p" || word == "iota") {
        expect('(');
        const std::size_t a = nat();
        expect(',');
        const std::size_t b = nat();
        expect(')');
        return word == "p" ? p(a, b) : iota(a, b);
      }
    } catch (const DomainError& e) {
      fail(e.what(), start);
    } catch (const IndexError& e) {
      fail(e.what(), start);
    }
    fail("unknown token '" + std::string(word) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_compose(const Diagram& d) { return std::holds_alternative<ComposeNode>(d.node()); }
bool is_tensor(const Diagram& d) { return std::holds_alternative<TensorNode>(d.node()); }

void print(const Diagram& d, std::string& out);

void print_wrapped(const Diagram& d, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(d, out);
  if (wrap) out += ')';
}

void print(const Diagram& d, std::string& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IdNode>) {
          out += "id(" + std::to_string(node.n) + ")";
        } else if constexpr (std::is_same_v<T, GenNode>) {
          switch (node.gen.kind()) {
            case GenKind::Del: out += "del"; break;
            case GenKind::E: out += "e"; break;
            case GenKind::S: out += "s"; break;
            case GenKind::C: out += "c(" + node.gen.param().to_string() + ")"; break;
          }
        } else if constexpr (std::is_same_v<T, TensorNode>) {
          print_wrapped(node.left, is_compose(node.left), out);
          out += " * ";
          print_wrapped(node.right, is_compose(node.right) || is_tensor(node.right), out);
        } else {
          // Tensors inside a composition are always bracketed for readability.
          print_wrapped(node.before, is_tensor(node.before), out);
          out += " ; ";
          print_wrapped(node.after, !std::holds_alternative<IdNode>(node.after.node()) &&
                                        !std::holds_alternative<GenNode>(node.after.node()),
                        out);
        }
      },
      d.node());
}

}  // namespace

Diagram parse_diagram(std::string_view text) { return Parser(text).parse(); }

std::string print_diagram(const Diagram& d) {
  std::string out;
  print(d, out);
  return out;
}

}  // namespace stomap
