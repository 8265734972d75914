#include "planch/obs_parse.hpp"

#include <cctype>

namespace planch {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(byte(pos_))) ++pos_;
  }

  bool done() {
    skip_spaces();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* where) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "' " + where);
    }
  }

  bool peek_digit() {
    skip_spaces();
    return pos_ < text_.size() && std::isdigit(byte(pos_));
  }

  long read_integer() {
    skip_spaces();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(byte(pos_))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::string digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) fail("integer '" + digits + "' out of range");
    return std::stol(digits);
  }

  std::string read_name() {
    skip_spaces();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(byte(pos_))) ++pos_;
    if (start == pos_) fail("expected an observable name");
    return text_.substr(start, pos_ - start);
  }

  // Comma-separated integers, possibly empty; stops at the first byte that
  // is neither a digit nor a separating comma.
  std::vector<int> read_parts() {
    std::vector<int> parts;
    while (pos_ < text_.size() && std::isdigit(byte(pos_))) {
      parts.push_back(static_cast<int>(read_integer_raw()));
      if (pos_ < text_.size() && text_[pos_] == ',' && pos_ + 1 < text_.size() &&
          std::isdigit(byte(pos_ + 1))) {
        ++pos_;
      } else {
        break;
      }
    }
    return parts;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw usage_error("observable spec: " + message + " at position " +
                      std::to_string(pos_) + " in '" + text_ + "'");
  }

 private:
  long read_integer_raw() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(byte(pos_))) ++pos_;
    std::string digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) fail("integer '" + digits + "' out of range");
    return std::stol(digits);
  }

  unsigned char byte(size_t i) const {
    return static_cast<unsigned char>(text_[i]);
  }

  const std::string& text_;
  size_t pos_ = 0;
};

Partition parts_to_partition(Scanner& sc, std::vector<int> parts,
                             const std::string& name) {
  try {
    return Partition(std::move(parts));
  } catch (const usage_error& e) {
    sc.fail("invalid partition for '" + name + "': " + e.what());
  }
}

SymFunc read_power_arg(Scanner& sc, const std::string& name) {
  // The literal form p(r1,r2,...), a single power-sum basis element.
  std::string tag = sc.read_name();
  if (tag != "p") sc.fail("'" + name + "' takes an argument of the form p(...)");
  sc.expect('(', ("after '" + name + ":p'").c_str());
  std::vector<int> parts = sc.read_parts();
  sc.expect(')', ("closing '" + name + ":p('").c_str());
  return SymFunc::power(parts_to_partition(sc, std::move(parts), name));
}

Observable read_atom(Scanner& sc) {
  std::string name = sc.read_name();
  sc.expect(':', ("after '" + name + "'").c_str());
  if (name == "pstar") return Observable::pstar(static_cast<int>(sc.read_integer()));
  if (name == "superp") return Observable::superp(static_cast<int>(sc.read_integer()));
  if (name == "h") return Observable::h_coeff(static_cast<int>(sc.read_integer()));
  if (name == "frak") return Observable::frak_p(static_cast<int>(sc.read_integer()));
  if (name == "content") return Observable::content_g(read_power_arg(sc, name));
  if (name == "hpsi") return Observable::h_psi(read_power_arg(sc, name));
  if (name == "fmu") {
    return Observable::f_mu(parts_to_partition(sc, sc.read_parts(), name));
  }
  if (name == "fmujack") {
    return Observable::f_mu_jack(parts_to_partition(sc, sc.read_parts(), name));
  }
  if (name == "hrho") {
    return Observable::h_prod(parts_to_partition(sc, sc.read_parts(), name));
  }
  sc.fail("unknown observable '" + name + "'");
}

Observable read_term(Scanner& sc, Rat& coeff) {
  coeff = sc.accept('-') ? -1 : 1;
  std::vector<Observable> factors;
  while (true) {
    if (sc.peek_digit()) {
      long num = sc.read_integer();
      if (sc.accept('/')) {
        long den = sc.read_integer();
        if (den == 0) sc.fail("zero denominator");
        coeff *= make_rat(num, den);
      } else {
        coeff *= Rat(Int(num));
      }
    } else {
      factors.push_back(read_atom(sc));
    }
    if (!sc.accept('*')) break;
  }
  if (factors.empty()) return Observable::one();
  if (factors.size() == 1) return factors.front();
  return Observable::product(std::move(factors));
}

}  // namespace

Observable parse_observable(const std::string& spec) {
  Scanner sc(spec);
  std::vector<std::pair<Rat, Observable>> terms;
  while (true) {
    Rat coeff;
    Observable term = read_term(sc, coeff);
    terms.emplace_back(coeff, std::move(term));
    if (!sc.accept('+')) break;
  }
  if (!sc.done()) sc.fail("unexpected trailing input");
  if (terms.size() == 1 && terms.front().first == 1) {
    return terms.front().second;
  }
  return Observable::linear(std::move(terms));
}

}  // namespace planch
