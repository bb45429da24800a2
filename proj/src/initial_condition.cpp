#include "mshydro/initial_condition.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "mshydro/errors.hpp"

namespace mshydro {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t position() const { return pos_; }

  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "' before " + what, pos_);
    ++pos_;
  }

  HydroField field() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "u") return HydroField::U;
    if (name == "p") return HydroField::P;
    if (name == "s") return HydroField::S;
    if (name.empty()) throw ParseError("expected a field name (u, p or s)", start);
    throw ParseError("unknown field '" + std::string(name) + "' (expected u, p or s)", start);
  }

  int integer(std::size_t grid_size) {
    skip_space();
    const std::size_t start = pos_;
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw ParseError("mode must be a positive integer", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      throw ParseError("mode must be an integer", start);
    if (value < 1) throw ParseError("mode must be a positive integer", start);
    if (static_cast<std::size_t>(value) >= grid_size / 2)
      throw ParseError("mode " + std::to_string(value) + " must be below grid_size/2 = " +
                           std::to_string(grid_size / 2),
                       start);
    return value;
  }

  double real(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;  // from_chars rejects a leading '+'
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first || !std::isfinite(value))
      throw ParseError(std::string("expected a real number for ") + what, start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IcSpec parse_initial_condition(std::string_view text, std::size_t grid_size) {
  Cursor cur(text);
  if (cur.at_end()) throw ParseError("empty initial condition", 0);
  IcSpec ic;
  while (true) {
    IcTerm term{};
    term.field = cur.field();
    cur.expect(':', "mode");
    term.mode = cur.integer(grid_size);
    cur.expect(':', "amplitude");
    term.amplitude = cur.real("amplitude");
    if (cur.peek() == ':') {
      cur.expect(':', "phase");
      term.phase = cur.real("phase");
    }
    ic.terms.push_back(term);
    if (cur.at_end()) break;
    if (cur.peek() != ',') throw ParseError("expected ',' between terms", cur.position());
    cur.expect(',', "term");
  }
  return ic;
}

std::string to_string(const IcSpec& ic) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < ic.terms.size(); ++i) {
    const auto& t = ic.terms[i];
    if (i) os << ',';
    os << "ups"[static_cast<int>(t.field)] << ':' << t.mode << ':' << t.amplitude << ':' << t.phase;
  }
  return os.str();
}

HydroState make_state(const IcSpec& ic, std::size_t grid_size) {
  HydroState zero = HydroState::zeros(grid_size);
  std::array<std::vector<double>, 3> fields{zero.u(), zero.p(), zero.s()};
  for (const auto& t : ic.terms) {
    if (t.mode < 1 || static_cast<std::size_t>(t.mode) >= grid_size / 2)
      throw DomainError("initial-condition mode " + std::to_string(t.mode) + " not resolved on grid of " +
                        std::to_string(grid_size));
    auto& f = fields[static_cast<int>(t.field)];
    for (std::size_t j = 0; j < grid_size; ++j) f[j] += t.amplitude * std::sin(t.mode * zero.x(j) + t.phase);
  }
  return HydroState(std::move(fields[0]), std::move(fields[1]), std::move(fields[2]));
}

}  // namespace mshydro
