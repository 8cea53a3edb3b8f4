#include "kcatalan/weights.hpp"

#include <cctype>
#include <sstream>

namespace kcatalan {
namespace {

Integer tail_value(const Tail& tail, long long h) {
  switch (tail.kind) {
    case TailKind::zero:
      return 0;
    case TailKind::constant:
      return tail.param;
    case TailKind::odd_squares: {
      Integer odd = 2 * Integer(static_cast<long>(h)) + 1;
      return odd * odd;
    }
    case TailKind::geometric: {
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), tail.param.get_mpz_t(), static_cast<unsigned long>(h));
      return r;
    }
  }
  return 0;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  WeightVector parse() {
    WeightVector out;
    if (accept_word("ones")) {
      out = WeightVector::ones();
    } else if (accept_word("odd-squares")) {
      out = WeightVector::odd_squares();
    } else if (accept_word("geom:")) {
      out = WeightVector::geometric(integer());
    } else if (accept_word("list:")) {
      std::vector<Integer> prefix{integer()};
      while (accept_word(",")) prefix.push_back(integer());
      Tail tail;
      if (accept_word(";tail:")) tail = parse_tail();
      out = WeightVector(std::move(prefix), tail);
    } else {
      fail("expected 'ones', 'odd-squares', 'geom:' or 'list:'");
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  Tail parse_tail() {
    if (accept_word("zero")) return {TailKind::zero, 0};
    if (accept_word("const=")) return {TailKind::constant, integer()};
    if (accept_word("odd-squares")) return {TailKind::odd_squares, 0};
    if (accept_word("geom=")) return {TailKind::geometric, integer()};
    fail("expected tail rule 'zero', 'const=', 'odd-squares' or 'geom='");
  }

  bool accept_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  Integer integer() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token.front() == '+') token.erase(0, 1);
    return Integer(token, 10);
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::ostringstream os;
    os << "weight spec: " << message << " at position " << pos_;
    throw WeightSpecError(os.str(), pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_tail(const Tail& tail) {
  switch (tail.kind) {
    case TailKind::zero:
      return "zero";
    case TailKind::constant:
      return "const=" + tail.param.get_str();
    case TailKind::odd_squares:
      return "odd-squares";
    case TailKind::geometric:
      return "geom=" + tail.param.get_str();
  }
  return "zero";
}

}  // namespace

WeightVector::WeightVector(std::vector<Integer> prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

WeightVector WeightVector::ones() { return WeightVector({}, {TailKind::constant, 1}); }
WeightVector WeightVector::odd_squares() { return WeightVector({}, {TailKind::odd_squares, 0}); }
WeightVector WeightVector::geometric(Integer q) {
  return WeightVector({}, {TailKind::geometric, std::move(q)});
}
WeightVector WeightVector::constant(Integer c) {
  return WeightVector({}, {TailKind::constant, std::move(c)});
}

Integer WeightVector::at(long long h) const {
  if (h < 0) throw std::invalid_argument("weight index must be nonnegative");
  if (static_cast<std::size_t>(h) < prefix_.size()) return prefix_[static_cast<std::size_t>(h)];
  return tail_value(tail_, h);
}

std::vector<Integer> WeightVector::values(std::size_t count) const {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t h = 0; h < count; ++h) out.push_back(at(static_cast<long long>(h)));
  return out;
}

WeightVector WeightVector::normalized() const {
  std::vector<Integer> prefix = prefix_;
  Tail tail = tail_;
  if (tail.kind == TailKind::constant && tail.param == 0) {
    tail = {TailKind::zero, 0};
  } else if (tail.kind == TailKind::geometric && tail.param == 1) {
    tail = {TailKind::constant, 1};
  } else if (tail.kind == TailKind::geometric && tail.param == 0) {
    // 0^0 = 1 at index 0, zero afterwards.
    if (prefix.empty()) prefix.push_back(1);
    tail = {TailKind::zero, 0};
  }
  if (tail.kind != TailKind::constant && tail.kind != TailKind::geometric) tail.param = 0;
  while (!prefix.empty() &&
         prefix.back() == tail_value(tail, static_cast<long long>(prefix.size() - 1))) {
    prefix.pop_back();
  }
  return WeightVector(std::move(prefix), std::move(tail));
}

bool operator==(const WeightVector& a, const WeightVector& b) {
  const WeightVector na = a.normalized();
  const WeightVector nb = b.normalized();
  return na.prefix_ == nb.prefix_ && na.tail_ == nb.tail_;
}

WeightVector zero_from(const WeightVector& wv, long long t) {
  if (t < 0) throw std::invalid_argument("zero_from: t must be nonnegative");
  return WeightVector(wv.values(static_cast<std::size_t>(t)), {});
}

WeightVector reduce_weights(const WeightVector& wv, const Modulus& m) {
  if (wv.tail().kind != TailKind::zero) {
    throw std::invalid_argument("reduce_weights: only zero-tailed vectors can be reduced");
  }
  std::vector<Integer> prefix = wv.prefix();
  for (auto& b : prefix) reduce_in_place(b, m);
  return WeightVector(std::move(prefix), {});
}

WeightSpecError::WeightSpecError(const std::string& what, std::size_t position)
    : std::invalid_argument(what), position_(position) {}

WeightVector parse_weight_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string render_weight_spec(const WeightVector& wv) {
  const WeightVector n = wv.normalized();
  const Tail& tail = n.tail();
  if (n.prefix().empty()) {
    switch (tail.kind) {
      case TailKind::zero:
        return "list:0";
      case TailKind::constant:
        if (tail.param == 1) return "ones";
        return "list:" + tail.param.get_str() + ";tail:" + render_tail(tail);
      case TailKind::odd_squares:
        return "odd-squares";
      case TailKind::geometric:
        return "geom:" + tail.param.get_str();
    }
  }
  std::string out = "list:";
  for (std::size_t i = 0; i < n.prefix().size(); ++i) {
    if (i) out += ',';
    out += n.prefix()[i].get_str();
  }
  if (tail.kind != TailKind::zero) out += ";tail:" + render_tail(tail);
  return out;
}

}  // namespace kcatalan
