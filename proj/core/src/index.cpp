#include <tvf/index.hpp>

#include <cctype>

namespace tvf {

std::string rat_text(const Rat& q) { return q.str(); }

Rat rat_parse(const std::string& s) {
  try {
    Rat q(s);
    return q;
  } catch (const std::exception&) {
    throw ParseError("malformed rational: '" + s + "'");
  }
}

SignedComposition::SignedComposition(std::vector<Part> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty())
    throw DomainError("composition must have at least one part");
  for (const Part& p : parts_)
    if (p.exponent < 1)
      throw DomainError("composition exponents must be >= 1");
}

SignedComposition SignedComposition::single(int exponent, bool bar) {
  return SignedComposition({Part{exponent, bar}});
}

int SignedComposition::weight() const {
  int w = 0;
  for (const Part& p : parts_) w += p.exponent;
  return w;
}

int SignedComposition::partial_sign(int k) const {
  int a = 1;
  for (int j = 0; j < k; ++j) a *= parts_[static_cast<std::size_t>(j)].sign();
  return a;
}

SignedComposition SignedComposition::tail() const {
  if (depth() < 2) throw DomainError("tail of a depth-1 composition");
  return SignedComposition(
      std::vector<Part>(parts_.begin() + 1, parts_.end()));
}

SignedComposition SignedComposition::concat(const SignedComposition& c) const {
  std::vector<Part> ps = parts_;
  ps.insert(ps.end(), c.parts_.begin(), c.parts_.end());
  return SignedComposition(std::move(ps));
}

std::string SignedComposition::text() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i].exponent);
    if (parts_[i].bar) out += 'b';
  }
  return out;
}

std::strong_ordering SignedComposition::operator<=>(
    const SignedComposition& o) const {
  if (auto c = weight() <=> o.weight(); c != 0) return c;
  if (auto c = depth() <=> o.depth(); c != 0) return c;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (auto c = parts_[i].exponent <=> o.parts_[i].exponent; c != 0) return c;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (auto c = parts_[i].bar <=> o.parts_[i].bar; c != 0) return c;
  return std::strong_ordering::equal;
}

IntegralWord::IntegralWord(std::vector<Letter> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) throw DomainError("integral word must be nonempty");
  if (letters_.back() == Letter::W0)
    throw DomainError("integral word must not end in W0");
}

std::string IntegralWord::text() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_)
    out += (l == Letter::W0 ? '0' : l == Letter::Wp ? '+' : '-');
  return out;
}

MtvIndex::MtvIndex(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("T-index must have at least one part");
  for (int s : parts_)
    if (s < 1) throw DomainError("T-index exponents must be >= 1");
}

int MtvIndex::weight() const {
  int w = 0;
  for (int s : parts_) w += s;
  return w;
}

std::string MtvIndex::text() const {
  std::string out = "T:";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Classification classify(const SignedComposition& c) {
  return Classification{c.weight(), c.depth(), c.admissible()};
}

IntegralWord to_integral_word(const SignedComposition& c) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(c.weight()));
  int a = 1;
  for (const Part& p : c.parts()) {
    a *= p.sign();
    for (int i = 1; i < p.exponent; ++i) letters.push_back(Letter::W0);
    letters.push_back(a == 1 ? Letter::Wp : Letter::Wm);
  }
  return IntegralWord(std::move(letters));
}

SignedComposition from_integral_word(const IntegralWord& w) {
  std::vector<Part> parts;
  int run = 0;   // W0 letters in the current block
  int prev = 1;  // a_{j-1}
  for (Letter l : w.letters()) {
    if (l == Letter::W0) {
      ++run;
      continue;
    }
    const int a = (l == Letter::Wp) ? 1 : -1;
    parts.push_back(Part{run + 1, a * prev < 0});  // z_j = a_j / a_{j-1}
    prev = a;
    run = 0;
  }
  return SignedComposition(std::move(parts));
}

namespace {

[[noreturn]] void bad_token(std::string_view tok) {
  throw ParseError("bad index token: '" + std::string(tok) + "'");
}

int parse_exponent(std::string_view tok, bool* bar) {
  std::string_view digits = tok;
  *bar = false;
  if (!digits.empty() && digits.back() == 'b') {
    *bar = true;
    digits.remove_suffix(1);
  }
  if (digits.empty() || digits.size() > 9) bad_token(tok);
  long v = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_token(tok);
    v = v * 10 + (ch - '0');
  }
  if (v < 1) throw ParseError("exponent must be >= 1 in token '" +
                              std::string(tok) + "'");
  return static_cast<int>(v);
}

std::vector<std::string_view> split_parts(std::string_view body) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
      tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.remove_suffix(1);
    out.push_back(tok);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

ParsedIndex parse_index(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  if (body.empty()) throw ParseError("empty index");

  const bool mtv = body.starts_with("T:");
  if (mtv) body.remove_prefix(2);
  if (body.empty()) throw ParseError("empty part list");

  if (mtv) {
    std::vector<int> parts;
    for (std::string_view tok : split_parts(body)) {
      if (tok.empty()) throw ParseError("empty part in T-index");
      if (tok.find('b') != std::string_view::npos)
        throw ParseError("T-index parts cannot carry bars: '" +
                         std::string(tok) + "'");
      bool bar = false;
      parts.push_back(parse_exponent(tok, &bar));
    }
    return MtvIndex(std::move(parts));
  }

  std::vector<Part> parts;
  for (std::string_view tok : split_parts(body)) {
    if (tok.empty()) throw ParseError("empty part in index");
    bool bar = false;
    int e = parse_exponent(tok, &bar);
    parts.push_back(Part{e, bar});
  }
  return SignedComposition(std::move(parts));
}

}  // namespace tvf
