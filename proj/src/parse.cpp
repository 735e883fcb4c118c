#include "e7/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace e7 {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  MPoly run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    MPoly r = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  MPoly one() const { return MPoly(ring_, FieldElem(ring_->field(), Rational(1))); }

  MPoly expr() {
    MPoly acc(ring_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    MPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = power();
    for (;;) {
      skip();
      if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') break;
      if (accept('*')) {
        acc *= power();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        acc *= d.constant_term().inverse();
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly power() {
    MPoly base = atom();
    skip();
    bool caret = false;
    if (accept('^')) caret = true;
    else if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') {
      pos_ += 2;
      caret = true;
    }
    if (!caret) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", start);
    unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (e > 0xffff) throw ParseError("exponent too large", start);
    return base.pow(static_cast<unsigned>(e));
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (c == '-') {
      // allows "x*-2" and "(-1/2)" style signed factors
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer n(std::string(s_.substr(start, pos_ - start)));
      return MPoly(ring_, FieldElem(ring_->field(), Rational(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (auto i = ring_->index_of(name)) return MPoly::variable(ring_, *i);
      if (ring_->field().degree() > 1 && name == ring_->field().generator())
        return MPoly(ring_, FieldElem::generator(ring_->field()));
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

std::string mono_text(const Ring& ring, const Monomial& m, std::size_t gen_pow) {
  std::string out;
  auto put = [&](const std::string& name, unsigned e) {
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  };
  if (gen_pow) put(ring.field().generator(), static_cast<unsigned>(gen_pow));
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) put(ring.var(i), m[i]);
  return out;
}

}  // namespace

MPoly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

FieldElem parse_field_elem(std::string_view text, const ExtField& field) {
  auto ring = make_ring(std::vector<std::string>{}, field);
  MPoly p = parse_poly(text, ring);
  return p.constant_term();
}

std::string to_text(const MPoly& p) {
  if (p.is_zero()) return "0";
  const Ring& ring = *p.ring();
  std::string out;
  for (const auto& t : p.terms()) {
    const auto& cs = t.coeff.coords();
    for (std::size_t g = 0; g < cs.size(); ++g) {
      const Rational& c = cs[g];
      if (sgn(c) == 0) continue;
      std::string mono = mono_text(ring, t.mono, g);
      if (out.empty()) {
        if (sgn(c) < 0) out += '-';
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      Rational a = abs(c);
      if (mono.empty()) {
        out += a.get_str();
      } else if (a == 1) {
        out += mono;
      } else {
        out += a.get_str() + '*' + mono;
      }
    }
  }
  return out;
}

std::string MPoly::str() const { return ring_ ? to_text(*this) : "0"; }

DataFile DataFile::parse(std::string_view text) {
  DataFile f;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::pair<std::string, std::string>* last = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto lastc = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, lastc - first + 1);
    if (first > 0 && last) {
      last->second += ' ' + body;
      continue;
    }
    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError("bad section header on line " + std::to_string(lineno), 0);
      section = body.substr(1, body.size() - 2);
      if (!f.data_.count(section)) f.order_.push_back(section);
      f.data_[section];
      last = nullptr;
      continue;
    }
    auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value on line " + std::to_string(lineno), 0);
    std::string key = body.substr(0, eq);
    std::string val = body.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    val.erase(0, val.find_first_not_of(" \t"));
    if (!f.data_.count(section)) f.order_.push_back(section);
    auto& vec = f.data_[section];
    vec.emplace_back(key, val);
    last = &vec.back();
  }
  return f;
}

DataFile DataFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open data file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

bool DataFile::has(const std::string& section, const std::string& key) const {
  auto it = data_.find(section);
  if (it == data_.end()) return false;
  for (const auto& kv : it->second)
    if (kv.first == key) return true;
  return false;
}

const std::string& DataFile::get(const std::string& section, const std::string& key) const {
  auto it = data_.find(section);
  if (it != data_.end())
    for (const auto& kv : it->second)
      if (kv.first == key) return kv.second;
  throw AlgebraError("missing data entry [" + section + "] " + key);
}

std::vector<std::string> DataFile::keys(const std::string& section) const {
  std::vector<std::string> out;
  auto it = data_.find(section);
  if (it != data_.end())
    for (const auto& kv : it->second) out.push_back(kv.first);
  return out;
}

}  // namespace e7
