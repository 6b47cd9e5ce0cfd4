#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "flab/groups.hpp"

namespace flab {

std::size_t order_bound(std::size_t fallback) {
  if (const char* env = std::getenv("FLAB_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

Perm::Perm(std::vector<int> images) : im_(std::move(images)) {
  std::vector<bool> seen(im_.size(), false);
  for (int x : im_) {
    if (x < 0 || x >= static_cast<int>(im_.size()) || seen[x])
      throw InputError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Perm(std::move(im));
}

Perm Perm::parse_cycles(int degree, const std::string& text) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(') throw InputError("bad cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    std::string num;
    auto flush = [&] {
      if (num.empty()) return;
      int v = std::stoi(num) - 1;
      if (v < 0 || v >= degree) throw InputError("cycle point out of range: " + text);
      cyc.push_back(v);
      num.clear();
    };
    while (i < text.size() && text[i] != ')') {
      char c = text[i++];
      if (std::isdigit(static_cast<unsigned char>(c))) num.push_back(c);
      else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
      else throw InputError("bad cycle notation: " + text);
    }
    if (i >= text.size()) throw InputError("unterminated cycle: " + text);
    flush();
    ++i;
    // Cycles compose right to left; each new cycle acts first.
    std::vector<int> step(degree);
    for (int k = 0; k < degree; ++k) step[k] = k;
    for (std::size_t k = 0; k < cyc.size(); ++k) step[cyc[k]] = cyc[(k + 1) % cyc.size()];
    std::vector<int> next(degree);
    for (int k = 0; k < degree; ++k) next[k] = im[step[k]];
    im = std::move(next);
  }
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.degree() != degree()) throw InputError("degree mismatch in product");
  std::vector<int> im(im_.size());
  for (std::size_t x = 0; x < im_.size(); ++x) im[x] = im_[rhs.im_[x]];
  Perm r;
  r.im_ = std::move(im);
  return r;
}

Perm Perm::inverse() const {
  std::vector<int> im(im_.size());
  for (std::size_t x = 0; x < im_.size(); ++x) im[im_[x]] = static_cast<int>(x);
  Perm r;
  r.im_ = std::move(im);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < im_.size(); ++x)
    if (im_[x] != static_cast<int>(x)) return false;
  return true;
}

std::string Perm::cycles() const {
  std::ostringstream out;
  std::vector<bool> done(im_.size(), false);
  bool any = false;
  for (std::size_t s = 0; s < im_.size(); ++s) {
    if (done[s] || im_[s] == static_cast<int>(s)) continue;
    any = true;
    out << '(';
    std::size_t x = s;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out << ',';
      out << x + 1;
      first = false;
      x = static_cast<std::size_t>(im_[x]);
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace flab
