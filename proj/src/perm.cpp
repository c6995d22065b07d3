#include "diagbase/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diagbase {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("Perm: image list is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::unchecked(std::vector<Point> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return unchecked(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return unchecked(std::move(inv));
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    Point j = static_cast<Point>(i);
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Perm::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    Point j = static_cast<Point>(i);
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    do {
      if (!first) out << ',';
      first = false;
      out << j;
      seen[j] = true;
      j = images_[j];
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::uint64_t Perm::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ images_.size();
  for (Point v : images_) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return h;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = q[p[static_cast<Point>(i)]];
  return Perm::unchecked(std::move(img));
}

Perm parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("parse_cycles: expected '('");
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t end;
      unsigned long v = std::stoul(text.substr(pos), &end);
      if (v >= degree) throw std::invalid_argument("parse_cycles: point out of range");
      cycle.push_back(static_cast<Point>(v));
      pos += end;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

}  // namespace diagbase
