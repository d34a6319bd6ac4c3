#include "osborn/perm.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "osborn/errors.hpp"

namespace osborn {

bool is_permutation_image(std::span<const Elem> image) {
  std::vector<bool> seen(image.size(), false);
  for (Elem v : image) {
    if (v >= image.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm::Perm(std::vector<Elem> image) : image_(std::move(image)) {
  if (!is_permutation_image(image_))
    throw std::invalid_argument("image sequence is not a permutation");
}

Perm Perm::identity(std::size_t n) {
  std::vector<Elem> image(n);
  std::iota(image.begin(), image.end(), Elem{0});
  return Perm(std::move(image), Trusted{});
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Elem> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[image_[i]] = static_cast<Elem>(i);
  return Perm(std::move(inv), Trusted{});
}

Perm Perm::then(const Perm& next) const {
  if (next.size() != size())
    throw PointCountMismatch("composing permutations of different degree");
  std::vector<Elem> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = next.image_[image_[i]];
  return Perm(std::move(out), Trusted{});
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> done(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = image_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm parse_perm_literal(const std::string& text) {
  std::vector<Elem> image;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t b = pos, e = comma;
    while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
    while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t')) --e;
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e, value);
    if (b == e || ec != std::errc{} || ptr != text.data() + e || value == 0)
      throw ParseError("bad permutation literal '" + text + "'");
    image.push_back(static_cast<Elem>(value - 1));
    pos = comma + 1;
  }
  if (!is_permutation_image(image))
    throw ParseError("permutation literal '" + text + "' is not a bijection");
  return Perm(std::move(image));
}

std::string perm_literal(const Perm& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[static_cast<Elem>(i)] + 1);
  }
  return out;
}

}  // namespace osborn

std::size_t std::hash<osborn::Perm>::operator()(
    const osborn::Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.image()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}
